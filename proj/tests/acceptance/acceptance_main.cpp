// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "waypath/avoidance.hpp"
#include "waypath/hough.hpp"
#include "waypath/mission.hpp"
#include "waypath/net.hpp"
#include "waypath/pipeline.hpp"
#include "waypath/planner.hpp"
#include "waypath/render.hpp"
#include "waypath/wire.hpp"

#ifndef WAYPATH_REPO_DIR
#define WAYPATH_REPO_DIR "."
#endif

using namespace waypath;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double budget_s;
    std::function<bool(std::string&)> body;
};

void run_criterion(const Criterion& c) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= c.budget_s) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("%s %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                c.name, elapsed, c.budget_s, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string repo(const std::string& rel) {
    return std::string(WAYPATH_REPO_DIR) + "/" + rel;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Scenario open_world() {
    Scenario s;
    s.world_w_cm = 2000.0;
    s.world_h_cm = 2000.0;
    s.robot_start = {{1000.0, 1000.0}, 0.0};
    s.target = {{1000.0, 1400.0}, 15.0};
    return s;
}

// --- 1: turn calibration ----------------------------------------------

bool turn_calibration(std::string& detail) {
    const Scenario s = open_world();
    WorldState state = WorldState::from(s);
    const SteerCommand cmd = steer_from_theta(ThetaDeg{90.0});
    apply_steer(state, cmd, s);
    const double heading = state.pose.heading_deg;
    const double took = state.clock_s;
    const SteerCommand one_deg = steer_from_theta(ThetaDeg{1.0});

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "heading=%.3f (want 90+-0.5), t=%.4fs (want 3.913+-0.05), "
                  "t(1deg)=%.5fs (want 0.0435+-0.0001)",
                  heading, took, one_deg.duration_s);
    detail = buf;
    return std::fabs(heading - 90.0) <= 0.5 &&
           std::fabs(took - 3.913) <= 0.05 &&
           std::fabs(one_deg.duration_s - 0.0435) <= 0.0001;
}

// --- 2: theta formulas vs the arctan oracle ---------------------------

bool theta_formulas(std::string& detail) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(0.0, 640.0);
    std::uniform_real_distribution<double> gap(1.0, 300.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        // Single-iteration: the reference side is vertical by construction.
        ImagePoint top{coord(rng), coord(rng)};
        ImagePoint bottom{coord(rng), coord(rng)};
        if (top.v == bottom.v) bottom.v += gap(rng);
        const double single = theta_single(top, bottom).deg();
        const double oracle_s = std::atan(std::fabs(top.h - bottom.h) /
                                          std::fabs(top.v - bottom.v)) *
                                180.0 / kPi;
        worst = std::max(worst, std::fabs(std::fabs(single) - oracle_s));
        const double mirrored =
            theta_single({2 * 320.0 - top.h, top.v},
                         {2 * 320.0 - bottom.h, bottom.v})
                .deg();
        if (single != 0.0 && std::signbit(mirrored) == std::signbit(single)) {
            detail = "single mirror sign not flipped";
            return false;
        }

        // Multi-iteration with a vertical previous midline.
        const double h = coord(rng);
        const double vt = coord(rng);
        const double vb = vt + gap(rng);
        const ImagePoint ct{coord(rng), coord(rng)};
        if (ct.h == h) continue;
        const double multi = theta_multi({h, vt}, {h, vb}, ct).deg();
        const double oracle_m =
            std::atan(std::fabs(ct.h - h) / (vb - vt)) * 180.0 / kPi;
        worst = std::max(worst, std::fabs(std::fabs(multi) - oracle_m));
        const double multi_mirror =
            theta_multi({2 * 320.0 - h, vt}, {2 * 320.0 - h, vb},
                        {2 * 320.0 - ct.h, ct.v})
                .deg();
        if (multi != 0.0 && std::signbit(multi_mirror) == std::signbit(multi)) {
            detail = "multi mirror sign not flipped";
            return false;
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "worst |error|=%.2e deg over 1000 configs",
                  worst);
    detail = buf;
    return worst <= 1e-6;
}

// --- 3: planner comparison --------------------------------------------

bool planner_comparison(std::string& detail) {
    OccupancyGrid grid(100, 100, 1.0);
    const ComparisonReport report =
        compare_planners(grid, {0, 0}, {99, 99}, 100);

    // Constant ops on the straight-line side, probed on scattered inputs.
    const std::uint64_t theta_ops = theta_plan({0, 0}, 0.0, {50, 70}).ops;
    bool constant = true;
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
    for (int i = 0; i < 100; ++i) {
        WorldPoint a{coord(rng), coord(rng)};
        WorldPoint b{coord(rng), coord(rng)};
        if (distance(a, b) < 1e-9) continue;
        if (theta_plan(a, coord(rng), b).ops != theta_ops) constant = false;
    }

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "dijkstra %.3fms/%.0f ops, theta %.1fus/%.0f ops, "
                  "time ratio %.0fx, ops constant=%d",
                  report.dijkstra.mean_time_s * 1e3, report.dijkstra.mean_ops,
                  report.theta.mean_time_s * 1e6, report.theta.mean_ops,
                  report.speedup, constant ? 1 : 0);
    detail = buf;
    return report.theta.mean_time_s <= report.dijkstra.mean_time_s / 100.0 &&
           constant && report.dijkstra.mean_ops >= 10000.0;
}

// --- 4: grid search vs exhaustive enumeration -------------------------

struct Enumerator {
    const OccupancyGrid& grid;
    std::vector<bool> visited;
    double best = std::numeric_limits<double>::infinity();

    explicit Enumerator(const OccupancyGrid& g)
        : grid(g), visited(g.cell_count(), false) {}

    void dfs(GridCell at, GridCell goal, double cost) {
        if (cost >= best) return;
        if (at == goal) {
            best = cost;
            return;
        }
        visited[grid.index(at)] = true;
        static constexpr int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
        static constexpr int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
        for (int k = 0; k < 8; ++k) {
            const GridCell next{at.col + dx[k], at.row + dy[k]};
            if (!grid.in_bounds(next) || grid.blocked(next)) continue;
            if (visited[grid.index(next)]) continue;
            if (k >= 4 && (grid.blocked({at.col + dx[k], at.row}) ||
                           grid.blocked({at.col, at.row + dy[k]}))) {
                continue;
            }
            dfs(next, goal, cost + (k >= 4 ? std::sqrt(2.0) : 1.0));
        }
        visited[grid.index(at)] = false;
    }
};

bool dijkstra_exhaustive(std::string& detail) {
    int checked = 0, unreachable = 0;
    for (int mask = 0; mask < 512; ++mask) {
        OccupancyGrid grid(3, 3, 1.0);
        for (int cell = 0; cell < 9; ++cell) {
            if (mask & (1 << cell)) grid.set_blocked({cell % 3, cell / 3}, true);
        }
        std::optional<double> expect;
        if (!grid.blocked({0, 0}) && !grid.blocked({2, 2})) {
            Enumerator en(grid);
            en.dfs({0, 0}, {2, 2}, 0.0);
            if (std::isfinite(en.best)) expect = en.best;
        }
        std::optional<double> got;
        try {
            got = dijkstra(grid, {0, 0}, {2, 2}).cost_cm;
        } catch (const Error& e) {
            if (e.code() != Errc::Unreachable) throw;
        }
        if (expect.has_value() != got.has_value()) {
            detail = "reachability mismatch at mask " + std::to_string(mask);
            return false;
        }
        if (expect && std::fabs(*expect - *got) > 1e-9) {
            detail = "cost mismatch at mask " + std::to_string(mask);
            return false;
        }
        ++checked;
        if (!expect) ++unreachable;
    }
    detail = std::to_string(checked) + " configurations, " +
             std::to_string(unreachable) + " unreachable";
    return checked == 512;
}

// --- 5: line recovery over a sweep of angles --------------------------

bool hough_recovery(std::string& detail) {
    const int size = 200;
    double worst_rho = 0.0, worst_theta = 0.0;
    for (int step = 0; step < 36; ++step) {
        const double theta0 = 5.0 * step;
        const double rad = rad_from_deg(theta0);
        const double ct = std::cos(rad), st = std::sin(rad);
        const double rho0 = (size / 2.0) * ct + (size / 2.0) * st;
        GrayImage edges(size, size, 0);
        for (int v = 0; v < size; ++v) {
            for (int h = 0; h < size; ++h) {
                if (std::fabs(h * ct + v * st - rho0) <= 0.5) edges.at(h, v) = 255;
            }
        }
        const auto lines = hough_lines(edges, 1.0, 1.0, 60);
        if (lines.empty()) {
            detail = "no line found at " + std::to_string(theta0) + " deg";
            return false;
        }
        // (rho, theta) and (-rho, theta+-180) name the same line.
        double dt = std::fabs(lines[0].theta_deg - theta0);
        double dr = std::fabs(lines[0].rho - rho0);
        if (dt > 90.0) {
            dt = 180.0 - dt;
            dr = std::fabs(lines[0].rho + rho0);
        }
        worst_theta = std::max(worst_theta, dt);
        worst_rho = std::max(worst_rho, dr);
    }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "worst drho=%.2fpx dtheta=%.2fdeg",
                  worst_rho, worst_theta);
    detail = buf;
    return worst_rho <= 2.0 && worst_theta <= 2.0;
}

// --- 6: lane pipeline end to end ---------------------------------------

bool lane_pipeline(std::string& detail) {
    const Scenario s = lane_testbed_scenario();

    const double aligned =
        run_lane_pipeline(render_onboard(s.robot_start, s)).theta.deg();

    // Yaw is counterclockwise-positive world rotation; compass heading is
    // its negation. A +10 yaw makes the road recede right of the camera
    // axis, so the steering angle is positive.
    Pose ccw = s.robot_start;
    ccw.heading_deg = -10.0;
    const double yaw_pos = run_lane_pipeline(render_onboard(ccw, s)).theta.deg();

    Pose cw = s.robot_start;
    cw.heading_deg = 10.0;
    const double yaw_neg = run_lane_pipeline(render_onboard(cw, s)).theta.deg();

    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "aligned=%.2f (want 0+-2), yaw+10=%.2f (>0), yaw-10=%.2f (<0)",
                  aligned, yaw_pos, yaw_neg);
    detail = buf;
    return std::fabs(aligned) <= 2.0 && yaw_pos > 0.0 && yaw_neg < 0.0;
}

// --- 7: avoidance transcripts -------------------------------------------

std::string scripted_transcript(const std::vector<double>& readings,
                                const AvoidanceConfig& cfg) {
    AvoidanceState state;
    std::string transcript;
    for (std::size_t k = 0; k < readings.size(); ++k) {
        const RangeReading reading{readings[k], 400.0};
        const AvoidanceState before = state;
        auto [next, action] = fsm_step(state, reading, cfg);
        state = next;
        transcript += transcript_line(k * 0.05, before, reading, action);
        transcript += "\n";
    }
    return transcript;
}

bool avoidance_transcripts(std::string& detail) {
    AvoidanceConfig blocked_cfg;
    blocked_cfg.max_cycles = 10;
    const std::string blocked =
        scripted_transcript(std::vector<double>(19, 25.0), blocked_cfg);
    const std::string golden_blocked =
        read_file(repo("tests/golden/avoidance_always_blocked.txt"));

    AvoidanceConfig clear_cfg;
    clear_cfg.clearing_step_cm = 40.0;
    clear_cfg.clearance_cm = 40.0;
    const std::string clear =
        scripted_transcript({25.0, 25.0, 200.0, 200.0}, clear_cfg);
    const std::string golden_clear =
        read_file(repo("tests/golden/avoidance_clear_second_probe.txt"));

    if (golden_blocked.empty() || golden_clear.empty()) {
        detail = "golden transcripts missing";
        return false;
    }
    if (blocked != golden_blocked) {
        detail = "always-blocked transcript diverges from golden";
        return false;
    }
    if (clear != golden_clear) {
        detail = "clear-on-second-probe transcript diverges from golden";
        return false;
    }
    detail = "both transcripts byte-exact";
    return true;
}

// --- 8: end-to-end mission ----------------------------------------------

bool mission_end_to_end(std::string& detail) {
    const Scenario s = load_scenario(repo("scenarios/one_obstacle.json"));
    const MissionReport a = run_mission(s);
    const MissionReport b = run_mission(s);

    std::ostringstream csv_a, csv_b;
    write_trajectory_csv(a, csv_a);
    write_trajectory_csv(b, csv_b);

    double min_clearance = 1e9;
    for (const TrajectorySample& sample : a.trajectory) {
        for (const Circle& c : s.obstacles) {
            min_clearance = std::min(min_clearance,
                                     distance(sample.position, c.center) -
                                         c.radius_cm - s.params.robot_radius_cm);
        }
    }

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "outcome=%s final=%.1fcm path=%.1fcm (<=550) "
                  "min_clearance=%.3fcm identical=%d",
                  outcome_name(a.outcome), a.final_distance_cm,
                  a.path_length_cm, min_clearance,
                  csv_a.str() == csv_b.str() ? 1 : 0);
    detail = buf;
    return a.outcome == MissionOutcome::Done &&
           a.final_distance_cm <= s.target.radius_cm &&
           a.path_length_cm <= 550.0 && min_clearance >= -1e-6 &&
           csv_a.str() == csv_b.str();
}

// --- 9: protocol round trip and session ordering ------------------------

bool protocol_round_trip(std::string& detail) {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<long> micro(-180'000'000, 180'000'000);
    std::uniform_int_distribution<int> len(0, 20);
    std::uniform_int_distribution<int> ch('a', 'z');
    for (int i = 0; i < 1000; ++i) {
        WireMessage m;
        switch (kind(rng)) {
        case 0: m = WireMessage::theta(micro(rng) / 1e6); break;
        case 1: m = WireMessage::range(std::abs(micro(rng)) / 1e6); break;
        case 2: m = WireMessage::target_found(); break;
        case 3: m = WireMessage::lane_lost(); break;
        case 4: m = WireMessage::done(); break;
        default: {
            std::string text;
            for (int k = len(rng); k > 0; --k) text.push_back(char(ch(rng)));
            m = WireMessage::error(text);
        }
        }
        if (!(decode(encode(m)) == m)) {
            detail = "round trip mismatch at i=" + std::to_string(i);
            return false;
        }
    }

    // Loopback session over the one-obstacle world.
    const Scenario s = load_scenario(repo("scenarios/one_obstacle.json"));
    PlannerServer server(0, [&s] { return plan_initial_theta(s).deg(); });
    server.start(1);
    const RobotClientResult client =
        run_robot_client("127.0.0.1", server.port(), s);
    server.stop();

    if (!client.protocol_ok) {
        detail = "client protocol failure: " + client.error;
        return false;
    }
    const auto reports = server.reports();
    if (reports.size() != 1) {
        detail = "expected one session";
        return false;
    }
    int sent_thetas = 0;
    for (const auto& line : reports[0].log) {
        if (line.find("SENT THETA") != std::string::npos) ++sent_thetas;
    }
    const auto& received = reports[0].received;
    bool saw_range = false, saw_target = false, saw_done = false;
    for (const auto& m : received) {
        if (m.type == MsgType::Range) {
            saw_range = true;
            if (saw_done) {
                detail = "RANGE after DONE";
                return false;
            }
        }
        if (m.type == MsgType::TargetFound) saw_target = true;
        if (m.type == MsgType::Done) {
            if (!saw_target) {
                detail = "DONE before TARGET_FOUND";
                return false;
            }
            saw_done = true;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "1000 round trips ok; session: thetas=%d range=%d target=%d "
                  "done=%d outcome=%s",
                  sent_thetas, saw_range ? 1 : 0, saw_target ? 1 : 0,
                  saw_done ? 1 : 0, session_outcome_name(reports[0].outcome));
    detail = buf;
    return sent_thetas == 1 && saw_range && saw_target && saw_done &&
           reports[0].outcome == SessionReport::Outcome::Completed;
}

} // namespace

int main() {
    std::printf("=== waypath acceptance suite ===\n");
    const std::vector<Criterion> criteria = {
        {"turn-calibration", 1.0, turn_calibration},
        {"theta-formulas", 1.0, theta_formulas},
        {"planner-comparison", 30.0, planner_comparison},
        {"dijkstra-exhaustive", 10.0, dijkstra_exhaustive},
        {"hough-recovery", 30.0, hough_recovery},
        {"lane-pipeline", 10.0, lane_pipeline},
        {"avoidance-transcripts", 1.0, avoidance_transcripts},
        {"mission-end-to-end", 10.0, mission_end_to_end},
        {"protocol-round-trip", 5.0, protocol_round_trip},
    };
    for (const Criterion& c : criteria) run_criterion(c);

    if (failures == 0) {
        std::printf("all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
