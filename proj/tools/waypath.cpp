// waypath: deterministic 2D navigation workbench.
//
// Subcommands: mission (closed-loop run with artifacts), lane (edge/line
// pipeline on frames), bench (straight-line vs grid-search planner
// comparison), serve (planner server), robot (robot client).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "waypath/blobs.hpp"
#include "waypath/mission.hpp"
#include "waypath/net.hpp"
#include "waypath/pipeline.hpp"
#include "waypath/planner.hpp"
#include "waypath/render.hpp"
#include "waypath/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace waypath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string scenario_path;
    std::string out_dir = "out";
    double speed = 0.0; // 0 = keep scenario value
    double dt = 0.0;
};

Scenario load_with_overrides(const CommonOpts& opts) {
    if (!fs::exists(opts.scenario_path)) {
        raise(Errc::BadScenario, "scenario not found: " + opts.scenario_path);
    }
    Scenario scenario = load_scenario(opts.scenario_path);
    if (opts.speed > 0.0) scenario.params.forward_speed_cmps = opts.speed;
    if (opts.dt > 0.0) scenario.params.dt_s = opts.dt;
    validate(scenario);
    return scenario;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) raise(Errc::BadArgument, "cannot create output directory " + dir);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::BadArgument, "cannot write " + path);
    out << text;
}

void write_mission_artifacts(const Scenario& scenario,
                             const MissionReport& report,
                             const std::string& out_dir, double wall_s) {
    ensure_dir(out_dir);
    {
        std::ofstream csv(out_dir + "/trajectory.csv", std::ios::binary);
        write_trajectory_csv(report, csv);
    }
    {
        std::ofstream txt(out_dir + "/transcript.txt", std::ios::binary);
        write_transcript(report, txt);
    }
    {
        std::ofstream svg(out_dir + "/trajectory.svg", std::ios::binary);
        write_world_svg(scenario, report, svg);
    }
    ordered_json j;
    j["stable"] = {
        {"outcome", outcome_name(report.outcome)},
        {"initial_theta_deg", report.initial_theta.deg()},
        {"elapsed_sim_s", report.elapsed_s},
        {"path_length_cm", report.path_length_cm},
        {"final_distance_cm", report.final_distance_cm},
        {"signaled", report.signaled},
        {"trajectory_samples", report.trajectory.size()},
        {"transcript_lines", report.transcript.size()},
    };
    j["volatile"] = {{"wall_time_s", wall_s}};
    write_text(out_dir + "/report.json", j.dump(2) + "\n");
}

void write_detections_json(const Scenario& scenario, const std::string& path) {
    const GrayImage overhead = render_overhead(scenario, scenario.robot_start);
    ordered_json records = ordered_json::array();
    for (const BlobDetection& blob : detect_blobs(overhead)) {
        records.push_back({
            {"label", blob.label == BlobLabel::Robot ? "robot" : "target"},
            {"h", blob.centroid.h},
            {"v", blob.centroid.v},
            {"pixel_count", blob.pixel_count},
        });
    }
    write_text(path, records.dump(2) + "\n");
}

int cmd_mission(const CommonOpts& opts, std::uint16_t port) {
    const Scenario scenario = load_with_overrides(opts);
    const auto start = std::chrono::steady_clock::now();

    // In-process loopback: planner server on one thread, robot client here.
    PlannerServer server(port, [&scenario] {
        return plan_initial_theta(scenario).deg();
    });
    server.start(1);
    const RobotClientResult client =
        run_robot_client("127.0.0.1", server.port(), scenario);
    server.stop();

    const double wall_s = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    write_mission_artifacts(scenario, client.report, opts.out_dir, wall_s);
    write_detections_json(scenario, opts.out_dir + "/detections.json");

    std::printf("outcome=%s path_length_cm=%.1f elapsed_s=%.2f theta0=%.2f\n",
                outcome_name(client.report.outcome),
                client.report.path_length_cm, client.report.elapsed_s,
                client.report.initial_theta.deg());
    return client.report.outcome == MissionOutcome::Done ? kExitOk : kExitDomain;
}

GrayImage synthetic_frame(const Scenario& scenario, double yaw_ccw_deg) {
    Pose pose = scenario.robot_start;
    pose.heading_deg -= yaw_ccw_deg;
    return render_onboard(pose, scenario);
}

int cmd_lane(const CommonOpts& opts, const std::vector<std::string>& images,
             bool synthetic, bool multi, double drift_deg) {
    ensure_dir(opts.out_dir);

    Scenario scenario;
    if (!opts.scenario_path.empty()) {
        scenario = load_with_overrides(opts);
    } else {
        scenario = lane_testbed_scenario();
    }

    std::vector<GrayImage> frames;
    if (synthetic) {
        frames.push_back(synthetic_frame(scenario, 0.0));
        if (multi) frames.push_back(synthetic_frame(scenario, drift_deg));
    } else {
        if (images.empty()) {
            raise(Errc::BadArgument, "lane: give --image or --synthetic");
        }
        for (const auto& path : images) frames.push_back(read_pgm_file(path));
    }
    if (multi && frames.size() < 2) {
        raise(Errc::BadArgument, "lane: --multi needs at least two frames");
    }

    MidlineHistory history;
    LanePipelineResult last;
    std::optional<LaneObservation> previous;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        last = run_lane_pipeline(frames[i], {}, previous);
        previous = last.lanes;
        history.push(last.lanes.midline);
        const std::string tag = frames.size() > 1 ? std::to_string(i) : "";
        write_pgm_file(last.edges, opts.out_dir + "/edges" + tag + ".pgm");
        write_pgm_file(overlay_lanes(frames[i], last.lanes),
                       opts.out_dir + "/overlay" + tag + ".pgm");
    }

    std::printf("theta_deg=%.2f\n", last.theta.deg());
    if (multi) {
        const ThetaDeg tm = theta_multi(history.previous().top,
                                        history.previous().bottom,
                                        history.current().top);
        std::printf("theta_multi_deg=%.2f\n", tm.deg());
    }
    return kExitOk;
}

int cmd_bench(const std::string& grid_path, const std::string& random_spec,
              std::uint32_t seed, int trials, double fill,
              const std::string& out_dir) {
    std::optional<OccupancyGrid> grid;
    if (!grid_path.empty()) {
        grid = OccupancyGrid::load(grid_path);
    } else if (!random_spec.empty()) {
        int cols = 0, rows = 0;
        if (std::sscanf(random_spec.c_str(), "%dx%d", &cols, &rows) != 2 ||
            cols < 1 || rows < 1) {
            raise(Errc::BadArgument, "bench: --random wants COLSxROWS");
        }
        grid = random_grid(cols, rows, 1.0, fill, seed);
    } else {
        raise(Errc::BadArgument, "bench: give --grid or --random");
    }

    const GridCell source{0, 0};
    const GridCell goal{grid->cols() - 1, grid->rows() - 1};

    ensure_dir(out_dir);
    ordered_json j;
    bool reachable = true;
    ComparisonReport report;
    try {
        report = compare_planners(*grid, source, goal, trials);
    } catch (const Error& e) {
        if (e.code() != Errc::Unreachable) throw;
        reachable = false;
    }

    if (!reachable) {
        j["stable"] = {{"reachable", false},
                       {"grid", {{"cols", grid->cols()}, {"rows", grid->rows()}}}};
        j["volatile"] = ordered_json::object();
        write_text(out_dir + "/bench.json", j.dump(2) + "\n");
        std::printf("goal unreachable on this grid\n");
        return kExitDomain;
    }

    j["stable"] = {
        {"reachable", true},
        {"grid", {{"cols", grid->cols()}, {"rows", grid->rows()}}},
        {"trials", report.trials},
        {"dijkstra", {{"mean_ops", report.dijkstra.mean_ops},
                      {"cost_cm", report.dijkstra.cost_cm}}},
        {"theta", {{"mean_ops", report.theta.mean_ops},
                   {"cost_cm", report.theta.cost_cm}}},
        {"ops_ratio", report.ops_ratio},
    };
    j["volatile"] = {
        {"dijkstra_mean_time_s", report.dijkstra.mean_time_s},
        {"theta_mean_time_s", report.theta.mean_time_s},
        {"speedup", report.speedup},
    };
    write_text(out_dir + "/bench.json", j.dump(2) + "\n");

    std::printf("planner      mean_ops      cost_cm    mean_time_s\n");
    std::printf("dijkstra   %10.0f   %10.2f   %12.3e\n",
                report.dijkstra.mean_ops, report.dijkstra.cost_cm,
                report.dijkstra.mean_time_s);
    std::printf("theta      %10.0f   %10.2f   %12.3e\n", report.theta.mean_ops,
                report.theta.cost_cm, report.theta.mean_time_s);
    std::printf("ops_ratio=%.1f speedup=%.1f\n", report.ops_ratio,
                report.speedup);
    return kExitOk;
}

int cmd_serve(const CommonOpts& opts, std::uint16_t port, int sessions) {
    const Scenario scenario = load_with_overrides(opts);
    PlannerServer server(port, [&scenario] {
        return plan_initial_theta(scenario).deg();
    });
    std::printf("listening on port %u\n", server.port());
    std::fflush(stdout);
    server.run(sessions);
    for (const SessionReport& r : server.reports()) {
        std::printf("session outcome=%s theta=%.6f received=%zu\n",
                    session_outcome_name(r.outcome), r.theta_deg,
                    r.received.size());
    }
    return kExitOk;
}

int cmd_robot(const CommonOpts& opts, const std::string& host,
              std::uint16_t port) {
    const Scenario scenario = load_with_overrides(opts);
    const auto start = std::chrono::steady_clock::now();
    const RobotClientResult client = run_robot_client(host, port, scenario);
    if (!client.protocol_ok) {
        std::fprintf(stderr, "protocol failure: %s\n", client.error.c_str());
        return kExitDomain;
    }
    const double wall_s = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    write_mission_artifacts(scenario, client.report, opts.out_dir, wall_s);
    std::printf("theta=%.6f outcome=%s\n", client.theta_received_deg,
                outcome_name(client.report.outcome));
    return client.report.outcome == MissionOutcome::Done ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"waypath: deterministic 2D robot navigation workbench"};
    app.require_subcommand(1);

    CommonOpts mission_opts;
    std::uint16_t mission_port = 0; // ephemeral loopback by default
    auto* mission = app.add_subcommand("mission", "run a closed-loop mission");
    mission->add_option("--scenario", mission_opts.scenario_path)->required();
    mission->add_option("--out", mission_opts.out_dir);
    mission->add_option("--speed", mission_opts.speed);
    mission->add_option("--dt", mission_opts.dt);
    mission->add_option("--port", mission_port);

    CommonOpts lane_opts;
    std::vector<std::string> lane_images;
    bool lane_synthetic = false;
    bool lane_multi = false;
    double lane_drift = 5.0;
    auto* lane = app.add_subcommand("lane", "run the lane pipeline on frames");
    lane->add_option("--scenario", lane_opts.scenario_path);
    lane->add_option("--out", lane_opts.out_dir);
    lane->add_option("--image", lane_images, "PGM frame(s), repeatable");
    lane->add_flag("--synthetic", lane_synthetic, "render the testbed frame");
    lane->add_flag("--multi", lane_multi, "two-frame theta");
    lane->add_option("--drift", lane_drift,
                     "synthetic yaw between frames (deg, ccw)");

    std::string bench_grid, bench_random, bench_out = "out";
    std::uint32_t bench_seed = 1;
    int bench_trials = 100;
    double bench_fill = 0.2;
    auto* bench = app.add_subcommand("bench", "compare the two planners");
    bench->add_option("--grid", bench_grid, "grid file");
    bench->add_option("--random", bench_random, "COLSxROWS random grid");
    bench->add_option("--seed", bench_seed);
    bench->add_option("--trials", bench_trials);
    bench->add_option("--fill", bench_fill, "random blocked fraction");
    bench->add_option("--out", bench_out);

    CommonOpts serve_opts;
    std::uint16_t serve_port = default_port();
    int serve_sessions = -1;
    auto* serve = app.add_subcommand("serve", "run the planner server");
    serve->add_option("--scenario", serve_opts.scenario_path)->required();
    serve->add_option("--port", serve_port);
    serve->add_option("--sessions", serve_sessions, "exit after N sessions");

    CommonOpts robot_opts;
    std::string robot_host = "127.0.0.1";
    std::uint16_t robot_port = default_port();
    auto* robot = app.add_subcommand("robot", "run the robot client");
    robot->add_option("--scenario", robot_opts.scenario_path)->required();
    robot->add_option("--host", robot_host);
    robot->add_option("--port", robot_port);
    robot->add_option("--out", robot_opts.out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*mission) return cmd_mission(mission_opts, mission_port);
        if (*lane) {
            return cmd_lane(lane_opts, lane_images, lane_synthetic, lane_multi,
                            lane_drift);
        }
        if (*bench) {
            return cmd_bench(bench_grid, bench_random, bench_seed, bench_trials,
                             bench_fill, bench_out);
        }
        if (*serve) return cmd_serve(serve_opts, serve_port, serve_sessions);
        if (*robot) return cmd_robot(robot_opts, robot_host, robot_port);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.code()) {
        case Errc::BadScenario:
        case Errc::BadArgument:
        case Errc::BadImage:
        case Errc::BadGrid:
        case Errc::BadPolygon:
            return kExitUsage;
        default:
            return kExitDomain;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return kExitUsage;
}
