#include "waypath/mission.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "waypath/blobs.hpp"
#include "waypath/planner.hpp"
#include "waypath/render.hpp"

namespace waypath {

const char* outcome_name(MissionOutcome outcome) {
    switch (outcome) {
    case MissionOutcome::Done: return "Done";
    case MissionOutcome::Trapped: return "Trapped";
    case MissionOutcome::Timeout: return "Timeout";
    }
    return "?";
}

ThetaDeg plan_initial_theta(const Scenario& scenario) {
    const GrayImage overhead = render_overhead(scenario, scenario.robot_start);
    const auto blobs = detect_blobs(overhead);
    const WorldPoint robot =
        overhead_pixel_to_world(blobs[0].centroid, scenario.camera.overhead);
    const WorldPoint target =
        overhead_pixel_to_world(blobs[1].centroid, scenario.camera.overhead);
    return theta_to_target(robot, scenario.robot_start.heading_deg, target);
}

namespace {

bool at_target(const WorldState& state, const Scenario& scenario) {
    return distance(state.pose.position, scenario.target.position) <=
           scenario.target.radius_cm;
}

} // namespace

MissionReport execute_mission(const Scenario& scenario, ThetaDeg initial_theta,
                              const MissionEvents& events) {
    validate(scenario);
    const SimParams& p = scenario.params;

    MissionReport report;
    report.initial_theta = initial_theta;

    WorldState state = WorldState::from(scenario);

    AvoidanceConfig fsm_cfg;
    fsm_cfg.threshold_cm = p.obstacle_threshold_cm;
    fsm_cfg.clearance_cm = p.clearance_cm;
    fsm_cfg.clearing_step_cm = p.forward_speed_cmps * p.dt_s;
    fsm_cfg.max_cycles = p.max_sweep_cycles;

    AvoidanceState fsm;
    fsm.active_target_theta = initial_theta;

    state.phase = Phase::TurningToTarget;
    apply_steer(state, steer_from_theta(initial_theta), scenario);
    state.phase = Phase::DrivingStraight;

    auto finish = [&](MissionOutcome outcome) {
        report.outcome = outcome;
        report.elapsed_s = state.clock_s;
        report.path_length_cm = state.path_length_cm;
        report.final_distance_cm =
            distance(state.pose.position, scenario.target.position);
        report.signaled = outcome == MissionOutcome::Done;
        if (outcome == MissionOutcome::Done) {
            state.phase = Phase::Done;
            state.log_sample();
        }
        report.trajectory = std::move(state.trajectory);
        return report;
    };

    bool was_blocked = false;
    while (state.clock_s < p.timeout_s) {
        if (at_target(state, scenario)) {
            if (events.on_target) events.on_target();
            return finish(MissionOutcome::Done);
        }

        const RangeReading reading = raycast_ultrasound(state, scenario);
        const bool blocked = reading.distance_cm < p.obstacle_threshold_cm;
        if (blocked && !was_blocked && events.on_obstacle) {
            events.on_obstacle(reading.distance_cm);
        }
        was_blocked = blocked;

        const AvoidanceState before = fsm;
        AvoidAction action;
        try {
            auto [next, act] = fsm_step(fsm, reading, fsm_cfg);
            fsm = next;
            action = act;
        } catch (const Error& e) {
            if (e.code() == Errc::Trapped) return finish(MissionOutcome::Trapped);
            throw;
        }
        report.transcript.push_back(
            transcript_line(state.clock_s, before, reading, action));

        state.phase = fsm.mode == AvoidMode::Forward ? Phase::DrivingStraight
                                                     : Phase::Avoiding;
        switch (action.kind) {
        case AvoidAction::Kind::DriveForward:
            drive_forward(state, p.dt_s, scenario);
            break;
        case AvoidAction::Kind::Turn:
            apply_steer(state, steer_from_theta(ThetaDeg{action.turn_deg}),
                        scenario);
            break;
        case AvoidAction::Kind::ResumeTarget: {
            const ThetaDeg aim =
                resume_heading(fsm, state.pose.position,
                               scenario.target.position, state.pose.heading_deg);
            fsm.active_target_theta = aim;
            state.phase = Phase::TurningToTarget;
            apply_steer(state, steer_from_theta(aim), scenario);
            state.phase = Phase::DrivingStraight;
            break;
        }
        }
    }
    return finish(MissionOutcome::Timeout);
}

MissionReport run_mission(const Scenario& scenario) {
    return execute_mission(scenario, plan_initial_theta(scenario));
}

void write_trajectory_csv(const MissionReport& report, std::ostream& out) {
    out << "t_s,x_cm,y_cm,heading_deg,phase\n";
    char buf[160];
    for (const TrajectorySample& s : report.trajectory) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.3f,%.3f,%.3f,%s\n", s.t_s,
                      s.position.x, s.position.y, s.heading_deg,
                      phase_name(s.phase));
        out << buf;
    }
}

void write_transcript(const MissionReport& report, std::ostream& out) {
    for (const std::string& line : report.transcript) out << line << "\n";
}

} // namespace waypath
