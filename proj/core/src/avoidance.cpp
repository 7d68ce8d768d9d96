#include "waypath/avoidance.hpp"

#include <cstdio>

#include "waypath/planner.hpp"

namespace waypath {

std::string to_string(const AvoidAction& action) {
    switch (action.kind) {
    case AvoidAction::Kind::DriveForward:
        return "DriveForward";
    case AvoidAction::Kind::ResumeTarget:
        return "ResumeTarget";
    case AvoidAction::Kind::Turn: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "Turn(%+g)", action.turn_deg);
        return buf;
    }
    }
    return "?";
}

std::string mode_name(const AvoidanceState& state) {
    switch (state.mode) {
    case AvoidMode::Forward:
        return "Forward";
    case AvoidMode::Clearing:
        return "Clearing";
    case AvoidMode::SweepRight:
        return "SweepRight(" + std::to_string(state.sweep_k) + ")";
    case AvoidMode::SweepLeft:
        return "SweepLeft(" + std::to_string(state.sweep_k) + ")";
    }
    return "?";
}

namespace {

AvoidAction turn(double deg) {
    return {AvoidAction::Kind::Turn, deg};
}

std::pair<AvoidanceState, AvoidAction> begin_sweep(AvoidanceState state) {
    state.mode = AvoidMode::SweepRight;
    state.sweep_k = 1;
    state.scan_offset_deg = 30.0;
    state.cleared_cm = 0.0;
    return {state, turn(+30.0)};
}

} // namespace

std::pair<AvoidanceState, AvoidAction> fsm_step(AvoidanceState state,
                                                const RangeReading& reading,
                                                const AvoidanceConfig& cfg) {
    if (reading.distance_cm <= 0.0) {
        raise(Errc::SensorFault, "fsm_step: non-positive range reading");
    }
    const bool blocked = reading.distance_cm < cfg.threshold_cm;

    switch (state.mode) {
    case AvoidMode::Forward:
        if (!blocked) return {state, {AvoidAction::Kind::DriveForward}};
        state.saved_target_theta = state.active_target_theta;
        return begin_sweep(state);

    case AvoidMode::SweepRight:
        if (!blocked) {
            state.mode = AvoidMode::Clearing;
            state.cleared_cm = cfg.clearing_step_cm;
            return {state, {AvoidAction::Kind::DriveForward}};
        }
        if (state.sweep_k < 3) {
            ++state.sweep_k;
            state.scan_offset_deg += 30.0;
            return {state, turn(+30.0)};
        }
        state.mode = AvoidMode::SweepLeft;
        state.sweep_k = 1;
        state.scan_offset_deg -= 120.0;
        return {state, turn(-120.0)};

    case AvoidMode::SweepLeft:
        if (!blocked) {
            state.mode = AvoidMode::Clearing;
            state.cleared_cm = cfg.clearing_step_cm;
            return {state, {AvoidAction::Kind::DriveForward}};
        }
        if (state.sweep_k < 3) {
            ++state.sweep_k;
            state.scan_offset_deg -= 30.0;
            return {state, turn(-30.0)};
        }
        // Full left sweep exhausted: swing back right and start over.
        ++state.cycles;
        if (state.cycles >= cfg.max_cycles) {
            raise(Errc::Trapped, "fsm_step: no clear direction after " +
                                     std::to_string(state.cycles) +
                                     " sweep cycles");
        }
        state.mode = AvoidMode::SweepRight;
        state.sweep_k = 1;
        state.scan_offset_deg += 120.0;
        return {state, turn(+120.0)};

    case AvoidMode::Clearing:
        if (state.cleared_cm >= cfg.clearance_cm) {
            state.mode = AvoidMode::Forward;
            state.sweep_k = 0;
            state.scan_offset_deg = 0.0;
            state.cleared_cm = 0.0;
            return {state, {AvoidAction::Kind::ResumeTarget}};
        }
        if (blocked) {
            // New obstacle while clearing: sweep again from this heading.
            return begin_sweep(state);
        }
        state.cleared_cm += cfg.clearing_step_cm;
        return {state, {AvoidAction::Kind::DriveForward}};
    }
    raise(Errc::BadArgument, "fsm_step: invalid state");
}

ThetaDeg resume_heading(const AvoidanceState&, WorldPoint robot,
                        WorldPoint target, double heading_deg) {
    return theta_to_target(robot, heading_deg, target);
}

std::string transcript_line(double t_s, const AvoidanceState& before,
                            const RangeReading& reading,
                            const AvoidAction& action) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.2f %s %.1f %s", t_s,
                  mode_name(before).c_str(), reading.distance_cm,
                  to_string(action).c_str());
    return buf;
}

} // namespace waypath
