#pragma once

#include <string>
#include <utility>

#include "waypath/geometry.hpp"
#include "waypath/grid.hpp"

namespace waypath {

/// One ultrasound sample. distance_cm == max_range_cm means nothing was hit.
struct RangeReading {
    double distance_cm = 0.0;
    double max_range_cm = 400.0;
};

enum class AvoidMode { Forward, SweepRight, SweepLeft, Clearing };

struct AvoidanceConfig {
    double threshold_cm = 30.0;  // strictly-less means blocked
    double clearance_cm = 40.0;  // distance driven before re-aiming
    double clearing_step_cm = 1.0; // credit per DriveForward while clearing
    int max_cycles = 3;          // full right+left sweeps before Trapped
};

struct AvoidanceState {
    AvoidMode mode = AvoidMode::Forward;
    int sweep_k = 0; // 1..3 while sweeping
    ThetaDeg saved_target_theta;
    ThetaDeg active_target_theta; // latest steering theta, saved on detection
    double scan_offset_deg = 0.0; // relative to heading at first detection
    double cleared_cm = 0.0;
    int cycles = 0; // completed full sweep cycles (left wrap events)
};

struct AvoidAction {
    enum class Kind { DriveForward, Turn, ResumeTarget };
    Kind kind = Kind::DriveForward;
    double turn_deg = 0.0;
};

std::string to_string(const AvoidAction& action);
std::string mode_name(const AvoidanceState& state);

/// One transition of the sweep state machine.
///
/// Blocked (reading < threshold): Forward saves the active target theta and
/// starts a right sweep; right probes advance in +30 steps to 90, then a
/// -120 swing starts the left sweep; left probes advance in -30 steps to
/// -90, then a +120 swing wraps back to the right and counts one cycle.
/// Clear (reading >= threshold): sweeping states enter Clearing; Clearing
/// accrues clearing_step_cm per step and emits ResumeTarget once
/// clearance_cm has been covered. A blocked reading while clearing restarts
/// the sweep from the current heading. After max_cycles wraps the machine
/// raises Trapped; invalid readings (<= 0) raise SensorFault.
std::pair<AvoidanceState, AvoidAction> fsm_step(AvoidanceState state,
                                                const RangeReading& reading,
                                                const AvoidanceConfig& cfg = {});

/// Turn that re-aims the robot at the target once clearing completed. The
/// bearing is recomputed from the current pose; the theta saved at
/// detection stays in the state for the transcript.
ThetaDeg resume_heading(const AvoidanceState& state, WorldPoint robot,
                        WorldPoint target, double heading_deg);

/// Transcript line: "t_s mode distance_cm action".
std::string transcript_line(double t_s, const AvoidanceState& before,
                            const RangeReading& reading,
                            const AvoidAction& action);

} // namespace waypath
