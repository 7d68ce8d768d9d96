#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "waypath/world.hpp"

namespace waypath {

enum class MissionOutcome { Done, Trapped, Timeout };

const char* outcome_name(MissionOutcome outcome);

/// Observer hooks used by the robot client to stream status upstream.
struct MissionEvents {
    std::function<void(double range_cm)> on_obstacle; // fires on each detection
    std::function<void()> on_target;
};

struct MissionReport {
    MissionOutcome outcome = MissionOutcome::Timeout;
    double elapsed_s = 0.0;
    double path_length_cm = 0.0;
    double final_distance_cm = 0.0;
    ThetaDeg initial_theta;
    bool signaled = false; // arrival indication (stand-in for LEDs + sound)
    std::vector<TrajectorySample> trajectory;
    std::vector<std::string> transcript;
};

/// Overhead render -> marker detection -> back-projection -> turn toward
/// the target. This is the planning half that runs on the workstation.
ThetaDeg plan_initial_theta(const Scenario& scenario);

/// Execute from the start pose given the initial turn: steer, drive
/// straight polling the ultrasound every tick, run the sweep state machine
/// around obstacles, re-aim after clearing, stop inside the target radius.
MissionReport execute_mission(const Scenario& scenario, ThetaDeg initial_theta,
                              const MissionEvents& events = {});

/// plan_initial_theta + execute_mission in one process.
MissionReport run_mission(const Scenario& scenario);

/// "t_s,x_cm,y_cm,heading_deg,phase" rows, deterministic formatting.
void write_trajectory_csv(const MissionReport& report, std::ostream& out);
void write_transcript(const MissionReport& report, std::ostream& out);

} // namespace waypath
