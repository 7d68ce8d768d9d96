#pragma once

#include <string>
#include <vector>

#include "waypath/geometry.hpp"
#include "waypath/grid.hpp"

namespace waypath {

struct Circle {
    WorldPoint center;
    double radius_cm = 0.0;
};

struct Pose {
    WorldPoint position;
    double heading_deg = 0.0; // compass-style: 0 = +y, clockwise positive
};

struct TargetSpec {
    WorldPoint position;
    double radius_cm = 15.0;
};

struct SimParams {
    double forward_speed_cmps = 20.0;
    double turn_rate_degps = kTurnRateDegPerSec;
    double sensor_max_range_cm = 400.0;
    double obstacle_threshold_cm = 30.0;
    double dt_s = 0.05;
    double robot_radius_cm = 10.0;
    double clearance_cm = 40.0;
    int max_sweep_cycles = 3;
    double timeout_s = 600.0;
    int sensor_rays = 3;               // cone sampling; 1 = single ray
    double sensor_cone_half_deg = 10.0;
};

struct OnboardCamera {
    int width_px = 240;
    int height_px = 180;
    double focal_px = 120.0;
    double height_cm = 25.0;
    double pitch_deg = 15.0; // downward tilt
};

struct OverheadCamera {
    int width_px = 305;
    int height_px = 305;
    double scale_px_per_cm = 1.0;
};

struct CameraModel {
    OnboardCamera onboard;
    OverheadCamera overhead;
};

/// Static world description: bounds, obstacles, lane markings, start pose,
/// target and simulation parameters. Default bounds are the square 10 ft
/// testbed (304.8 cm).
struct Scenario {
    double world_w_cm = 304.8;
    double world_h_cm = 304.8;
    std::vector<Circle> obstacles;
    std::vector<std::vector<WorldPoint>> lanes;
    Pose robot_start;
    TargetSpec target;
    SimParams params;
    CameraModel camera;
};

/// Parse a scenario from JSON text. Unknown keys are rejected; missing keys
/// fall back to the defaults above. Parse errors carry line/column
/// positions in the message.
Scenario parse_scenario(const std::string& text,
                        const std::string& origin = "<string>");
Scenario load_scenario(const std::string& path);

/// Enforce the structural invariants (positive parameters, start and target
/// clear of obstacles and inside bounds).
void validate(const Scenario& scenario);

/// Size the overhead frame to cover the world bounds at the configured
/// scale. Applied automatically when a parsed scenario gives no explicit
/// overhead image size.
void fit_overhead_to_world(Scenario& scenario);

/// Built-in lane-testbed scenario: two straight lane lines 25 cm either
/// side of the robot, used by the synthetic lane pipeline.
Scenario lane_testbed_scenario();

} // namespace waypath
