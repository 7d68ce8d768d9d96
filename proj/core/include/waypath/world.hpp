#pragma once

#include <vector>

#include "waypath/avoidance.hpp"
#include "waypath/scenario.hpp"

namespace waypath {

enum class Phase { TurningToTarget, DrivingStraight, Avoiding, Done };

const char* phase_name(Phase phase);

struct TrajectorySample {
    double t_s = 0.0;
    WorldPoint position;
    double heading_deg = 0.0;
    Phase phase = Phase::TurningToTarget;
};

/// Evolving simulation state. Heading is kept in [0, 360).
struct WorldState {
    Pose pose;
    double clock_s = 0.0;
    Phase phase = Phase::TurningToTarget;
    bool collided = false;
    double path_length_cm = 0.0;
    std::vector<TrajectorySample> trajectory;

    static WorldState from(const Scenario& scenario);
    void log_sample();
};

/// Minimum distance over the sensor cone (sensor_rays rays spread across
/// +-sensor_cone_half_deg) to any obstacle circle or the world boundary,
/// capped at sensor_max_range_cm.
RangeReading raycast_ultrasound(const WorldState& state, const Scenario& scenario);

/// Timed turn in place at turn_rate. Heading integrates in dt ticks with the
/// final partial tick applied exactly, so the net change equals the
/// commanded theta. Position is unchanged; the clock advances by the
/// command duration and each tick is logged.
void apply_steer(WorldState& state, const SteerCommand& cmd, const Scenario& scenario);

/// Straight drive along the current heading in dt ticks. Motion halts at
/// contact (robot disc touching an obstacle or the boundary) and sets the
/// collision flag; contact is not an error.
void drive_forward(WorldState& state, double duration_s, const Scenario& scenario);

/// Free straight-line distance the robot disc can travel along its heading
/// before touching an obstacle or the boundary.
double free_distance_ahead(const WorldState& state, const Scenario& scenario);

/// First intersection parameter t >= 0 of ray origin+t*dir with the circle,
/// or a negative value when the ray misses.
double ray_circle_distance(WorldPoint origin, double dir_x, double dir_y,
                           const Circle& circle);

} // namespace waypath
