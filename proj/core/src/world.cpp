#include "waypath/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace waypath {

const char* phase_name(Phase phase) {
    switch (phase) {
    case Phase::TurningToTarget: return "TurningToTarget";
    case Phase::DrivingStraight: return "DrivingStraight";
    case Phase::Avoiding: return "Avoiding";
    case Phase::Done: return "Done";
    }
    return "?";
}

WorldState WorldState::from(const Scenario& scenario) {
    WorldState state;
    state.pose = scenario.robot_start;
    state.pose.heading_deg = std::fmod(state.pose.heading_deg, 360.0);
    if (state.pose.heading_deg < 0) state.pose.heading_deg += 360.0;
    state.log_sample();
    return state;
}

void WorldState::log_sample() {
    trajectory.push_back({clock_s, pose.position, pose.heading_deg, phase});
}

namespace {

// Compass heading -> unit direction (x east, y north).
void heading_dir(double heading_deg, double& dx, double& dy) {
    const double rad = rad_from_deg(heading_deg);
    dx = std::sin(rad);
    dy = std::cos(rad);
}

// Distance along the ray to the world boundary (robot is inside).
double ray_boundary_distance(WorldPoint origin, double dx, double dy,
                             double w, double h, double inset) {
    double best = std::numeric_limits<double>::infinity();
    if (dx > 0) best = std::min(best, (w - inset - origin.x) / dx);
    if (dx < 0) best = std::min(best, (inset - origin.x) / dx);
    if (dy > 0) best = std::min(best, (h - inset - origin.y) / dy);
    if (dy < 0) best = std::min(best, (inset - origin.y) / dy);
    return std::max(best, 0.0);
}

} // namespace

double ray_circle_distance(WorldPoint origin, double dir_x, double dir_y,
                           const Circle& circle) {
    const double cx = circle.center.x - origin.x;
    const double cy = circle.center.y - origin.y;
    const double proj = cx * dir_x + cy * dir_y;
    const double closest_sq = cx * cx + cy * cy - proj * proj;
    const double r_sq = circle.radius_cm * circle.radius_cm;
    if (closest_sq > r_sq) return -1.0;
    const double half_chord = std::sqrt(r_sq - closest_sq);
    const double t_near = proj - half_chord;
    if (t_near >= 0.0) return t_near;
    const double t_far = proj + half_chord;
    if (t_far >= 0.0) return 0.0; // origin inside the circle
    return -1.0;                  // circle behind the ray
}

RangeReading raycast_ultrasound(const WorldState& state, const Scenario& scenario) {
    const SimParams& p = scenario.params;
    double reading = p.sensor_max_range_cm;

    const int rays = std::max(1, p.sensor_rays);
    for (int i = 0; i < rays; ++i) {
        const double offset =
            rays == 1 ? 0.0
                      : -p.sensor_cone_half_deg +
                            2.0 * p.sensor_cone_half_deg * i / (rays - 1);
        double dx, dy;
        heading_dir(state.pose.heading_deg + offset, dx, dy);

        for (const Circle& c : scenario.obstacles) {
            const double t = ray_circle_distance(state.pose.position, dx, dy, c);
            if (t >= 0.0) reading = std::min(reading, t);
        }
        reading = std::min(
            reading, ray_boundary_distance(state.pose.position, dx, dy,
                                           scenario.world_w_cm,
                                           scenario.world_h_cm, 0.0));
    }
    return {reading, p.sensor_max_range_cm};
}

void apply_steer(WorldState& state, const SteerCommand& cmd, const Scenario& scenario) {
    const SimParams& p = scenario.params;
    const double sign = cmd.theta.deg() < 0 ? -1.0 : 1.0;
    double remaining = cmd.duration_s;
    while (remaining > 0.0) {
        const double tick = std::min(remaining, p.dt_s);
        state.pose.heading_deg += sign * p.turn_rate_degps * tick;
        state.pose.heading_deg = std::fmod(state.pose.heading_deg, 360.0);
        if (state.pose.heading_deg < 0) state.pose.heading_deg += 360.0;
        state.clock_s += tick;
        remaining -= tick;
        state.log_sample();
    }
}

double free_distance_ahead(const WorldState& state, const Scenario& scenario) {
    const SimParams& p = scenario.params;
    double dx, dy;
    heading_dir(state.pose.heading_deg, dx, dy);

    double free = ray_boundary_distance(state.pose.position, dx, dy,
                                        scenario.world_w_cm, scenario.world_h_cm,
                                        p.robot_radius_cm);
    for (const Circle& c : scenario.obstacles) {
        // Contact happens when the robot disc touches the obstacle: intersect
        // against the obstacle grown by the robot radius.
        Circle grown{c.center, c.radius_cm + p.robot_radius_cm};
        const double t = ray_circle_distance(state.pose.position, dx, dy, grown);
        if (t >= 0.0) free = std::min(free, t);
    }
    return std::max(free, 0.0);
}

void drive_forward(WorldState& state, double duration_s, const Scenario& scenario) {
    if (duration_s < 0.0) raise(Errc::BadArgument, "drive_forward: negative duration");
    const SimParams& p = scenario.params;
    double dx, dy;
    heading_dir(state.pose.heading_deg, dx, dy);

    double budget = free_distance_ahead(state, scenario);
    double remaining = duration_s;
    while (remaining > 0.0) {
        const double tick = std::min(remaining, p.dt_s);
        const double want = p.forward_speed_cmps * tick;
        const double step = std::min(want, budget);
        state.pose.position.x += dx * step;
        state.pose.position.y += dy * step;
        state.path_length_cm += step;
        budget -= step;
        if (step < want) state.collided = true;
        state.clock_s += tick;
        remaining -= tick;
        state.log_sample();
        if (budget <= 0.0 && remaining > 0.0) {
            // Pinned against the contact point; no further motion this call.
            state.collided = true;
            state.clock_s += remaining;
            state.log_sample();
            break;
        }
    }
}

} // namespace waypath
