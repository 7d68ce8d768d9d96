#pragma once

#include <cstdint>
#include <vector>

#include "waypath/geometry.hpp"
#include "waypath/grid.hpp"

namespace waypath {

/// Smallest signed turn aligning `heading_deg` (compass-style: 0 = +y,
/// clockwise positive) with the bearing from robot to target. Result in
/// (-180, 180].
ThetaDeg theta_to_target(WorldPoint robot, double heading_deg,
                         WorldPoint target);

struct PlanResult {
    std::vector<WorldPoint> path;
    double cost_cm = 0.0;
    std::uint64_t ops = 0;   // deterministic elementary-operation count
    double wall_time_s = 0.0;
};

/// Minimum-cost path over the 8-connected grid (orthogonal step 1, diagonal
/// sqrt(2), in cell units times cell_size). Diagonal moves require both
/// adjacent orthogonal cells free. ops counts queue pushes, pops and edge
/// relaxations. Ties resolve by cost then cell index, so paths are
/// deterministic. Raises Unreachable when no path exists (including blocked
/// endpoints).
PlanResult dijkstra(const OccupancyGrid& grid, GridCell source, GridCell goal);

/// Straight-line plan: path is [robot, target], cost the Euclidean
/// distance. ops is the fixed count of arithmetic steps (dx, dy, dx^2,
/// dy^2, their sum, the square root, the bearing atan2, the degree
/// conversion and the turn normalization), identical for every input.
PlanResult theta_plan(WorldPoint robot, double heading_deg, WorldPoint target);

struct PlannerStats {
    double mean_time_s = 0.0;
    double mean_ops = 0.0;
    double cost_cm = 0.0;
};

/// Both planners run `trials` times between the same endpoints (cell
/// centers for the straight-line side). speedup = dijkstra time / theta
/// time; ops_ratio likewise. When source equals goal both planners
/// trivially report cost 0 and the ratios are 1.
struct ComparisonReport {
    PlannerStats dijkstra;
    PlannerStats theta;
    double speedup = 1.0;
    double ops_ratio = 1.0;
    int trials = 0;
};

ComparisonReport compare_planners(const OccupancyGrid& grid, GridCell source,
                                  GridCell goal, int trials);

} // namespace waypath
