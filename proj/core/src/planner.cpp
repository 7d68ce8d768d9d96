#include "waypath/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

namespace waypath {

ThetaDeg theta_to_target(WorldPoint robot, double heading_deg,
                         WorldPoint target) {
    const double dx = target.x - robot.x;
    const double dy = target.y - robot.y;
    if (dx == 0.0 && dy == 0.0) {
        raise(Errc::ZeroLengthBearing, "theta_to_target: robot is at the target");
    }
    const double bearing_deg = deg_from_rad(std::atan2(dx, dy));
    return ThetaDeg{bearing_deg - heading_deg};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

PlanResult dijkstra(const OccupancyGrid& grid, GridCell source, GridCell goal) {
    if (!grid.in_bounds(source) || !grid.in_bounds(goal)) {
        raise(Errc::BadArgument, "dijkstra: endpoint out of bounds");
    }
    const auto start_time = Clock::now();
    PlanResult result;

    if (grid.blocked(source) || grid.blocked(goal)) {
        raise(Errc::Unreachable, "dijkstra: endpoint blocked");
    }

    const int n = static_cast<int>(grid.cell_count());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);
    std::vector<int> parent(n, -1);
    std::vector<std::uint8_t> settled(n, 0);

    // Min-heap ordered by (cost, cell index); the index component makes
    // expansion order deterministic across runs.
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;

    const int src = grid.index(source);
    const int dst = grid.index(goal);
    dist[src] = 0.0;
    queue.push({0.0, src});
    ++result.ops; // initial push

    static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    const double diag = std::sqrt(2.0);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        ++result.ops; // pop
        if (settled[u]) continue;
        settled[u] = 1;
        if (u == dst) break;
        const GridCell cu{u % grid.cols(), u / grid.cols()};
        for (int k = 0; k < 8; ++k) {
            const GridCell cv{cu.col + kDx[k], cu.row + kDy[k]};
            if (!grid.in_bounds(cv) || grid.blocked(cv)) continue;
            if (k >= 4) {
                // No corner cutting: both orthogonal neighbors must be free.
                const GridCell a{cu.col + kDx[k], cu.row};
                const GridCell b{cu.col, cu.row + kDy[k]};
                if (grid.blocked(a) || grid.blocked(b)) continue;
            }
            ++result.ops; // relaxation
            const double step = (k >= 4 ? diag : 1.0);
            const double nd = d + step;
            const int v = grid.index(cv);
            if (nd < dist[v]) {
                dist[v] = nd;
                parent[v] = u;
                queue.push({nd, v});
                ++result.ops; // push
            }
        }
    }

    if (dist[dst] == inf) {
        raise(Errc::Unreachable, "dijkstra: goal unreachable");
    }

    std::vector<int> cells;
    for (int v = dst; v != -1; v = parent[v]) cells.push_back(v);
    std::reverse(cells.begin(), cells.end());
    result.path.reserve(cells.size());
    for (int v : cells) {
        result.path.push_back(grid.center({v % grid.cols(), v / grid.cols()}));
    }
    result.cost_cm = dist[dst] * grid.cell_size_cm();
    result.wall_time_s = seconds_since(start_time);
    return result;
}

PlanResult theta_plan(WorldPoint robot, double heading_deg, WorldPoint target) {
    const auto start_time = Clock::now();
    PlanResult result;

    // Every arithmetic step below bumps the counter once, so the total is
    // auditable and input-independent.
    std::uint64_t ops = 0;
    const double dx = target.x - robot.x;
    ++ops;
    const double dy = target.y - robot.y;
    ++ops;
    if (dx == 0.0 && dy == 0.0) {
        raise(Errc::ZeroLengthBearing, "theta_plan: robot is at the target");
    }
    const double dx2 = dx * dx;
    ++ops;
    const double dy2 = dy * dy;
    ++ops;
    const double sq = dx2 + dy2;
    ++ops;
    const double dist = std::sqrt(sq);
    ++ops;
    const double bearing_rad = std::atan2(dx, dy);
    ++ops;
    const double bearing_deg = deg_from_rad(bearing_rad);
    ++ops;
    [[maybe_unused]] const double turn = normalize_deg(bearing_deg - heading_deg);
    ++ops;

    result.path = {robot, target};
    result.cost_cm = dist;
    result.ops = ops;
    result.wall_time_s = seconds_since(start_time);
    return result;
}

ComparisonReport compare_planners(const OccupancyGrid& grid, GridCell source,
                                  GridCell goal, int trials) {
    if (trials < 1) raise(Errc::BadArgument, "compare_planners: trials < 1");

    ComparisonReport report;
    report.trials = trials;

    if (source == goal) {
        // Degenerate instance: nothing to plan on either side.
        report.dijkstra = {0.0, 0.0, 0.0};
        report.theta = {0.0, 0.0, 0.0};
        report.speedup = 1.0;
        report.ops_ratio = 1.0;
        return report;
    }

    const WorldPoint from = grid.center(source);
    const WorldPoint to = grid.center(goal);

    double d_time = 0.0, d_ops = 0.0;
    double t_time = 0.0, t_ops = 0.0;
    for (int i = 0; i < trials; ++i) {
        PlanResult d = dijkstra(grid, source, goal);
        d_time += d.wall_time_s;
        d_ops += static_cast<double>(d.ops);
        report.dijkstra.cost_cm = d.cost_cm;

        PlanResult t = theta_plan(from, 0.0, to);
        t_time += t.wall_time_s;
        t_ops += static_cast<double>(t.ops);
        report.theta.cost_cm = t.cost_cm;
    }
    report.dijkstra.mean_time_s = d_time / trials;
    report.dijkstra.mean_ops = d_ops / trials;
    report.theta.mean_time_s = t_time / trials;
    report.theta.mean_ops = t_ops / trials;
    report.speedup = report.theta.mean_time_s > 0.0
                         ? report.dijkstra.mean_time_s / report.theta.mean_time_s
                         : 0.0;
    report.ops_ratio = report.theta.mean_ops > 0.0
                           ? report.dijkstra.mean_ops / report.theta.mean_ops
                           : 0.0;
    return report;
}

} // namespace waypath
