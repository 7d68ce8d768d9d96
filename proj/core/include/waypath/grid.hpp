#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "waypath/error.hpp"

namespace waypath {

struct GridCell {
    int col = 0;
    int row = 0;

    bool operator==(const GridCell&) const = default;
};

/// World-space point in cm; x grows east, y grows north.
struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
};

double distance(WorldPoint a, WorldPoint b);

/// Blocked/free cell map over a uniform square grid.
///
/// Text format: first line "cols rows cell_size_cm", then `rows` lines of
/// '.' (free) and '#' (blocked), row 0 first.
class OccupancyGrid {
public:
    OccupancyGrid(int cols, int rows, double cell_size_cm);

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    double cell_size_cm() const { return cell_size_cm_; }
    std::size_t cell_count() const { return blocked_.size(); }

    bool in_bounds(GridCell c) const {
        return c.col >= 0 && c.col < cols_ && c.row >= 0 && c.row < rows_;
    }
    int index(GridCell c) const { return c.row * cols_ + c.col; }

    bool blocked(GridCell c) const { return blocked_[index(c)] != 0; }
    void set_blocked(GridCell c, bool value) { blocked_[index(c)] = value ? 1 : 0; }

    WorldPoint center(GridCell c) const {
        return {(c.col + 0.5) * cell_size_cm_, (c.row + 0.5) * cell_size_cm_};
    }

    static OccupancyGrid parse(std::istream& in);
    static OccupancyGrid load(const std::string& path);
    void save(std::ostream& out) const;

private:
    int cols_;
    int rows_;
    double cell_size_cm_;
    std::vector<std::uint8_t> blocked_;
};

/// Uniform random obstacle fill; the two corner cells used as default bench
/// endpoints are always kept free.
OccupancyGrid random_grid(int cols, int rows, double cell_size_cm,
                          double blocked_fraction, std::uint32_t seed);

} // namespace waypath
