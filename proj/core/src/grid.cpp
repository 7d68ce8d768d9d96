#include "waypath/grid.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace waypath {

double distance(WorldPoint a, WorldPoint b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

OccupancyGrid::OccupancyGrid(int cols, int rows, double cell_size_cm)
    : cols_(cols), rows_(rows), cell_size_cm_(cell_size_cm),
      blocked_(static_cast<std::size_t>(cols) * rows, 0) {
    if (cols < 1 || rows < 1 || cell_size_cm <= 0.0) {
        raise(Errc::BadGrid, "OccupancyGrid: invalid dimensions");
    }
}

OccupancyGrid OccupancyGrid::parse(std::istream& in) {
    int cols = 0, rows = 0;
    double cell = 0.0;
    std::string header;
    if (!std::getline(in, header)) raise(Errc::BadGrid, "grid: empty input");
    std::istringstream hs(header);
    if (!(hs >> cols >> rows >> cell)) {
        raise(Errc::BadGrid, "grid: header must be 'cols rows cell_size_cm'");
    }
    if (cols < 1 || rows < 1 || cell <= 0.0) {
        raise(Errc::BadGrid, "grid: invalid header values");
    }
    OccupancyGrid grid(cols, rows, cell);
    for (int r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(in, line)) raise(Errc::BadGrid, "grid: missing row");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != cols) {
            raise(Errc::BadGrid, "grid: row " + std::to_string(r) +
                                     " has wrong width");
        }
        for (int c = 0; c < cols; ++c) {
            if (line[c] == '#') {
                grid.set_blocked({c, r}, true);
            } else if (line[c] != '.') {
                raise(Errc::BadGrid, "grid: unexpected character '" +
                                         std::string(1, line[c]) + "'");
            }
        }
    }
    return grid;
}

OccupancyGrid OccupancyGrid::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::BadGrid, "grid: cannot open " + path);
    return parse(in);
}

void OccupancyGrid::save(std::ostream& out) const {
    out << cols_ << " " << rows_ << " " << cell_size_cm_ << "\n";
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out << (blocked({c, r}) ? '#' : '.');
        }
        out << "\n";
    }
}

OccupancyGrid random_grid(int cols, int rows, double cell_size_cm,
                          double blocked_fraction, std::uint32_t seed) {
    OccupancyGrid grid(cols, rows, cell_size_cm);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (coin(rng) < blocked_fraction) grid.set_blocked({c, r}, true);
        }
    }
    grid.set_blocked({0, 0}, false);
    grid.set_blocked({cols - 1, rows - 1}, false);
    return grid;
}

} // namespace waypath
