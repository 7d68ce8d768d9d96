#pragma once

#include <optional>
#include <vector>

#include "waypath/geometry.hpp"
#include "waypath/hough.hpp"
#include "waypath/image.hpp"

namespace waypath {

/// Polygonal mask; at least 3 vertices, all inside the image it is applied to.
struct RoiPolygon {
    std::vector<ImagePoint> vertices;
};

/// Trapezoid over the lower 60% of the frame, the working default for the
/// onboard camera geometry.
RoiPolygon default_roi(int width, int height);

/// Zero every pixel outside the polygon; inside pixels pass through.
GrayImage apply_roi(const GrayImage& img, const RoiPolygon& roi);

bool point_in_polygon(ImagePoint p, const RoiPolygon& roi);

/// Left line, right line and their endpoint-wise mean.
struct LaneObservation {
    Segment left;
    Segment right;
    Segment midline;
    bool degraded = false; // one side reused from a previous observation
};

/// Pick the strongest detected line on each half of the image (classified by
/// the horizontal position of the segment's bottom endpoint) and derive the
/// midline. A missing side falls back to `history` when given, marking the
/// observation degraded; with no fallback available this raises LaneLost.
LaneObservation extract_lanes(const std::vector<HoughLine>& lines,
                              int img_width,
                              const std::optional<LaneObservation>& history =
                                  std::nullopt);

} // namespace waypath
