#pragma once

#include <optional>

#include "waypath/canny.hpp"
#include "waypath/lanes.hpp"

namespace waypath {

struct LanePipelineConfig {
    double canny_low = 40.0;
    double canny_high = 80.0;
    double rho_res = 1.0;
    double theta_res_deg = 1.0;
    int min_votes = 0;                 // <= 0: hough default
    std::optional<RoiPolygon> roi;     // unset: default trapezoid
};

struct LanePipelineResult {
    GrayImage edges;        // ROI-masked edge map
    std::vector<HoughLine> lines;
    LaneObservation lanes;
    ThetaDeg theta;         // single-iteration steering angle
};

/// Full frame pipeline: edges -> mask -> lines -> lane pair -> midline ->
/// theta. `history` enables the one-sided fallback.
LanePipelineResult run_lane_pipeline(
    const GrayImage& frame, const LanePipelineConfig& cfg = {},
    const std::optional<LaneObservation>& history = std::nullopt);

/// Line overlay for inspection: edge map with the chosen lane segments and
/// midline drawn at distinct intensities (left/right 255, midline 160).
GrayImage overlay_lanes(const GrayImage& frame, const LaneObservation& lanes);

} // namespace waypath
