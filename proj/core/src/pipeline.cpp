#include "waypath/pipeline.hpp"

#include <cmath>

namespace waypath {

namespace {

void draw_segment(GrayImage& img, const Segment& seg, std::uint8_t value) {
    const double len = distance(seg.top, seg.bottom);
    const int steps = std::max(1, static_cast<int>(std::ceil(len)));
    for (int i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) / steps;
        const int h = static_cast<int>(std::lround(seg.top.h + (seg.bottom.h - seg.top.h) * t));
        const int v = static_cast<int>(std::lround(seg.top.v + (seg.bottom.v - seg.top.v) * t));
        if (img.in_bounds(h, v)) img.at(h, v) = value;
    }
}

} // namespace

LanePipelineResult run_lane_pipeline(const GrayImage& frame,
                                     const LanePipelineConfig& cfg,
                                     const std::optional<LaneObservation>& history) {
    LanePipelineResult result;
    const GrayImage edges = canny(frame, cfg.canny_low, cfg.canny_high);
    const RoiPolygon roi =
        cfg.roi ? *cfg.roi : default_roi(frame.width, frame.height);
    result.edges = apply_roi(edges, roi);
    result.lines =
        hough_lines(result.edges, cfg.rho_res, cfg.theta_res_deg, cfg.min_votes);
    result.lanes = extract_lanes(result.lines, frame.width, history);
    result.theta = theta_single(result.lanes.midline.top, result.lanes.midline.bottom);
    return result;
}

GrayImage overlay_lanes(const GrayImage& frame, const LaneObservation& lanes) {
    GrayImage out = frame;
    // Halve the background so the drawn segments stand out.
    for (auto& px : out.pixels) px = static_cast<std::uint8_t>(px / 2);
    draw_segment(out, lanes.left, 255);
    draw_segment(out, lanes.right, 255);
    draw_segment(out, lanes.midline, 160);
    return out;
}

} // namespace waypath
