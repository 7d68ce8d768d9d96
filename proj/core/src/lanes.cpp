#include "waypath/lanes.hpp"

#include <algorithm>
#include <cmath>

namespace waypath {

RoiPolygon default_roi(int width, int height) {
    const double w = width - 1.0;
    const double h = height - 1.0;
    return RoiPolygon{{
        {0.02 * w, h},
        {0.98 * w, h},
        {0.85 * w, 0.4 * h},
        {0.15 * w, 0.4 * h},
    }};
}

bool point_in_polygon(ImagePoint p, const RoiPolygon& roi) {
    // Ray-crossing test.
    bool inside = false;
    const auto& vs = roi.vertices;
    for (std::size_t i = 0, j = vs.size() - 1; i < vs.size(); j = i++) {
        const bool crosses = (vs[i].v > p.v) != (vs[j].v > p.v);
        if (!crosses) continue;
        const double x_at = (vs[j].h - vs[i].h) * (p.v - vs[i].v) /
                                (vs[j].v - vs[i].v) +
                            vs[i].h;
        if (p.h < x_at) inside = !inside;
    }
    return inside;
}

GrayImage apply_roi(const GrayImage& img, const RoiPolygon& roi) {
    if (roi.vertices.size() < 3) {
        raise(Errc::BadPolygon, "apply_roi: polygon needs at least 3 vertices");
    }
    for (const ImagePoint& p : roi.vertices) {
        if (p.h < 0 || p.v < 0 || p.h > img.width - 1 || p.v > img.height - 1) {
            raise(Errc::BadPolygon, "apply_roi: vertex outside image");
        }
    }
    GrayImage out(img.width, img.height, 0);
    for (int v = 0; v < img.height; ++v) {
        for (int h = 0; h < img.width; ++h) {
            if (point_in_polygon({static_cast<double>(h), static_cast<double>(v)},
                                 roi)) {
                out.at(h, v) = img.at(h, v);
            }
        }
    }
    return out;
}

namespace {

Segment oriented(const HoughLine& line) {
    if (line.p0.v <= line.p1.v) return {line.p0, line.p1};
    return {line.p1, line.p0};
}

ImagePoint midpoint(ImagePoint a, ImagePoint b) {
    return {(a.h + b.h) / 2.0, (a.v + b.v) / 2.0};
}

} // namespace

LaneObservation extract_lanes(const std::vector<HoughLine>& lines,
                              int img_width,
                              const std::optional<LaneObservation>& history) {
    const double split = img_width / 2.0;
    const HoughLine* best_left = nullptr;
    const HoughLine* best_right = nullptr;
    for (const HoughLine& line : lines) {
        const Segment seg = oriented(line);
        const bool is_left = seg.bottom.h < split;
        const HoughLine*& slot = is_left ? best_left : best_right;
        if (slot == nullptr || line.votes > slot->votes) slot = &line;
    }

    LaneObservation obs;
    if (best_left) {
        obs.left = oriented(*best_left);
    } else if (history) {
        obs.left = history->left;
        obs.degraded = true;
    } else {
        raise(Errc::LaneLost, "extract_lanes: no left line and no history");
    }
    if (best_right) {
        obs.right = oriented(*best_right);
    } else if (history) {
        obs.right = history->right;
        obs.degraded = true;
    } else {
        raise(Errc::LaneLost, "extract_lanes: no right line and no history");
    }

    obs.midline.top = midpoint(obs.left.top, obs.right.top);
    obs.midline.bottom = midpoint(obs.left.bottom, obs.right.bottom);
    if (obs.midline.top.v > obs.midline.bottom.v) {
        std::swap(obs.midline.top, obs.midline.bottom);
    }
    return obs;
}

} // namespace waypath
