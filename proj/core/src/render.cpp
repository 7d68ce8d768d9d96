#include "waypath/render.hpp"

#include <cmath>

namespace waypath {

namespace {

// Stamp a filled disc of the given pixel radius.
void stamp_disc(GrayImage& img, double ch, double cv, double radius,
                std::uint8_t value) {
    const int h0 = static_cast<int>(std::floor(ch - radius));
    const int h1 = static_cast<int>(std::ceil(ch + radius));
    const int v0 = static_cast<int>(std::floor(cv - radius));
    const int v1 = static_cast<int>(std::ceil(cv + radius));
    for (int v = v0; v <= v1; ++v) {
        for (int h = h0; h <= h1; ++h) {
            if (!img.in_bounds(h, v)) continue;
            const double dh = h - ch;
            const double dv = v - cv;
            if (dh * dh + dv * dv <= radius * radius) img.at(h, v) = value;
        }
    }
}

struct CameraFrame {
    // Orthonormal axes in world coordinates (x east, y north, z up).
    double xw[3]; // image right
    double yw[3]; // image down
    double zw[3]; // optical axis
    double origin[3];
};

CameraFrame make_frame(const Pose& pose, const OnboardCamera& cam) {
    const double phi = rad_from_deg(pose.heading_deg);
    const double alpha = rad_from_deg(cam.pitch_deg);
    const double fx = std::sin(phi), fy = std::cos(phi); // forward
    const double rx = std::cos(phi), ry = -std::sin(phi); // right
    CameraFrame f;
    f.xw[0] = rx; f.xw[1] = ry; f.xw[2] = 0.0;
    f.zw[0] = fx * std::cos(alpha);
    f.zw[1] = fy * std::cos(alpha);
    f.zw[2] = -std::sin(alpha);
    f.yw[0] = -fx * std::sin(alpha);
    f.yw[1] = -fy * std::sin(alpha);
    f.yw[2] = -std::cos(alpha);
    f.origin[0] = pose.position.x;
    f.origin[1] = pose.position.y;
    f.origin[2] = cam.height_cm;
    return f;
}

} // namespace

GrayImage render_onboard(const Pose& pose, const Scenario& scenario) {
    const OnboardCamera& cam = scenario.camera.onboard;
    GrayImage img(cam.width_px, cam.height_px, 0);
    const CameraFrame frame = make_frame(pose, cam);
    // Principal point between pixel centers keeps renders mirror-symmetric.
    const double cx = (cam.width_px - 1) / 2.0;
    const double cy = (cam.height_px - 1) / 2.0;
    const double near = 1.0; // cm in front of the lens

    // Lane polylines sampled densely in world space; each visible sample is
    // stamped as a small square so strokes are a few pixels wide.
    const double step_cm = 0.5;
    for (const auto& lane : scenario.lanes) {
        for (std::size_t i = 0; i + 1 < lane.size(); ++i) {
            const WorldPoint a = lane[i];
            const WorldPoint b = lane[i + 1];
            const double len = distance(a, b);
            const int samples = std::max(1, static_cast<int>(len / step_cm));
            for (int k = 0; k <= samples; ++k) {
                const double t = static_cast<double>(k) / samples;
                const double wx = a.x + (b.x - a.x) * t;
                const double wy = a.y + (b.y - a.y) * t;
                const double d[3] = {wx - frame.origin[0], wy - frame.origin[1],
                                     -frame.origin[2]};
                const double z = d[0] * frame.zw[0] + d[1] * frame.zw[1] +
                                 d[2] * frame.zw[2];
                if (z < near) continue;
                const double x = d[0] * frame.xw[0] + d[1] * frame.xw[1] +
                                 d[2] * frame.xw[2];
                const double y = d[0] * frame.yw[0] + d[1] * frame.yw[1] +
                                 d[2] * frame.yw[2];
                const double u = cx + cam.focal_px * x / z;
                const double v = cy + cam.focal_px * y / z;
                const int ui = static_cast<int>(std::lround(u));
                const int vi = static_cast<int>(std::lround(v));
                for (int dv = -1; dv <= 1; ++dv) {
                    for (int du = -1; du <= 1; ++du) {
                        if (img.in_bounds(ui + du, vi + dv)) {
                            img.at(ui + du, vi + dv) = 255;
                        }
                    }
                }
            }
        }
    }
    return img;
}

GrayImage render_overhead(const Scenario& scenario, const Pose& robot_pose) {
    const OverheadCamera& cam = scenario.camera.overhead;
    GrayImage img(cam.width_px, cam.height_px, 0);
    const double s = cam.scale_px_per_cm;
    auto to_h = [&](double x) { return x * s; };
    auto to_v = [&](double y) { return cam.height_px - y * s; };

    for (const Circle& c : scenario.obstacles) {
        stamp_disc(img, to_h(c.center.x), to_v(c.center.y), c.radius_cm * s, 255);
    }
    stamp_disc(img, to_h(scenario.target.position.x),
               to_v(scenario.target.position.y), scenario.target.radius_cm * s,
               100);
    stamp_disc(img, to_h(robot_pose.position.x), to_v(robot_pose.position.y),
               scenario.params.robot_radius_cm * s, 200);
    return img;
}

WorldPoint overhead_pixel_to_world(ImagePoint p, const OverheadCamera& cam) {
    return {p.h / cam.scale_px_per_cm,
            (cam.height_px - p.v) / cam.scale_px_per_cm};
}

} // namespace waypath
