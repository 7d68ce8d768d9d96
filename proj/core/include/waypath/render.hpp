#pragma once

#include "waypath/image.hpp"
#include "waypath/scenario.hpp"

namespace waypath {

/// Perspective view of the lane polylines from the robot-mounted camera:
/// white strokes on black, rasterized without anti-aliasing so identical
/// poses give identical pixels.
GrayImage render_onboard(const Pose& pose, const Scenario& scenario);

/// Orthographic top-down view. Intensities: background 0, obstacles 255,
/// target marker 100, robot marker 200 (drawn last). Pixel mapping:
/// h = x * scale, v = height - y * scale.
GrayImage render_overhead(const Scenario& scenario, const Pose& robot_pose);

/// Inverse of the overhead pixel mapping.
WorldPoint overhead_pixel_to_world(ImagePoint p, const OverheadCamera& cam);

} // namespace waypath
