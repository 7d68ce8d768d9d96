#pragma once

#include "waypath/image.hpp"

namespace waypath {

/// Binary edge map (pixels 0 or 255).
///
/// Stages: 5x5 Gaussian blur (sigma 1.4), 3x3 Sobel gradients, non-maximum
/// suppression along the quantized gradient direction, then double-threshold
/// hysteresis with 8-connectivity. Gradient magnitude is scaled into
/// [0, 255] so the thresholds share the pixel range.
///
/// Requires 0 <= low < high <= 255 and an image at least 5x5.
GrayImage canny(const GrayImage& img, double low, double high);

} // namespace waypath
