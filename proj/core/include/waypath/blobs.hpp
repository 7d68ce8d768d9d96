#pragma once

#include <vector>

#include "waypath/geometry.hpp"
#include "waypath/image.hpp"

namespace waypath {

enum class BlobLabel { Robot, Target };

struct BlobDetection {
    ImagePoint centroid;
    int pixel_count = 0;
    BlobLabel label = BlobLabel::Robot;
};

/// Reserved intensity codes used by the overhead render.
struct BlobCodes {
    std::uint8_t robot = 200;
    std::uint8_t target = 100;
    int min_pixels = 4;
};

/// Connected-component centroids of the robot and target markers in an
/// overhead raster. Exactly one component per label is required; zero or
/// several raise DetectionAmbiguity. Result order: robot, then target.
std::vector<BlobDetection> detect_blobs(const GrayImage& img,
                                        const BlobCodes& codes = {});

} // namespace waypath
