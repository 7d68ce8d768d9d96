#include "waypath/blobs.hpp"

#include <string>

namespace waypath {

namespace {

struct Component {
    double sum_h = 0.0;
    double sum_v = 0.0;
    int count = 0;
};

// 8-connected components of pixels matching `code`.
std::vector<Component> components_of(const GrayImage& img, std::uint8_t code) {
    std::vector<Component> out;
    std::vector<bool> seen(img.pixels.size(), false);
    std::vector<std::size_t> stack;
    for (int v = 0; v < img.height; ++v) {
        for (int h = 0; h < img.width; ++h) {
            const std::size_t i = static_cast<std::size_t>(v) * img.width + h;
            if (seen[i] || img.pixels[i] != code) continue;
            Component comp;
            seen[i] = true;
            stack.push_back(i);
            while (!stack.empty()) {
                const std::size_t j = stack.back();
                stack.pop_back();
                const int jv = static_cast<int>(j) / img.width;
                const int jh = static_cast<int>(j) % img.width;
                comp.sum_h += jh;
                comp.sum_v += jv;
                ++comp.count;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nh = jh + dx;
                        const int nv = jv + dy;
                        if (!img.in_bounds(nh, nv)) continue;
                        const std::size_t n =
                            static_cast<std::size_t>(nv) * img.width + nh;
                        if (!seen[n] && img.pixels[n] == code) {
                            seen[n] = true;
                            stack.push_back(n);
                        }
                    }
                }
            }
            out.push_back(comp);
        }
    }
    return out;
}

BlobDetection single_blob(const GrayImage& img, std::uint8_t code,
                          BlobLabel label, int min_pixels, const char* name) {
    auto comps = components_of(img, code);
    std::erase_if(comps, [&](const Component& c) { return c.count < min_pixels; });
    if (comps.size() != 1) {
        raise(Errc::DetectionAmbiguity,
              std::string("detect_blobs: expected exactly one ") + name +
                  " marker, found " + std::to_string(comps.size()));
    }
    const Component& c = comps.front();
    return BlobDetection{{c.sum_h / c.count, c.sum_v / c.count}, c.count, label};
}

} // namespace

std::vector<BlobDetection> detect_blobs(const GrayImage& img,
                                        const BlobCodes& codes) {
    std::vector<BlobDetection> out;
    out.push_back(single_blob(img, codes.robot, BlobLabel::Robot,
                              codes.min_pixels, "robot"));
    out.push_back(single_blob(img, codes.target, BlobLabel::Target,
                              codes.min_pixels, "target"));
    return out;
}

} // namespace waypath
