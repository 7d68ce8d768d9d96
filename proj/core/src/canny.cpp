#include "waypath/canny.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace waypath {

namespace {

constexpr int kKernelRadius = 2; // 5x5
constexpr double kSigma = 1.4;

std::array<double, 25> gaussian_kernel() {
    std::array<double, 25> k{};
    double sum = 0.0;
    for (int dy = -kKernelRadius; dy <= kKernelRadius; ++dy) {
        for (int dx = -kKernelRadius; dx <= kKernelRadius; ++dx) {
            double w = std::exp(-(dx * dx + dy * dy) / (2.0 * kSigma * kSigma));
            k[(dy + kKernelRadius) * 5 + (dx + kKernelRadius)] = w;
            sum += w;
        }
    }
    for (double& w : k) w /= sum;
    return k;
}

int clamp_index(int i, int n) { return i < 0 ? 0 : (i >= n ? n - 1 : i); }

std::vector<double> blur(const GrayImage& img) {
    static const std::array<double, 25> kernel = gaussian_kernel();
    std::vector<double> out(img.pixels.size());
    for (int v = 0; v < img.height; ++v) {
        for (int h = 0; h < img.width; ++h) {
            double acc = 0.0;
            for (int dy = -kKernelRadius; dy <= kKernelRadius; ++dy) {
                const int sv = clamp_index(v + dy, img.height);
                for (int dx = -kKernelRadius; dx <= kKernelRadius; ++dx) {
                    const int sh = clamp_index(h + dx, img.width);
                    acc += kernel[(dy + kKernelRadius) * 5 + (dx + kKernelRadius)] *
                           img.at(sh, sv);
                }
            }
            out[static_cast<std::size_t>(v) * img.width + h] = acc;
        }
    }
    return out;
}

// Gradient direction quantized to 4 sectors: 0 = horizontal step (vertical
// edge), 1 = 45 deg, 2 = vertical step, 3 = 135 deg.
int quantize_direction(double gx, double gy) {
    double angle = std::atan2(gy, gx) * 180.0 / 3.14159265358979323846;
    if (angle < 0) angle += 180.0;
    if (angle < 22.5 || angle >= 157.5) return 0;
    if (angle < 67.5) return 1;
    if (angle < 112.5) return 2;
    return 3;
}

} // namespace

GrayImage canny(const GrayImage& img, double low, double high) {
    if (!(0.0 <= low && low < high && high <= 255.0)) {
        raise(Errc::BadArgument, "canny: thresholds must satisfy 0 <= low < high <= 255");
    }
    if (img.width < 5 || img.height < 5) {
        raise(Errc::BadImage, "canny: image smaller than blur kernel");
    }

    const int w = img.width;
    const int h = img.height;
    const std::vector<double> smooth = blur(img);

    // Sobel. Magnitude scaled by 1/(4*sqrt(2)) so the steepest possible
    // gradient maps to 255.
    std::vector<double> mag(smooth.size(), 0.0);
    std::vector<std::uint8_t> dir(smooth.size(), 0);
    const double scale = 1.0 / (4.0 * std::sqrt(2.0));
    for (int v = 1; v < h - 1; ++v) {
        for (int x = 1; x < w - 1; ++x) {
            auto s = [&](int dx, int dy) {
                return smooth[static_cast<std::size_t>(v + dy) * w + (x + dx)];
            };
            const double gx = -s(-1, -1) + s(1, -1) - 2.0 * s(-1, 0) + 2.0 * s(1, 0) -
                              s(-1, 1) + s(1, 1);
            const double gy = -s(-1, -1) - 2.0 * s(0, -1) - s(1, -1) +
                              s(-1, 1) + 2.0 * s(0, 1) + s(1, 1);
            const std::size_t i = static_cast<std::size_t>(v) * w + x;
            mag[i] = std::hypot(gx, gy) * scale;
            dir[i] = static_cast<std::uint8_t>(quantize_direction(gx, gy));
        }
    }

    // Non-maximum suppression across the gradient direction.
    static constexpr int kOff[4][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}};
    std::vector<double> thin(mag.size(), 0.0);
    for (int v = 1; v < h - 1; ++v) {
        for (int x = 1; x < w - 1; ++x) {
            const std::size_t i = static_cast<std::size_t>(v) * w + x;
            if (mag[i] == 0.0) continue;
            const int dx = kOff[dir[i]][0];
            const int dy = kOff[dir[i]][1];
            const double fwd = mag[static_cast<std::size_t>(v + dy) * w + (x + dx)];
            const double bwd = mag[static_cast<std::size_t>(v - dy) * w + (x - dx)];
            if (mag[i] >= fwd && mag[i] >= bwd) thin[i] = mag[i];
        }
    }

    // Double threshold + hysteresis (8-connected growth from strong pixels).
    GrayImage edges(w, h, 0);
    std::vector<std::size_t> stack;
    stack.reserve(256);
    for (int v = 0; v < h; ++v) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(v) * w + x;
            if (thin[i] >= high && edges.pixels[i] == 0) {
                edges.pixels[i] = 255;
                stack.push_back(i);
                while (!stack.empty()) {
                    const std::size_t j = stack.back();
                    stack.pop_back();
                    const int jv = static_cast<int>(j) / w;
                    const int jh = static_cast<int>(j) % w;
                    for (int dy = -1; dy <= 1; ++dy) {
                        for (int dx = -1; dx <= 1; ++dx) {
                            if (dx == 0 && dy == 0) continue;
                            const int nh = jh + dx;
                            const int nv = jv + dy;
                            if (!edges.in_bounds(nh, nv)) continue;
                            const std::size_t n =
                                static_cast<std::size_t>(nv) * w + nh;
                            if (edges.pixels[n] == 0 && thin[n] >= low) {
                                edges.pixels[n] = 255;
                                stack.push_back(n);
                            }
                        }
                    }
                }
            }
        }
    }
    return edges;
}

} // namespace waypath
