#include "doctest.h"

#include "test_util.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "waypath/blobs.hpp"
#include "waypath/canny.hpp"
#include "waypath/hough.hpp"
#include "waypath/lanes.hpp"

using namespace waypath;

namespace {

GrayImage vertical_step(int w, int h, int split) {
    GrayImage img(w, h, 0);
    for (int v = 0; v < h; ++v) {
        for (int x = split; x < w; ++x) img.at(x, v) = 255;
    }
    return img;
}

// Winding-number point-in-polygon, independent of the crossing test used by
// apply_roi.
bool winding_inside(ImagePoint p, const RoiPolygon& poly) {
    double angle = 0.0;
    const auto& vs = poly.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % vs.size()];
        const double a1 = std::atan2(a.v - p.v, a.h - p.h);
        const double a2 = std::atan2(b.v - p.v, b.h - p.h);
        double d = a2 - a1;
        while (d > kPi) d -= 2 * kPi;
        while (d < -kPi) d += 2 * kPi;
        angle += d;
    }
    return std::fabs(angle) > kPi;
}

// Brute-force accumulator oracle: best (rho, theta) over a coarse sweep by
// counting supporting pixels directly.
void best_line_brute(const GrayImage& edges, double& best_rho,
                     double& best_theta) {
    int best = -1;
    for (int t = 0; t < 180; ++t) {
        const double rad = rad_from_deg(static_cast<double>(t));
        const double ct = std::cos(rad), st = std::sin(rad);
        const double max_rho = std::hypot(edges.width, edges.height);
        for (double rho = -max_rho; rho <= max_rho; rho += 1.0) {
            int votes = 0;
            for (int v = 0; v < edges.height; ++v) {
                for (int h = 0; h < edges.width; ++h) {
                    if (edges.at(h, v) == 0) continue;
                    if (std::fabs(h * ct + v * st - rho) <= 0.5) ++votes;
                }
            }
            if (votes > best) {
                best = votes;
                best_rho = rho;
                best_theta = t;
            }
        }
    }
}

} // namespace

TEST_CASE("pgm round trip is bit-exact") {
    GrayImage img(37, 23, 0);
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> px(0, 255);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(px(rng));

    std::ostringstream out1;
    write_pgm(img, out1);
    std::istringstream in(out1.str());
    const GrayImage back = read_pgm(in);
    CHECK(back == img);

    std::ostringstream out2;
    write_pgm(back, out2);
    CHECK(out1.str() == out2.str());

    // Reader tolerates comments and loose whitespace.
    std::istringstream commented("P5 # type\n# size next\n 4\t2 \n255\nabcdefgh");
    const GrayImage small = read_pgm(commented);
    CHECK(small.width == 4);
    CHECK(small.height == 2);
    CHECK(small.at(0, 0) == 'a');
    CHECK(small.at(3, 1) == 'h');

    std::istringstream truncated("P5\n4 4\n255\nabc");
    CHECK_THROWS_AS(read_pgm(truncated), Error);
    std::istringstream wrong_magic("P6\n1 1\n255\nx");
    CHECK_THROWS_AS(read_pgm(wrong_magic), Error);
}

TEST_CASE("canny of a uniform image is empty") {
    const GrayImage img(100, 100, 100);
    const GrayImage edges = canny(img, 40, 80);
    for (auto px : edges.pixels) CHECK(px == 0);
}

TEST_CASE("canny localizes a vertical step where the sobel response peaks") {
    const GrayImage img = vertical_step(100, 100, 50);
    const GrayImage edges = canny(img, 40, 80);

    // Oracle: the 1-D step profile after the 5x5 blur has its steepest
    // difference between columns 49 and 50, so surviving pixels must sit in
    // columns 48..52.
    int edge_pixels = 0;
    for (int v = 0; v < edges.height; ++v) {
        for (int h = 0; h < edges.width; ++h) {
            if (edges.at(h, v) == 0) continue;
            ++edge_pixels;
            CHECK(h >= 48);
            CHECK(h <= 52);
        }
    }
    CHECK(edge_pixels > 50); // the step is detected along most rows
}

TEST_CASE("canny suppresses an isolated bright pixel at high thresholds") {
    GrayImage img(50, 50, 0);
    img.at(25, 25) = 255;
    // An isolated point blurs into a radial bump whose normalized gradient
    // stays small; with high thresholds nothing survives.
    const GrayImage edges = canny(img, 200, 250);
    for (auto px : edges.pixels) CHECK(px == 0);
}

TEST_CASE("canny rejects bad inputs") {
    const GrayImage img(10, 10, 0);
    CHECK_THROWS_AS(canny(img, 80, 40), Error);
    CHECK_THROWS_AS(canny(img, -1, 40), Error);
    CHECK_THROWS_AS(canny(img, 40, 256), Error);
    const GrayImage tiny(4, 4, 0);
    try {
        canny(tiny, 40, 80);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadImage);
    }
}

TEST_CASE("canny applied to its own output adds no stray pixels") {
    const GrayImage img = vertical_step(64, 64, 32);
    const GrayImage once = canny(img, 40, 80);
    const GrayImage twice = canny(once, 40, 80);
    // Every second-pass pixel lies within 2 px of a first-pass pixel.
    for (int v = 0; v < twice.height; ++v) {
        for (int h = 0; h < twice.width; ++h) {
            if (twice.at(h, v) == 0) continue;
            bool near = false;
            for (int dv = -2; dv <= 2 && !near; ++dv) {
                for (int dh = -2; dh <= 2 && !near; ++dh) {
                    if (once.in_bounds(h + dh, v + dv) &&
                        once.at(h + dh, v + dv) != 0) {
                        near = true;
                    }
                }
            }
            CHECK(near);
        }
    }
}

TEST_CASE("apply_roi with a full-frame rectangle is the identity") {
    GrayImage img(20, 20, 0);
    for (int v = 0; v < 20; ++v) {
        for (int h = 0; h < 20; ++h) img.at(h, v) = static_cast<std::uint8_t>(h * v);
    }
    const RoiPolygon rect{{{0, 0}, {19, 0}, {19, 19}, {0, 19}}};
    const GrayImage out = apply_roi(img, rect);
    // Interior must be untouched; only the polygon outline may differ by
    // the boundary convention of the crossing test.
    for (int v = 1; v < 19; ++v) {
        for (int h = 1; h < 19; ++h) CHECK(out.at(h, v) == img.at(h, v));
    }
}

TEST_CASE("apply_roi zero-area sliver blanks the image") {
    GrayImage img(10, 10, 200);
    const RoiPolygon sliver{{{2, 2}, {7, 2}, {4.5, 2}}};
    const GrayImage out = apply_roi(img, sliver);
    for (auto px : out.pixels) CHECK(px == 0);
}

TEST_CASE("apply_roi classification matches the winding-number oracle") {
    GrayImage img(40, 40, 255);
    // Non-lattice vertices so no pixel center lies exactly on an edge.
    const RoiPolygon tri{{{5.3, 4.7}, {34.6, 9.2}, {12.4, 36.1}}};
    const GrayImage out = apply_roi(img, tri);
    for (int v = 0; v < 40; ++v) {
        for (int h = 0; h < 40; ++h) {
            const bool inside = winding_inside(
                {static_cast<double>(h), static_cast<double>(v)}, tri);
            CHECK(out.at(h, v) == (inside ? 255 : 0));
        }
    }
}

TEST_CASE("apply_roi rejects degenerate polygons") {
    const GrayImage img(10, 10, 0);
    try {
        apply_roi(img, RoiPolygon{{{1, 1}, {5, 5}}});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadPolygon);
    }
}

TEST_CASE("hough_lines recovers a vertical edge column") {
    GrayImage edges(200, 200, 0);
    for (int v = 0; v < 200; ++v) edges.at(50, v) = 255;
    const auto lines = hough_lines(edges, 1.0, 1.0, 60);
    REQUIRE(!lines.empty());
    CHECK(std::fabs(lines[0].rho - 50.0) <= 2.0);
    CHECK(std::fabs(lines[0].theta_deg - 0.0) <= 2.0);

    double orho = 0, otheta = 0;
    best_line_brute(edges, orho, otheta);
    CHECK(std::fabs(lines[0].rho - orho) <= 2.0);
    CHECK(std::fabs(lines[0].theta_deg - otheta) <= 2.0);

    // Endpoints span the supporting pixels.
    CHECK(lines[0].p0.v == approx_abs(0.0, 1.5));
    CHECK(lines[0].p1.v == approx_abs(199.0, 1.5));
}

TEST_CASE("hough_lines recovers a horizontal edge row") {
    GrayImage edges(200, 200, 0);
    for (int h = 0; h < 200; ++h) edges.at(h, 80) = 255;
    const auto lines = hough_lines(edges, 1.0, 1.0, 60);
    REQUIRE(!lines.empty());
    CHECK(std::fabs(lines[0].rho - 80.0) <= 2.0);
    CHECK(std::fabs(lines[0].theta_deg - 90.0) <= 2.0);

    double orho = 0, otheta = 0;
    best_line_brute(edges, orho, otheta);
    CHECK(std::fabs(lines[0].rho - orho) <= 2.0);
    CHECK(std::fabs(lines[0].theta_deg - otheta) <= 2.0);
}

TEST_CASE("hough_lines on a blank map is empty") {
    const GrayImage edges(64, 64, 0);
    CHECK(hough_lines(edges).empty());
}

TEST_CASE("every returned hough line is supported by min_votes pixels") {
    GrayImage edges(120, 120, 0);
    for (int v = 0; v < 120; ++v) edges.at(30, v) = 255;
    for (int i = 0; i < 120; ++i) edges.at(i, i) = 255;
    const double rho_res = 1.0;
    const int min_votes = 40;
    const auto lines = hough_lines(edges, rho_res, 1.0, min_votes);
    REQUIRE(lines.size() >= 2);
    for (const auto& line : lines) {
        const double ct = std::cos(rad_from_deg(line.theta_deg));
        const double st = std::sin(rad_from_deg(line.theta_deg));
        int support = 0;
        for (int v = 0; v < 120; ++v) {
            for (int h = 0; h < 120; ++h) {
                if (edges.at(h, v) == 0) continue;
                if (std::fabs(h * ct + v * st - line.rho) <= rho_res) ++support;
            }
        }
        CHECK(support >= min_votes);
    }
}

namespace {

HoughLine seg_line(double h0, double v0, double h1, double v1, int votes) {
    HoughLine l;
    l.votes = votes;
    l.p0 = {h0, v0};
    l.p1 = {h1, v1};
    return l;
}

} // namespace

TEST_CASE("extract_lanes pairs strongest halves and averages the midline") {
    const auto left = seg_line(60, 20, 40, 180, 120);
    const auto right = seg_line(140, 20, 160, 180, 110);
    const auto obs = extract_lanes({left, right}, 200);
    CHECK(obs.midline.bottom.h == doctest::Approx(100.0));
    CHECK(obs.midline.top.h == doctest::Approx(100.0));
    CHECK(obs.midline.top.v < obs.midline.bottom.v);
    CHECK_FALSE(obs.degraded);

    // Swapping input order changes nothing.
    const auto obs2 = extract_lanes({right, left}, 200);
    CHECK(obs2.midline.top.h == obs.midline.top.h);
    CHECK(obs2.midline.bottom.h == obs.midline.bottom.h);
}

TEST_CASE("extract_lanes symmetric converging lines give a vertical midline") {
    const auto left = seg_line(80, 40, 30, 190, 90);
    const auto right = seg_line(120, 40, 170, 190, 90);
    const auto obs = extract_lanes({left, right}, 200);
    CHECK(theta_single(obs.midline.top, obs.midline.bottom).deg() ==
          doctest::Approx(0.0));
}

TEST_CASE("extract_lanes falls back to history when a side drops out") {
    const auto left = seg_line(60, 20, 40, 180, 120);
    const auto right = seg_line(140, 20, 160, 180, 110);
    const auto full = extract_lanes({left, right}, 200);

    const auto degraded = extract_lanes({left}, 200, full);
    CHECK(degraded.degraded);
    CHECK(degraded.right.top.h == full.right.top.h);
    CHECK(degraded.right.bottom.h == full.right.bottom.h);

    try {
        extract_lanes({left}, 200);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::LaneLost);
    }
}

TEST_CASE("detect_blobs centroid of a symmetric marker is its center") {
    GrayImage img(100, 100, 0);
    for (int v = 35; v <= 45; ++v) {
        for (int h = 25; h <= 35; ++h) img.at(h, v) = 200;
    }
    for (int v = 70; v <= 74; ++v) {
        for (int h = 70; h <= 74; ++h) img.at(h, v) = 100;
    }
    const auto blobs = detect_blobs(img);
    REQUIRE(blobs.size() == 2);
    CHECK(blobs[0].label == BlobLabel::Robot);
    CHECK(blobs[0].centroid.h == approx_abs(30.0, 0.5));
    CHECK(blobs[0].centroid.v == approx_abs(40.0, 0.5));
    CHECK(blobs[0].pixel_count == 121);
    CHECK(blobs[1].label == BlobLabel::Target);
    CHECK(blobs[1].centroid.h == approx_abs(72.0, 0.5));
}

TEST_CASE("detect_blobs requires exactly one marker per label") {
    GrayImage img(60, 60, 0);
    for (int v = 10; v <= 14; ++v) {
        for (int h = 10; h <= 14; ++h) img.at(h, v) = 200;
    }
    // No target at all.
    try {
        detect_blobs(img);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DetectionAmbiguity);
    }

    // Two disjoint robot markers; oracle: they are disjoint because the
    // bounding boxes are separated by more than one pixel diagonally.
    for (int v = 40; v <= 44; ++v) {
        for (int h = 40; h <= 44; ++h) img.at(h, v) = 200;
    }
    for (int v = 50; v <= 54; ++v) {
        for (int h = 10; h <= 14; ++h) img.at(h, v) = 100;
    }
    try {
        detect_blobs(img);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DetectionAmbiguity);
    }
}

TEST_CASE("detect_blobs merges 8-connected marker pixels") {
    GrayImage img(40, 40, 0);
    // Two squares touching only at a corner form one component.
    for (int v = 10; v <= 13; ++v)
        for (int h = 10; h <= 13; ++h) img.at(h, v) = 200;
    for (int v = 14; v <= 17; ++v)
        for (int h = 14; h <= 17; ++h) img.at(h, v) = 200;
    for (int v = 30; v <= 33; ++v)
        for (int h = 30; h <= 33; ++h) img.at(h, v) = 100;
    const auto blobs = detect_blobs(img);
    CHECK(blobs[0].pixel_count == 32);
}
