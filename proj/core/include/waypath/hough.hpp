#pragma once

#include <vector>

#include "waypath/geometry.hpp"
#include "waypath/image.hpp"

namespace waypath {

/// Line in normal form: rho = h*cos(theta) + v*sin(theta), theta in
/// [0, 180) degrees. p0/p1 span the supporting edge pixels along the line.
struct HoughLine {
    double rho = 0.0;
    double theta_deg = 0.0;
    int votes = 0;
    ImagePoint p0;
    ImagePoint p1;
};

/// Standard Hough line transform over a binary edge map. Returns local
/// maxima of the (rho, theta) accumulator with at least min_votes votes,
/// strongest first (ties broken by theta then rho so output order is
/// deterministic). min_votes <= 0 selects the default of 0.3 * height.
std::vector<HoughLine> hough_lines(const GrayImage& edges,
                                   double rho_res = 1.0,
                                   double theta_res_deg = 1.0,
                                   int min_votes = 0);

} // namespace waypath
