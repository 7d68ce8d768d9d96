#include "waypath/hough.hpp"

#include <algorithm>
#include <cmath>

namespace waypath {

namespace {

struct Peak {
    int votes;
    int theta_bin;
    int rho_bin;
};

} // namespace

std::vector<HoughLine> hough_lines(const GrayImage& edges, double rho_res,
                                   double theta_res_deg, int min_votes) {
    if (rho_res <= 0.0 || theta_res_deg <= 0.0) {
        raise(Errc::BadArgument, "hough_lines: non-positive resolution");
    }
    if (min_votes <= 0) {
        min_votes = std::max(1, static_cast<int>(0.3 * edges.height));
    }

    const int num_theta =
        std::max(1, static_cast<int>(std::ceil(180.0 / theta_res_deg)));
    const double max_rho = std::hypot(edges.width, edges.height);
    const int num_rho = 2 * static_cast<int>(std::ceil(max_rho / rho_res)) + 1;
    const int rho_center = num_rho / 2;

    std::vector<double> sin_tab(num_theta), cos_tab(num_theta);
    for (int t = 0; t < num_theta; ++t) {
        const double rad = rad_from_deg(t * theta_res_deg);
        sin_tab[t] = std::sin(rad);
        cos_tab[t] = std::cos(rad);
    }

    std::vector<int> acc(static_cast<std::size_t>(num_theta) * num_rho, 0);
    auto cell = [&](int t, int r) -> int& {
        return acc[static_cast<std::size_t>(t) * num_rho + r];
    };

    for (int v = 0; v < edges.height; ++v) {
        for (int h = 0; h < edges.width; ++h) {
            if (edges.at(h, v) == 0) continue;
            for (int t = 0; t < num_theta; ++t) {
                const double rho = h * cos_tab[t] + v * sin_tab[t];
                const int r =
                    rho_center + static_cast<int>(std::lround(rho / rho_res));
                if (r >= 0 && r < num_rho) ++cell(t, r);
            }
        }
    }

    // 4-neighborhood local maxima, with >= toward smaller indices and >
    // toward larger ones so accumulator plateaus report once.
    std::vector<Peak> peaks;
    for (int t = 0; t < num_theta; ++t) {
        for (int r = 0; r < num_rho; ++r) {
            const int val = cell(t, r);
            if (val < min_votes) continue;
            if (r > 0 && cell(t, r - 1) > val) continue;
            if (r + 1 < num_rho && cell(t, r + 1) >= val) continue;
            if (t > 0 && cell(t - 1, r) > val) continue;
            if (t + 1 < num_theta && cell(t + 1, r) >= val) continue;
            peaks.push_back({val, t, r});
        }
    }
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.theta_bin != b.theta_bin) return a.theta_bin < b.theta_bin;
        return a.rho_bin < b.rho_bin;
    });

    std::vector<HoughLine> lines;
    lines.reserve(peaks.size());
    for (const Peak& p : peaks) {
        HoughLine line;
        line.votes = p.votes;
        line.theta_deg = p.theta_bin * theta_res_deg;
        line.rho = (p.rho_bin - rho_center) * rho_res;

        // Endpoints: extreme supporting pixels projected onto the line
        // direction (-sin, cos).
        const double ct = cos_tab[p.theta_bin];
        const double st = sin_tab[p.theta_bin];
        double lo = 0.0, hi = 0.0;
        bool seen = false;
        for (int v = 0; v < edges.height; ++v) {
            for (int h = 0; h < edges.width; ++h) {
                if (edges.at(h, v) == 0) continue;
                if (std::fabs(h * ct + v * st - line.rho) > rho_res) continue;
                const double s = -h * st + v * ct;
                if (!seen) {
                    lo = hi = s;
                    seen = true;
                } else {
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
            }
        }
        if (seen) {
            line.p0 = {line.rho * ct - lo * st, line.rho * st + lo * ct};
            line.p1 = {line.rho * ct - hi * st, line.rho * st + hi * ct};
        }
        lines.push_back(line);
    }
    return lines;
}

} // namespace waypath
