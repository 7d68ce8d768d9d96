#include "waypath/svg.hpp"

#include <cstdio>
#include <ostream>

namespace waypath {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

void write_world_svg(const Scenario& scenario, const MissionReport& report,
                     std::ostream& out) {
    const double margin = 10.0;
    const double w = scenario.world_w_cm;
    const double h = scenario.world_h_cm;
    // SVG y grows downward; world y grows north. Flip inside the viewBox.
    auto sy = [&](double y) { return h - y + margin; };
    auto sx = [&](double x) { return x + margin; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << num(w + 2 * margin) << " " << num(h + 2 * margin) << "\">\n";
    out << "  <rect x=\"" << num(margin) << "\" y=\"" << num(margin)
        << "\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    for (const auto& lane : scenario.lanes) {
        out << "  <polyline fill=\"none\" stroke=\"#999\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < lane.size(); ++i) {
            if (i) out << " ";
            out << num(sx(lane[i].x)) << "," << num(sy(lane[i].y));
        }
        out << "\"/>\n";
    }
    for (const Circle& c : scenario.obstacles) {
        out << "  <circle cx=\"" << num(sx(c.center.x)) << "\" cy=\""
            << num(sy(c.center.y)) << "\" r=\"" << num(c.radius_cm)
            << "\" fill=\"#888\"/>\n";
    }
    out << "  <circle cx=\"" << num(sx(scenario.target.position.x)) << "\" cy=\""
        << num(sy(scenario.target.position.y)) << "\" r=\""
        << num(scenario.target.radius_cm)
        << "\" fill=\"none\" stroke=\"green\" stroke-width=\"2\"/>\n";
    out << "  <circle cx=\"" << num(sx(scenario.robot_start.position.x))
        << "\" cy=\"" << num(sy(scenario.robot_start.position.y)) << "\" r=\""
        << num(scenario.params.robot_radius_cm)
        << "\" fill=\"none\" stroke=\"blue\"/>\n";

    if (!report.trajectory.empty()) {
        out << "  <polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < report.trajectory.size(); ++i) {
            if (i) out << " ";
            const WorldPoint p = report.trajectory[i].position;
            out << num(sx(p.x)) << "," << num(sy(p.y));
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

} // namespace waypath
