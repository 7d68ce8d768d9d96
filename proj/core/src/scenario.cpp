#include "waypath/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace waypath {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
    raise(Errc::BadScenario, origin + ": " + what);
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& origin, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            bad(origin, "unknown key '" + key + "' in " + where);
        }
    }
}

double number(const json& j, const std::string& origin, const std::string& where) {
    if (!j.is_number()) bad(origin, where + " must be a number");
    return j.get<double>();
}

WorldPoint point(const json& j, const std::string& origin, const std::string& where) {
    check_keys(j, {"x_cm", "y_cm"}, origin, where);
    WorldPoint p;
    if (j.contains("x_cm")) p.x = number(j["x_cm"], origin, where + ".x_cm");
    if (j.contains("y_cm")) p.y = number(j["y_cm"], origin, where + ".y_cm");
    return p;
}

// Byte offset -> "line L column C" for parse diagnostics.
std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + " column " + std::to_string(col);
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(origin, "parse error at " + line_column(text, e.byte) + ": " + e.what());
    }
    if (!root.is_object()) bad(origin, "top level must be an object");
    check_keys(root,
               {"world", "obstacles", "lanes", "robot", "target", "params",
                "camera"},
               origin, "scenario");

    Scenario s;
    if (root.contains("world")) {
        const json& w = root["world"];
        check_keys(w, {"width_cm", "height_cm"}, origin, "world");
        if (w.contains("width_cm")) s.world_w_cm = number(w["width_cm"], origin, "world.width_cm");
        if (w.contains("height_cm")) s.world_h_cm = number(w["height_cm"], origin, "world.height_cm");
    }
    if (root.contains("obstacles")) {
        if (!root["obstacles"].is_array()) bad(origin, "obstacles must be an array");
        for (const json& o : root["obstacles"]) {
            check_keys(o, {"x_cm", "y_cm", "radius_cm"}, origin, "obstacle");
            Circle c;
            c.center = {number(o.at("x_cm"), origin, "obstacle.x_cm"),
                        number(o.at("y_cm"), origin, "obstacle.y_cm")};
            c.radius_cm = number(o.at("radius_cm"), origin, "obstacle.radius_cm");
            s.obstacles.push_back(c);
        }
    }
    if (root.contains("lanes")) {
        if (!root["lanes"].is_array()) bad(origin, "lanes must be an array");
        for (const json& lane : root["lanes"]) {
            if (!lane.is_array()) bad(origin, "each lane must be an array of points");
            std::vector<WorldPoint> pts;
            for (const json& p : lane) pts.push_back(point(p, origin, "lane point"));
            if (pts.size() < 2) bad(origin, "lane needs at least 2 points");
            s.lanes.push_back(std::move(pts));
        }
    }
    if (root.contains("robot")) {
        const json& r = root["robot"];
        check_keys(r, {"x_cm", "y_cm", "heading_deg"}, origin, "robot");
        s.robot_start.position = {number(r.at("x_cm"), origin, "robot.x_cm"),
                                  number(r.at("y_cm"), origin, "robot.y_cm")};
        if (r.contains("heading_deg")) {
            s.robot_start.heading_deg = number(r["heading_deg"], origin, "robot.heading_deg");
        }
    }
    if (root.contains("target")) {
        const json& t = root["target"];
        check_keys(t, {"x_cm", "y_cm", "radius_cm"}, origin, "target");
        s.target.position = {number(t.at("x_cm"), origin, "target.x_cm"),
                             number(t.at("y_cm"), origin, "target.y_cm")};
        if (t.contains("radius_cm")) {
            s.target.radius_cm = number(t["radius_cm"], origin, "target.radius_cm");
        }
    }
    if (root.contains("params")) {
        const json& p = root["params"];
        check_keys(p,
                   {"forward_speed_cmps", "turn_rate_degps", "sensor_max_range_cm",
                    "obstacle_threshold_cm", "dt_s", "robot_radius_cm",
                    "clearance_cm", "max_sweep_cycles", "timeout_s", "sensor_rays",
                    "sensor_cone_half_deg"},
                   origin, "params");
        auto get = [&](const char* key, double& slot) {
            if (p.contains(key)) slot = number(p[key], origin, std::string("params.") + key);
        };
        get("forward_speed_cmps", s.params.forward_speed_cmps);
        get("turn_rate_degps", s.params.turn_rate_degps);
        get("sensor_max_range_cm", s.params.sensor_max_range_cm);
        get("obstacle_threshold_cm", s.params.obstacle_threshold_cm);
        get("dt_s", s.params.dt_s);
        get("robot_radius_cm", s.params.robot_radius_cm);
        get("clearance_cm", s.params.clearance_cm);
        get("timeout_s", s.params.timeout_s);
        get("sensor_cone_half_deg", s.params.sensor_cone_half_deg);
        if (p.contains("max_sweep_cycles")) {
            s.params.max_sweep_cycles =
                static_cast<int>(number(p["max_sweep_cycles"], origin, "params.max_sweep_cycles"));
        }
        if (p.contains("sensor_rays")) {
            s.params.sensor_rays =
                static_cast<int>(number(p["sensor_rays"], origin, "params.sensor_rays"));
        }
    }
    bool overhead_sized = false;
    if (root.contains("camera")) {
        const json& c = root["camera"];
        check_keys(c, {"onboard", "overhead"}, origin, "camera");
        if (c.contains("onboard")) {
            const json& o = c["onboard"];
            check_keys(o, {"width_px", "height_px", "focal_px", "height_cm", "pitch_deg"},
                       origin, "camera.onboard");
            OnboardCamera& cam = s.camera.onboard;
            if (o.contains("width_px")) cam.width_px = static_cast<int>(number(o["width_px"], origin, "onboard.width_px"));
            if (o.contains("height_px")) cam.height_px = static_cast<int>(number(o["height_px"], origin, "onboard.height_px"));
            if (o.contains("focal_px")) cam.focal_px = number(o["focal_px"], origin, "onboard.focal_px");
            if (o.contains("height_cm")) cam.height_cm = number(o["height_cm"], origin, "onboard.height_cm");
            if (o.contains("pitch_deg")) cam.pitch_deg = number(o["pitch_deg"], origin, "onboard.pitch_deg");
        }
        if (c.contains("overhead")) {
            const json& o = c["overhead"];
            check_keys(o, {"width_px", "height_px", "scale_px_per_cm"}, origin,
                       "camera.overhead");
            OverheadCamera& cam = s.camera.overhead;
            if (o.contains("width_px")) cam.width_px = static_cast<int>(number(o["width_px"], origin, "overhead.width_px"));
            if (o.contains("height_px")) cam.height_px = static_cast<int>(number(o["height_px"], origin, "overhead.height_px"));
            if (o.contains("scale_px_per_cm")) cam.scale_px_per_cm = number(o["scale_px_per_cm"], origin, "overhead.scale_px_per_cm");
            overhead_sized = o.contains("width_px") || o.contains("height_px");
        }
    }
    if (!overhead_sized) fit_overhead_to_world(s);

    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::BadScenario, "scenario not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

void validate(const Scenario& s) {
    const SimParams& p = s.params;
    if (s.world_w_cm <= 0 || s.world_h_cm <= 0) {
        raise(Errc::BadScenario, "world bounds must be positive");
    }
    if (p.forward_speed_cmps <= 0 || p.turn_rate_degps <= 0 || p.dt_s <= 0 ||
        p.sensor_max_range_cm <= 0 || p.obstacle_threshold_cm <= 0 ||
        p.robot_radius_cm <= 0 || p.clearance_cm <= 0 || p.timeout_s <= 0 ||
        p.max_sweep_cycles < 1 || p.sensor_rays < 1) {
        raise(Errc::BadScenario, "all parameters must be positive");
    }
    if (s.camera.onboard.focal_px <= 0 || s.camera.overhead.scale_px_per_cm <= 0) {
        raise(Errc::BadScenario, "camera focal length and scale must be positive");
    }
    for (const Circle& c : s.obstacles) {
        if (c.radius_cm <= 0) raise(Errc::BadScenario, "obstacle radius must be positive");
        if (distance(c.center, s.robot_start.position) <= c.radius_cm + p.robot_radius_cm) {
            raise(Errc::BadScenario, "robot start overlaps an obstacle");
        }
        if (distance(c.center, s.target.position) <= c.radius_cm) {
            raise(Errc::BadScenario, "target lies inside an obstacle");
        }
    }
    auto inside = [&](WorldPoint q) {
        return q.x >= 0 && q.x <= s.world_w_cm && q.y >= 0 && q.y <= s.world_h_cm;
    };
    if (!inside(s.robot_start.position) || !inside(s.target.position)) {
        raise(Errc::BadScenario, "robot start and target must lie inside bounds");
    }
}

void fit_overhead_to_world(Scenario& s) {
    OverheadCamera& cam = s.camera.overhead;
    cam.width_px = std::max(1, static_cast<int>(
                                   std::ceil(s.world_w_cm * cam.scale_px_per_cm)));
    cam.height_px = std::max(1, static_cast<int>(
                                    std::ceil(s.world_h_cm * cam.scale_px_per_cm)));
}

Scenario lane_testbed_scenario() {
    Scenario s;
    s.robot_start = {{152.4, 30.0}, 0.0};
    s.target = {{152.4, 280.0}, 15.0};
    s.lanes = {
        {{127.4, 0.0}, {127.4, 304.8}},
        {{177.4, 0.0}, {177.4, 304.8}},
    };
    return s;
}

} // namespace waypath
