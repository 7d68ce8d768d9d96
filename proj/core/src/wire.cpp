#include "waypath/wire.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace waypath {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double parse_number(std::string_view payload, std::string_view tag) {
    if (payload.empty()) {
        raise(Errc::Protocol, std::string(tag) + ": missing payload");
    }
    const std::string text(payload);
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || !std::isfinite(v)) {
        raise(Errc::Protocol, std::string(tag) + ": malformed payload '" + text + "'");
    }
    return v;
}

} // namespace

std::string encode(const WireMessage& msg) {
    switch (msg.type) {
    case MsgType::Theta:
        if (!std::isfinite(msg.value)) raise(Errc::Encoding, "theta not finite");
        return "THETA " + fmt6(msg.value) + "\n";
    case MsgType::Range:
        if (!std::isfinite(msg.value)) raise(Errc::Encoding, "range not finite");
        return "RANGE " + fmt6(msg.value) + "\n";
    case MsgType::TargetFound:
        return "TARGET_FOUND\n";
    case MsgType::LaneLost:
        return "LANE_LOST\n";
    case MsgType::Done:
        return "DONE\n";
    case MsgType::Error:
        if (msg.text.find('\n') != std::string::npos) {
            raise(Errc::Encoding, "error text must be single-line");
        }
        return "ERROR " + msg.text + "\n";
    }
    raise(Errc::Encoding, "unknown message type");
}

WireMessage decode(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    const std::size_t space = line.find(' ');
    const std::string_view tag = line.substr(0, space);
    const std::string_view payload =
        space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);

    if (tag == "THETA") return WireMessage::theta(parse_number(payload, tag));
    if (tag == "RANGE") return WireMessage::range(parse_number(payload, tag));
    if (tag == "TARGET_FOUND") {
        if (!payload.empty()) raise(Errc::Protocol, "TARGET_FOUND takes no payload");
        return WireMessage::target_found();
    }
    if (tag == "LANE_LOST") {
        if (!payload.empty()) raise(Errc::Protocol, "LANE_LOST takes no payload");
        return WireMessage::lane_lost();
    }
    if (tag == "DONE") {
        if (!payload.empty()) raise(Errc::Protocol, "DONE takes no payload");
        return WireMessage::done();
    }
    if (tag == "ERROR") return WireMessage::error(std::string(payload));
    raise(Errc::Protocol, "unknown message tag '" + std::string(tag) + "'");
}

} // namespace waypath
