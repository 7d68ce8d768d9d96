#pragma once

#include <string>
#include <string_view>

#include "waypath/error.hpp"

namespace waypath {

enum class MsgType { Theta, Range, TargetFound, LaneLost, Done, Error };

/// One protocol message. Every message serializes to a single
/// linefeed-terminated UTF-8 line: "THETA -45.000000\n", "RANGE 29.500000\n",
/// "TARGET_FOUND\n", "LANE_LOST\n", "DONE\n", "ERROR <text>\n". Numeric
/// payloads carry exactly six decimal places.
struct WireMessage {
    MsgType type = MsgType::Done;
    double value = 0.0;   // Theta / Range payload
    std::string text;     // Error payload

    static WireMessage theta(double deg) { return {MsgType::Theta, deg, {}}; }
    static WireMessage range(double cm) { return {MsgType::Range, cm, {}}; }
    static WireMessage target_found() { return {MsgType::TargetFound, 0.0, {}}; }
    static WireMessage lane_lost() { return {MsgType::LaneLost, 0.0, {}}; }
    static WireMessage done() { return {MsgType::Done, 0.0, {}}; }
    static WireMessage error(std::string what) {
        return {MsgType::Error, 0.0, std::move(what)};
    }

    bool operator==(const WireMessage&) const = default;
};

/// Canonical line form, linefeed included. Non-finite numeric payloads
/// raise Encoding.
std::string encode(const WireMessage& msg);

/// Inverse of encode. Accepts an optional trailing carriage return and/or
/// linefeed. Unknown tags and malformed payloads raise Protocol.
WireMessage decode(std::string_view line);

} // namespace waypath
