#pragma once

#include <stdexcept>
#include <string>

namespace waypath {

enum class Errc {
    DegenerateTriangle,
    UndefinedHeading,
    ZeroLengthBearing,
    BadArgument,
    BadImage,
    BadPolygon,
    LaneLost,
    DetectionAmbiguity,
    BadGrid,
    Unreachable,
    SensorFault,
    Trapped,
    BadScenario,
    Encoding,
    Protocol,
    Transport,
};

/// Library-wide error type; code() distinguishes failure families in tests
/// and at CLI exit-status boundaries.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace waypath
