#pragma once

#include <cmath>
#include <cstddef>

#include "waypath/error.hpp"

namespace waypath {

inline constexpr double kPi = 3.14159265358979323846;

/// Calibrated open-loop rotation rate of the robot platform.
inline constexpr double kTurnRateDegPerSec = 23.0;

inline double deg_from_rad(double rad) { return rad * 180.0 / kPi; }
inline double rad_from_deg(double deg) { return deg * kPi / 180.0; }

/// Wrap an angle into (-180, 180].
double normalize_deg(double deg);

/// Pixel-space point. h grows rightward, v grows downward.
struct ImagePoint {
    double h = 0.0;
    double v = 0.0;
};

inline double distance(ImagePoint a, ImagePoint b) {
    return std::hypot(a.h - b.h, a.v - b.v);
}

/// Image segment oriented so that top has the smaller v coordinate.
struct Segment {
    ImagePoint top;
    ImagePoint bottom;
};

/// Signed steering angle in degrees. Negative turns left, positive turns
/// right; a rightward-leaning midline yields a positive value.
class ThetaDeg {
public:
    ThetaDeg() = default;
    explicit ThetaDeg(double deg) : deg_(normalize_deg(deg)) {}

    double deg() const { return deg_; }

private:
    double deg_ = 0.0;
};

enum class Direction { Left, Right, Straight };

/// Timed open-loop turn: duration_s = |theta| / 23.
struct SteerCommand {
    Direction direction = Direction::Straight;
    double duration_s = 0.0;
    ThetaDeg theta;
};

/// Angle (degrees, unsigned) at the vertex between sides a and b of a
/// triangle with opposite side c. The cosine argument is clamped to [-1, 1]
/// so near-degenerate inputs stay finite.
double law_of_cosines_deg(double a, double b, double c);

/// Turn angle from two consecutive midline observations: the previous
/// iteration's endpoints plus the current top endpoint, whose vertical
/// coordinate is overwritten with the previous one before measuring.
ThetaDeg theta_multi(ImagePoint prev_top, ImagePoint prev_bottom,
                     ImagePoint curr_top);

/// Turn angle from one midline: angle between bottom->top and the vertical
/// ray through bottom, signed by the top's horizontal displacement.
ThetaDeg theta_single(ImagePoint top, ImagePoint bottom);

SteerCommand steer_from_theta(ThetaDeg theta);

/// Two-deep FIFO of midline observations backing theta_multi.
class MidlineHistory {
public:
    void push(const Segment& midline);

    std::size_t size() const { return size_; }
    bool full() const { return size_ == 2; }

    /// Older of the two stored observations.
    const Segment& previous() const;
    /// Most recent observation.
    const Segment& current() const;

private:
    Segment slots_[2];
    std::size_t size_ = 0;
};

} // namespace waypath
