#include "waypath/geometry.hpp"

#include <algorithm>

namespace waypath {

double normalize_deg(double deg) {
    if (deg > -180.0 && deg <= 180.0) return deg; // already canonical
    double t = std::fmod(deg + 180.0, 360.0);
    if (t <= 0.0) t += 360.0;
    return t - 180.0;
}

double law_of_cosines_deg(double a, double b, double c) {
    if (a <= 0.0 || b <= 0.0) {
        raise(Errc::DegenerateTriangle,
              "law_of_cosines_deg: zero-length side");
    }
    double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
    cosine = std::clamp(cosine, -1.0, 1.0);
    return deg_from_rad(std::acos(cosine));
}

ThetaDeg theta_multi(ImagePoint prev_top, ImagePoint prev_bottom,
                     ImagePoint curr_top) {
    if (distance(prev_top, prev_bottom) == 0.0) {
        raise(Errc::DegenerateTriangle,
              "theta_multi: previous endpoints coincide");
    }
    // The current top keeps only its horizontal coordinate; its vertical
    // coordinate is taken from the previous iteration.
    const ImagePoint snapped{curr_top.h, prev_top.v};
    const double a = distance(prev_top, prev_bottom);
    const double b = distance(snapped, prev_bottom);
    const double c = std::fabs(curr_top.h - prev_top.h);
    if (c == 0.0) return ThetaDeg{0.0};
    const double magnitude = law_of_cosines_deg(a, b, c);
    const double sign = curr_top.h > prev_top.h ? 1.0 : -1.0;
    return ThetaDeg{sign * magnitude};
}

ThetaDeg theta_single(ImagePoint top, ImagePoint bottom) {
    if (top.v == bottom.v) {
        raise(Errc::UndefinedHeading,
              "theta_single: endpoints share a row, heading undefined");
    }
    const double a = distance(top, bottom);
    const double b = std::fabs(top.v - bottom.v);
    const double c = std::fabs(top.h - bottom.h);
    if (c == 0.0) return ThetaDeg{0.0};
    const double magnitude = law_of_cosines_deg(a, b, c);
    const double sign = top.h > bottom.h ? 1.0 : -1.0;
    return ThetaDeg{sign * magnitude};
}

SteerCommand steer_from_theta(ThetaDeg theta) {
    SteerCommand cmd;
    cmd.theta = theta;
    cmd.duration_s = std::fabs(theta.deg()) / kTurnRateDegPerSec;
    if (theta.deg() < 0.0) {
        cmd.direction = Direction::Left;
    } else if (theta.deg() > 0.0) {
        cmd.direction = Direction::Right;
    } else {
        cmd.direction = Direction::Straight;
    }
    return cmd;
}

void MidlineHistory::push(const Segment& midline) {
    if (size_ < 2) {
        slots_[size_++] = midline;
        return;
    }
    slots_[0] = slots_[1]; // oldest evicted first
    slots_[1] = midline;
}

const Segment& MidlineHistory::previous() const {
    if (size_ < 2) raise(Errc::BadArgument, "MidlineHistory: no previous observation");
    return slots_[0];
}

const Segment& MidlineHistory::current() const {
    if (size_ == 0) raise(Errc::BadArgument, "MidlineHistory: empty");
    return slots_[size_ - 1];
}

} // namespace waypath
