#pragma once

#include <iosfwd>

#include "waypath/mission.hpp"

namespace waypath {

/// World plot: bounds rectangle, obstacle circles, lane polylines, target
/// disc, start marker and the mission trajectory. Coordinates are emitted
/// with fixed precision so identical missions give identical bytes.
void write_world_svg(const Scenario& scenario, const MissionReport& report,
                     std::ostream& out);

} // namespace waypath
