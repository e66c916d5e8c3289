#pragma once

#include <iosfwd>
#include <string>

#include "vfsim/vehicle.hpp"

namespace vfsim {

/// Line-oriented scenario format: [road], [sim], [planner],
/// [vehicle <id>] and [blinker_script] sections, key = value lines,
/// '#' comments. The result is validated before returning.
Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

/// Canonical serialization; load(save(s)) == s.
std::string save_scenario(const Scenario& scenario);

}  // namespace vfsim
