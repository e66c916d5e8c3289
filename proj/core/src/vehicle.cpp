#include "vfsim/vehicle.hpp"

#include <set>

#include "vfsim/errors.hpp"

namespace vfsim {

const char* to_string(Blinker b) {
  switch (b) {
    case Blinker::Off: return "off";
    case Blinker::Left: return "left";
    case Blinker::Right: return "right";
  }
  return "off";
}

Blinker blinker_from_string(const std::string& s) {
  if (s == "off") return Blinker::Off;
  if (s == "left") return Blinker::Left;
  if (s == "right") return Blinker::Right;
  throw InvalidArgument("unknown blinker state '" + s + "'");
}

const char* to_string(Role r) {
  switch (r) {
    case Role::Ego: return "ego";
    case Role::MC: return "mc";
    case Role::FC: return "fc";
    case Role::Other: return "other";
  }
  return "other";
}

Role role_from_string(const std::string& s) {
  if (s == "ego") return Role::Ego;
  if (s == "mc") return Role::MC;
  if (s == "fc") return Role::FC;
  if (s == "other") return Role::Other;
  throw InvalidArgument("unknown role '" + s + "'");
}

void Scenario::validate() const {
  if (lane_count <= 0) throw InvalidArgument("lane_count must be positive");
  if (lane_width <= 0.0) throw InvalidArgument("lane_width must be positive");
  if (dt <= 0.0) throw InvalidArgument("dt must be positive");
  if (horizon < dt) throw InvalidArgument("horizon must be at least dt");
  if (deadline <= 0.0) throw InvalidArgument("deadline must be positive");
  if (duration < 0.0) throw InvalidArgument("duration must be non-negative");
  if (recheck_period <= 0) throw InvalidArgument("recheck period must be positive");

  int ego_count = 0;
  std::set<std::string> ids;
  for (const auto& v : vehicles) {
    if (v.vehicle_id.empty()) throw InvalidArgument("vehicle with empty id");
    if (!ids.insert(v.vehicle_id).second)
      throw InvalidArgument("duplicate vehicle id '" + v.vehicle_id + "'");
    if (v.lane < 0 || v.lane >= lane_count)
      throw InvalidArgument("vehicle '" + v.vehicle_id + "' lane out of range");
    if (v.v < 0.0) throw InvalidArgument("vehicle '" + v.vehicle_id + "' has negative speed");
    if (v.role == Role::Ego) ++ego_count;
  }
  if (ego_count != 1) throw InvalidArgument("scenario needs exactly one ego vehicle");

  for (const auto& e : blinker_script) {
    if (ids.count(e.vehicle_id) == 0)
      throw InvalidArgument("blinker event names unknown vehicle '" + e.vehicle_id + "'");
    if (e.t < 0.0) throw InvalidArgument("blinker event before t=0");
  }
  for (double f : planner.initiation_fractions)
    if (f < 0.0 || f > 1.0) throw InvalidArgument("initiation fraction outside [0,1]");
  if (planner.initiation_fractions.empty())
    throw InvalidArgument("planner needs at least one initiation time");
  if (planner.gap_seconds <= 0.0) throw InvalidArgument("gap_seconds must be positive");
  if (planner.occupancy_window < 0.0) throw InvalidArgument("occupancy window must be >= 0");
}

const VehicleState& Scenario::ego() const {
  for (const auto& v : vehicles)
    if (v.role == Role::Ego) return v;
  throw InvalidArgument("scenario has no ego vehicle");
}

std::vector<const VehicleState*> Scenario::non_ego() const {
  std::vector<const VehicleState*> out;
  for (const auto& v : vehicles)
    if (v.role != Role::Ego) out.push_back(&v);
  return out;
}

}  // namespace vfsim
