#include "vfsim/trajectory.hpp"

#include "vfsim/errors.hpp"

namespace vfsim {

const char* to_string(ManeuverKind kind) {
  switch (kind) {
    case ManeuverKind::KeepLane: return "KeepLane";
    case ManeuverKind::ChangeLeft: return "ChangeLeft";
    case ManeuverKind::ChangeRight: return "ChangeRight";
  }
  return "KeepLane";
}

ManeuverKind maneuver_kind_from_string(const std::string& s) {
  if (s == "KeepLane") return ManeuverKind::KeepLane;
  if (s == "ChangeLeft") return ManeuverKind::ChangeLeft;
  if (s == "ChangeRight") return ManeuverKind::ChangeRight;
  throw InvalidArgument("unknown maneuver kind '" + s + "'");
}

double Trajectory::speed_at(std::size_t i) const {
  if (samples.size() < 2) return 0.0;
  if (i + 1 >= samples.size()) i = samples.size() - 2;
  const auto& s0 = samples[i];
  const auto& s1 = samples[i + 1];
  return (s1.x - s0.x) / (s1.t - s0.t);
}

}  // namespace vfsim
