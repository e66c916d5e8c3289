#pragma once

#include <string>
#include <vector>

namespace vfsim {

enum class ManeuverKind { KeepLane, ChangeLeft, ChangeRight };

const char* to_string(ManeuverKind kind);
ManeuverKind maneuver_kind_from_string(const std::string& s);

/// Discrete lane decision: whether to change, when, and into which lane.
struct ManeuverDecision {
  ManeuverKind kind = ManeuverKind::KeepLane;
  double t_start = 0.0;
  int target_lane = 0;

  friend bool operator==(const ManeuverDecision&, const ManeuverDecision&) = default;
};

struct TrajectorySample {
  double t = 0.0;
  double x = 0.0;
  int lane = 0;

  friend bool operator==(const TrajectorySample&, const TrajectorySample&) = default;
};

/// Time-indexed predicted motion plus the lane decisions it realizes.
/// Samples are strictly increasing in t and start at t = 0 with the
/// initial state of the predicted vehicle.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<ManeuverDecision> maneuvers;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

  double end_time() const { return samples.empty() ? 0.0 : samples.back().t; }

  /// Lane occupied at sample index i.
  int lane_at(std::size_t i) const { return samples[i].lane; }

  /// Forward-difference speed at sample index i (last sample reuses the
  /// previous interval). Zero for single-sample trajectories.
  double speed_at(std::size_t i) const;
};

}  // namespace vfsim
