#pragma once

#include <map>
#include <string>

#include "vfsim/trajectory.hpp"
#include "vfsim/vehicle.hpp"

namespace vfsim {

struct PlanResult {
  ManeuverDecision decision;
  Trajectory trajectory;
  bool emergency = false;  // no gap-clean candidate existed; kept the lane anyway
};

/// Candidate-based maneuver selection for one vehicle.
///
/// Candidates are KeepLane plus ChangeLeft/ChangeRight at each configured
/// initiation time. A candidate is discarded when it violates the time-gap
/// rule against any provided trajectory at any shared sample time: the
/// required gap is gap_seconds x follower speed, checked ahead in every
/// lane the candidate occupies (both lanes during the occupancy window)
/// and behind only in a lane the maneuver newly enters. Among survivors the
/// cheapest wins, cost = w_speed * integrated shortfall below the desired
/// speed + w_lane_change * (1 if lane change). Ties: KeepLane first, then
/// earlier initiation, then lower target lane.
///
/// A vehicle with an active blinker is committed: candidates into the
/// indicated lane are preferred at the earliest feasible initiation, with
/// KeepLane as fallback.
///
/// When nothing survives, the result is an emergency-flagged KeepLane,
/// never an absent value.
PlanResult plan_maneuver(const VehicleState& ego,
                         const std::map<std::string, Trajectory>& others,
                         const Scenario& scenario);

}  // namespace vfsim
