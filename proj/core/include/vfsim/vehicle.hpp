#pragma once

#include <string>
#include <vector>

namespace vfsim {

enum class Blinker { Off, Left, Right };
enum class Role { Ego, MC, FC, Other };

const char* to_string(Blinker b);
const char* to_string(Role r);
Blinker blinker_from_string(const std::string& s);
Role role_from_string(const std::string& s);

/// Longitudinal state of one vehicle. Lane indices follow the fixed
/// convention ChangeLeft = lane - 1 / ChangeRight = lane + 1.
struct VehicleState {
  std::string vehicle_id;
  double x = 0.0;     // longitudinal position, m
  int lane = 0;
  double v = 0.0;     // m/s, >= 0
  double a = 0.0;     // m/s^2
  Blinker blinker = Blinker::Off;
  Role role = Role::Other;

  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

/// Scripted blinker change: at time t, vehicle switches its blinker.
struct BlinkerEvent {
  double t = 0.0;
  std::string vehicle_id;
  Blinker state = Blinker::Off;

  friend bool operator==(const BlinkerEvent&, const BlinkerEvent&) = default;
};

/// Maneuver-planner knobs; all values live in the scenario file.
struct PlannerParams {
  double w_speed = 1.0;         // weight of the integrated speed shortfall
  double w_lane_change = 0.1;   // flat penalty per lane change
  double gap_seconds = 2.0;     // time-gap rule: required gap = gap_seconds * follower speed
  double occupancy_window = 1.0;  // s after initiation during which both lanes are checked
  double desired_speed = -1.0;  // m/s; < 0 means "use the planned vehicle's initial speed"
  std::vector<double> initiation_fractions = {0.0, 0.25, 0.5, 0.75};  // of the horizon

  friend bool operator==(const PlannerParams&, const PlannerParams&) = default;
};

/// Road, traffic, timing and budget description of one simulation run.
struct Scenario {
  int lane_count = 3;
  double lane_width = 3.5;  // m
  std::vector<VehicleState> vehicles;
  double dt = 0.5;        // s
  double horizon = 5.0;   // s
  double deadline = 20.0; // cost units per step
  double duration = 12.0; // simulated s
  int recheck_period = 10;  // steps between dual-model comparisons
  PlannerParams planner;
  std::vector<BlinkerEvent> blinker_script;  // sorted by t

  /// Throws InvalidArgument when a type invariant is broken
  /// (no unique ego, non-positive dt, lane out of range, ...).
  void validate() const;

  const VehicleState& ego() const;
  std::vector<const VehicleState*> non_ego() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace vfsim
