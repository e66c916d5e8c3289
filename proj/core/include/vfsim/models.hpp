#pragma once

#include <map>
#include <string>
#include <vector>

#include "vfsim/trajectory.hpp"
#include "vfsim/vehicle.hpp"

namespace vfsim {

/// Prediction fidelity levels in the model library.
enum class ModelKind { Original, Approximated, Detailed };

const char* to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& s);

struct ModelInfo {
  std::string model_id;
  ModelKind kind = ModelKind::Original;

  friend bool operator==(const ModelInfo&, const ModelInfo&) = default;
};

/// Id -> model table preserving declaration order.
class ModelRegistry {
 public:
  void add(ModelInfo info);
  bool contains(const std::string& id) const { return models_.count(id) != 0; }
  const ModelInfo& info(const std::string& id) const;
  const std::vector<std::string>& ids() const { return order_; }

  friend bool operator==(const ModelRegistry&, const ModelRegistry&) = default;

 private:
  std::vector<std::string> order_;
  std::map<std::string, ModelInfo> models_;
};

/// Constant-acceleration prediction: x(t) = 1/2 a t^2 + v t + x0, lane
/// constant, sampled at t = 0, dt, 2dt, ... up to the horizon.
Trajectory predict_original(const VehicleState& state, double horizon, double dt);

/// Same prediction with the acceleration term removed: x(t) = v t + x0.
/// For a = 0 the two predictions are bitwise identical.
Trajectory predict_approximated(const VehicleState& state, double horizon, double dt);

/// Highest-fidelity prediction: plans every vehicle as if it were the ego
/// car (its blinker and neighbors considered) against constant-lane
/// predictions of the rest, yielding lane-changing trajectories for all
/// cars. Deterministic in the scenario.
std::map<std::string, Trajectory> predict_detailed(const Scenario& scenario, double horizon);

}  // namespace vfsim
