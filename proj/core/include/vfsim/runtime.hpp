#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfsim/context.hpp"
#include "vfsim/decision_tree.hpp"
#include "vfsim/heatmap.hpp"
#include "vfsim/models.hpp"
#include "vfsim/planner.hpp"
#include "vfsim/vfg.hpp"

namespace vfsim {

/// Everything the adaptive loop consults: the frame graph, the model
/// registry, the tree compiled (and deadline-pruned) from that graph, the
/// requested property set, and the accumulating context heat map.
struct KnowledgeBase {
  VFGraph graph;
  ModelRegistry models;
  PropertySet requested;
  DecisionTree tree;
  HeatMap heatmap;
};

/// One loop iteration's trace entry. ego_state is the state after the step
/// executed (lane switch applied, kinematics advanced).
struct StepRecord {
  double t = 0.0;
  Context context;
  std::vector<std::string> candidates;
  std::string selected;
  ManeuverDecision decision;
  VehicleState ego_state;
  double step_cost = 0.0;
  bool switched = false;  // selection differs from the previous step's
};

/// Logged dual-model comparison, replayable for audit.
struct ComparisonRecord {
  double t = 0.0;
  ManeuverDecision original_decision;
  ManeuverDecision approximated_decision;
  bool matched = false;
  std::string selected;
};

struct RunResult {
  std::vector<StepRecord> steps;
  std::vector<ComparisonRecord> comparisons;
  double total_cost = 0.0;
  int switch_count = 0;
};

struct RunOptions {
  std::string force_model;  // frame id; empty = adaptive selection
};

/// Compiles the graph into a pruned tree and assembles the knowledge base.
/// `ordering_hint` reorders factor tests by observed frequency when given;
/// the default order is declaration order.
KnowledgeBase build_knowledge_base(VFGraph graph, ModelRegistry models, PropertySet requested,
                                   double deadline, const HeatMap* ordering_hint = nullptr);

/// Requested property set the lane-change controller dispatches on:
/// the "position" property with the head frame's declared range.
PropertySet default_requested(const VFGraph& graph);

/// Extracts the influencing-factor observations from the world at the
/// current instant (blinking = any non-ego blinker on, plus gap_ahead /
/// ego_speed when the library names them) and bumps the heat-map cell.
Context monitor(const Scenario& world, KnowledgeBase& kb);

/// Tree lookup with head-frame fallback: an exhausted leaf falls back to
/// [head] when the head fits the deadline, otherwise raises
/// DeadlineInfeasibleError.
std::vector<std::string> analyze(const Context& context, const KnowledgeBase& kb,
                                 double deadline);

/// Mutable selection state carried across loop steps.
struct PlanState {
  std::string selected;              // empty until first selection
  Context last_context;
  bool have_context = false;
  int steps_since_comparison = 0;
  bool ever_compared = false;
};

/// Outcome of one planning step: which frame was chosen, the maneuver its
/// pipeline produced, and what the step cost in model invocations.
struct PlanOutcome {
  std::string selected;
  ManeuverDecision decision;
  Trajectory trajectory;
  double cost = 0.0;
  std::optional<ComparisonRecord> comparison;
};

/// Frame selection per the dual-model rule: when the candidates contain an
/// original/approximated pair related by an Approximate edge and a
/// comparison is due (every recheck_period steps or on context change),
/// both pipelines run and the approximated frame is chosen iff the two
/// maneuver decisions match (same kind and target lane, initiations within
/// one dt). Between checks the previous selection persists. A comparison
/// whose combined wcet would bust the deadline is skipped in favor of the
/// cheapest pair member. Unrelated candidates select by lowest wcet.
PlanOutcome plan_select(const std::vector<std::string>& candidates, const Scenario& world,
                        const KnowledgeBase& kb, PlanState& state);

/// Applies the decision to the world: the ego switches lane when the
/// maneuver initiates within this step, every vehicle advances one dt of
/// constant-acceleration kinematics (speed clamped at zero).
void execute(const ManeuverDecision& decision, Scenario& world);

/// The closed loop: monitor -> analyze -> plan -> execute, once per dt over
/// the scenario duration. Deterministic. Scripted blinker events fire when
/// their time is reached. Propagates DeadlineInfeasibleError.
RunResult run_adaptive_simulation(const Scenario& scenario, KnowledgeBase& kb,
                                  const RunOptions& options = {});

/// Decision-level equality used by the comparison: same kind and target
/// lane, |t_start difference| <= tol_t.
bool decisions_match(const ManeuverDecision& a, const ManeuverDecision& b, double tol_t);

/// Runs one frame's ego pipeline: predict all non-ego vehicles with the
/// frame's model, then plan the ego against those trajectories.
PlanResult run_pipeline(const ValidityFrame& frame, const ModelRegistry& models,
                        const Scenario& world);

}  // namespace vfsim
