#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vfsim/context.hpp"
#include "vfsim/trajectory.hpp"

namespace vfsim {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using BoolSet = std::set<bool>;

/// A property range or factor domain: a closed interval over the reals or
/// an enumerated set of flags. Mixed domains cannot be expressed.
using Domain = std::variant<Interval, BoolSet>;

bool domain_contains(const Domain& d, const ContextValue& v);
bool domain_subsumes(const Domain& outer, const Domain& inner);
std::string domain_to_string(const Domain& d);

/// Ordered name -> domain table with unique names. Serves as both the
/// modeled-property set (pi) and the influencing-factor set (gamma).
class NamedDomainSet {
 public:
  NamedDomainSet() = default;
  NamedDomainSet(std::initializer_list<std::pair<std::string, Domain>> init);

  /// Throws InvalidArgument on duplicate name or empty interval.
  void add(std::string name, Domain domain);

  const Domain* find(const std::string& name) const;
  bool has(const std::string& name) const { return find(name) != nullptr; }
  bool empty() const { return entries_.size() == 0; }
  std::size_t size() const { return entries_.size(); }

  const std::vector<std::pair<std::string, Domain>>& entries() const { return entries_; }
  std::set<std::string> names() const;

  friend bool operator==(const NamedDomainSet&, const NamedDomainSet&) = default;

 private:
  std::vector<std::pair<std::string, Domain>> entries_;  // declaration order
};

using PropertySet = NamedDomainSet;
using FactorSet = NamedDomainSet;

/// Platform and cost description of one model's execution.
struct ExecutionSpec {
  std::string platform_label;
  double wcet = 1.0;       // worst-case cost per invocation, abstract units
  double mean_cost = 1.0;  // 0 < mean_cost <= wcet

  friend bool operator==(const ExecutionSpec&, const ExecutionSpec&) = default;
};

enum class ValidityStatus { AssumedValid, Validated, Invalidated };

const char* to_string(ValidityStatus s);
ValidityStatus validity_status_from_string(const std::string& s);

struct ValidityRecord {
  ValidityStatus status = ValidityStatus::AssumedValid;
  std::string notes;

  friend bool operator==(const ValidityRecord&, const ValidityRecord&) = default;
};

/// Named, deterministic check over a produced trace and the context it was
/// produced in. Conditions referenced by name in library files resolve to
/// the builtin catalog; tests may supply ad-hoc predicates directly.
struct ValidationCondition {
  std::string name;
  bool expected = true;
  std::function<bool(const Trajectory&, const Context&)> predicate;
};

/// Builtin validation predicates: "x_nondecreasing", "starts_at_time_zero",
/// "lane_nonnegative". Throws InvalidArgument for unknown names.
ValidationCondition builtin_validation(const std::string& name, bool expected = true);

/// Per-model usage metadata: what the model answers (pi), where those
/// answers are valid (gamma), what it costs, and how to (in)validate it.
struct ValidityFrame {
  std::string frame_id;
  std::string model_id;
  std::map<std::string, std::string> property_bindings;  // pi name -> model component
  std::map<std::string, std::string> factor_bindings;    // gamma name -> model component
  PropertySet pi;
  FactorSet gamma;
  ExecutionSpec exec;
  ValidityRecord validity;
  std::vector<ValidationCondition> validations;

  /// Structural checks: bindings name things present in pi/gamma,
  /// 0 < mean_cost <= wcet. Throws InvalidArgument.
  void validate() const;
};

/// True iff every context value named in the frame's gamma lies inside that
/// factor's domain. Factors absent from gamma are abstracted away. A context
/// lacking a gamma-named factor raises MissingFactorError.
bool frame_admits(const ValidityFrame& frame, const Context& context);

/// True iff every requested property exists in the frame's pi with the
/// requested range contained in the declared range.
bool frame_covers(const ValidityFrame& frame, const PropertySet& requested);

/// Evaluates every validation condition against the trace/context pair.
/// Any mismatch flips the frame's validity status to Invalidated.
std::vector<std::pair<std::string, bool>> run_validations(ValidityFrame& frame,
                                                          const Trajectory& trace,
                                                          const Context& context);

}  // namespace vfsim
