#include "vfsim/frames.hpp"

#include <algorithm>
#include <sstream>

#include "vfsim/errors.hpp"

namespace vfsim {

bool domain_contains(const Domain& d, const ContextValue& v) {
  if (const auto* iv = std::get_if<Interval>(&d)) {
    const double* x = std::get_if<double>(&v);
    if (!x) throw InvalidArgument("interval domain tested against a flag value");
    return iv->contains(*x);
  }
  const auto& set = std::get<BoolSet>(d);
  const bool* b = std::get_if<bool>(&v);
  if (!b) throw InvalidArgument("enumerated domain tested against a real value");
  return set.count(*b) != 0;
}

bool domain_subsumes(const Domain& outer, const Domain& inner) {
  if (outer.index() != inner.index()) return false;
  if (const auto* oi = std::get_if<Interval>(&outer)) {
    const auto& ii = std::get<Interval>(inner);
    return oi->lo <= ii.lo && ii.hi <= oi->hi;
  }
  const auto& os = std::get<BoolSet>(outer);
  const auto& is = std::get<BoolSet>(inner);
  return std::includes(os.begin(), os.end(), is.begin(), is.end());
}

std::string domain_to_string(const Domain& d) {
  std::ostringstream os;
  if (const auto* iv = std::get_if<Interval>(&d)) {
    os << "[" << iv->lo << ", " << iv->hi << "]";
  } else {
    const auto& set = std::get<BoolSet>(d);
    os << "{";
    bool first = true;
    for (bool b : set) {
      if (!first) os << ", ";
      os << (b ? "true" : "false");
      first = false;
    }
    os << "}";
  }
  return os.str();
}

std::string to_string(const ContextValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  std::ostringstream os;
  os << std::get<double>(v);
  return os.str();
}

NamedDomainSet::NamedDomainSet(std::initializer_list<std::pair<std::string, Domain>> init) {
  for (auto& [name, domain] : init) add(name, domain);
}

void NamedDomainSet::add(std::string name, Domain domain) {
  if (name.empty()) throw InvalidArgument("empty property/factor name");
  if (find(name)) throw InvalidArgument("duplicate entry '" + name + "'");
  if (const auto* iv = std::get_if<Interval>(&domain)) {
    if (iv->lo > iv->hi) throw InvalidArgument("empty interval for '" + name + "'");
  } else if (std::get<BoolSet>(domain).empty()) {
    throw InvalidArgument("empty enumerated domain for '" + name + "'");
  }
  entries_.emplace_back(std::move(name), std::move(domain));
}

const Domain* NamedDomainSet::find(const std::string& name) const {
  for (const auto& [n, d] : entries_)
    if (n == name) return &d;
  return nullptr;
}

std::set<std::string> NamedDomainSet::names() const {
  std::set<std::string> out;
  for (const auto& [n, d] : entries_) out.insert(n);
  return out;
}

const char* to_string(ValidityStatus s) {
  switch (s) {
    case ValidityStatus::AssumedValid: return "assumed_valid";
    case ValidityStatus::Validated: return "validated";
    case ValidityStatus::Invalidated: return "invalidated";
  }
  return "assumed_valid";
}

ValidityStatus validity_status_from_string(const std::string& s) {
  if (s == "assumed_valid") return ValidityStatus::AssumedValid;
  if (s == "validated") return ValidityStatus::Validated;
  if (s == "invalidated") return ValidityStatus::Invalidated;
  throw InvalidArgument("unknown validity status '" + s + "'");
}

ValidationCondition builtin_validation(const std::string& name, bool expected) {
  ValidationCondition c;
  c.name = name;
  c.expected = expected;
  if (name == "x_nondecreasing") {
    c.predicate = [](const Trajectory& tr, const Context&) {
      for (std::size_t i = 1; i < tr.samples.size(); ++i)
        if (tr.samples[i].x < tr.samples[i - 1].x) return false;
      return true;
    };
  } else if (name == "starts_at_time_zero") {
    c.predicate = [](const Trajectory& tr, const Context&) {
      return !tr.samples.empty() && tr.samples.front().t == 0.0;
    };
  } else if (name == "lane_nonnegative") {
    c.predicate = [](const Trajectory& tr, const Context&) {
      for (const auto& s : tr.samples)
        if (s.lane < 0) return false;
      return true;
    };
  } else {
    throw InvalidArgument("unknown validation condition '" + name + "'");
  }
  return c;
}

void ValidityFrame::validate() const {
  if (frame_id.empty()) throw InvalidArgument("frame with empty id");
  if (model_id.empty()) throw InvalidArgument("frame '" + frame_id + "' has no model");
  if (exec.mean_cost <= 0.0 || exec.mean_cost > exec.wcet)
    throw InvalidArgument("frame '" + frame_id + "': need 0 < mean_cost <= wcet");
  for (const auto& [name, component] : property_bindings)
    if (!pi.has(name))
      throw InvalidArgument("frame '" + frame_id + "': binding for unknown property '" + name + "'");
  for (const auto& [name, component] : factor_bindings)
    if (!gamma.has(name))
      throw InvalidArgument("frame '" + frame_id + "': binding for unknown factor '" + name + "'");
  for (const auto& v : validations)
    if (!v.predicate) throw InvalidArgument("frame '" + frame_id + "': validation '" + v.name +
                                            "' has no predicate");
}

bool frame_admits(const ValidityFrame& frame, const Context& context) {
  for (const auto& [name, domain] : frame.gamma.entries()) {
    const ContextValue* value = context.find(name);
    if (!value) throw MissingFactorError(name, "context for frame '" + frame.frame_id + "'");
    if (!domain_contains(domain, *value)) return false;
  }
  return true;
}

bool frame_covers(const ValidityFrame& frame, const PropertySet& requested) {
  for (const auto& [name, range] : requested.entries()) {
    const Domain* declared = frame.pi.find(name);
    if (!declared) return false;
    if (!domain_subsumes(*declared, range)) return false;
  }
  return true;
}

std::vector<std::pair<std::string, bool>> run_validations(ValidityFrame& frame,
                                                          const Trajectory& trace,
                                                          const Context& context) {
  std::vector<std::pair<std::string, bool>> results;
  results.reserve(frame.validations.size());
  bool any_failed = false;
  for (const auto& cond : frame.validations) {
    const bool passed = cond.predicate(trace, context) == cond.expected;
    if (!passed) any_failed = true;
    results.emplace_back(cond.name, passed);
  }
  if (any_failed) {
    frame.validity.status = ValidityStatus::Invalidated;
    if (!frame.validity.notes.empty()) frame.validity.notes += "; ";
    frame.validity.notes += "validation failure";
  }
  return results;
}

}  // namespace vfsim
