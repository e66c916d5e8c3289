#pragma once

#include <map>
#include <string>
#include <variant>

namespace vfsim {

/// A factor observation is either a flag or a real measurement.
using ContextValue = std::variant<bool, double>;

std::string to_string(const ContextValue& v);

/// Observed influencing-factor assignment at one monitoring instant.
struct Context {
  std::map<std::string, ContextValue> assignments;

  bool has(const std::string& name) const { return assignments.count(name) != 0; }
  const ContextValue* find(const std::string& name) const {
    auto it = assignments.find(name);
    return it == assignments.end() ? nullptr : &it->second;
  }
  void set(const std::string& name, ContextValue v) { assignments[name] = v; }

  friend bool operator==(const Context&, const Context&) = default;
};

}  // namespace vfsim
