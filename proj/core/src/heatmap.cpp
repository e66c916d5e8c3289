#include "vfsim/heatmap.hpp"

#include <algorithm>
#include <map>

#include "vfsim/decision_tree.hpp"
#include "vfsim/errors.hpp"
#include "vfsim/vfg.hpp"

namespace vfsim {

void HeatMap::add(const std::string& cell, long long n) {
  if (n < 0) throw InvalidArgument("negative heat-map count");
  counts_[cell] += n;
}

long long HeatMap::total() const {
  long long sum = 0;
  for (const auto& [cell, n] : counts_) sum += n;
  return sum;
}

std::string make_cell(std::vector<std::pair<std::string, std::string>> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ",";
    out += name + "=" + value;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_cell(const std::string& cell) {
  std::vector<std::pair<std::string, std::string>> parts;
  std::size_t pos = 0;
  while (pos < cell.size()) {
    std::size_t comma = cell.find(',', pos);
    if (comma == std::string::npos) comma = cell.size();
    const std::string item = cell.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw InvalidArgument("malformed heat-map cell '" + cell + "'");
    parts.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    pos = comma + 1;
  }
  return parts;
}

std::string context_cell(const Context& context, const VFGraph& graph) {
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [name, value] : context.assignments) {
    if (const bool* b = std::get_if<bool>(&value)) {
      parts.emplace_back(name, *b ? "true" : "false");
    } else {
      const auto endpoints = graph.factor_endpoints(name);
      parts.emplace_back(name, region_label(endpoints, region_index(endpoints,
                                                                    std::get<double>(value))));
    }
  }
  return make_cell(std::move(parts));
}

std::vector<std::string> order_factors_by_heatmap(const HeatMap& heatmap,
                                                  const std::vector<std::string>& factors) {
  if (heatmap.empty()) return factors;

  // Per factor: mass per observed value label.
  std::map<std::string, std::map<std::string, long long>> value_mass;
  for (const auto& [cell, count] : heatmap.cells())
    for (const auto& [name, value] : parse_cell(cell)) value_mass[name][value] += count;

  const long long total = heatmap.total();
  std::map<std::string, long long> weight;
  for (const auto& f : factors) {
    auto it = value_mass.find(f);
    if (it == value_mass.end())
      throw InvalidArgument("factor '" + f + "' appears in no heat-map cell");
    long long top = 0;
    for (const auto& [value, mass] : it->second) top = std::max(top, mass);
    weight[f] = total - top;  // mass outside the majority value
  }

  bool any_signal = false;
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (weight[factors[i]] != weight[factors[0]]) any_signal = true;
  if (!any_signal) return factors;  // nothing to reorder on

  std::vector<std::string> ordered = factors;
  std::sort(ordered.begin(), ordered.end(), [&](const std::string& a, const std::string& b) {
    if (weight[a] != weight[b]) return weight[a] > weight[b];
    return a < b;
  });
  return ordered;
}

}  // namespace vfsim
