#pragma once

#include <map>
#include <string>
#include <vector>

#include "vfsim/context.hpp"

namespace vfsim {

class VFGraph;

/// Frequency distribution over discretized context cells. Cell keys are
/// canonical "name=value" pairs joined by commas, names sorted.
class HeatMap {
 public:
  void add(const std::string& cell, long long n = 1);
  long long total() const;
  bool empty() const { return counts_.empty(); }
  const std::map<std::string, long long>& cells() const { return counts_; }

  friend bool operator==(const HeatMap&, const HeatMap&) = default;

 private:
  std::map<std::string, long long> counts_;
};

/// Canonical cell key for a context. Real-valued factors are discretized
/// into the elementary regions induced by the graph's declared interval
/// endpoints; flags keep their value.
std::string context_cell(const Context& context, const VFGraph& graph);

/// Builds a cell key from explicit name -> value-label pairs.
std::string make_cell(std::vector<std::pair<std::string, std::string>> parts);

/// Splits a canonical cell key back into name -> value-label pairs.
std::vector<std::pair<std::string, std::string>> parse_cell(const std::string& cell);

/// Orders factors by descending discriminative weight, where a factor's
/// weight is the count mass sitting outside its majority value (a factor
/// whose observed value varies a lot carries more routing signal). A heat
/// map with no signal at all — empty, or every factor weighing the same —
/// returns the input order unchanged; remaining ties break by name.
/// Every factor must appear in at least one cell of a non-empty map.
std::vector<std::string> order_factors_by_heatmap(const HeatMap& heatmap,
                                                  const std::vector<std::string>& factors);

}  // namespace vfsim
