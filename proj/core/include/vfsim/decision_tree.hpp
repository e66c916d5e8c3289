#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vfsim/vfg.hpp"

namespace vfsim {

/// Elementary-region helpers for interval-valued factors. Sorted distinct
/// endpoints p1..pk induce 2k+1 regions: (-inf,p1), [p1], (p1,p2), ...,
/// [pk], (pk,+inf). Region indices are even for open intervals and odd for
/// endpoint singletons.
int region_index(const std::vector<double>& endpoints, double value);
std::string region_label(const std::vector<double>& endpoints, int region);
double region_representative(const std::vector<double>& endpoints, int region);

struct TreeNode {
  bool leaf = false;

  // internal node
  std::string factor;
  bool boolean_factor = true;
  std::vector<double> endpoints;  // interval factors only
  std::vector<int> children;      // boolean: [false,true]; interval: one per region

  // leaf
  std::vector<std::string> candidates;  // ascending wcet, then frame id
  bool infeasible = false;
};

/// Run-time dispatch structure compiled from the graph. Each root-to-leaf
/// path tests a factor at most once; subtrees whose admissible set no
/// longer depends on the remaining factors collapse into a leaf, so
/// frequently determined contexts take short paths.
struct DecisionTree {
  std::vector<TreeNode> nodes;
  int root = -1;
  int depth = 0;  // longest root-to-leaf internal-node count
  std::uint64_t source_revision = 0;

  const TreeNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  int leaf_count() const;
  int infeasible_leaf_count() const;
};

struct LookupResult {
  std::vector<std::string> candidates;
  int nodes_visited = 0;
};

/// Compiles the graph into a decision tree equivalent to
/// enumerate_admissible for every context expressible over the factor
/// domains. `ordering` fixes the test order and must cover every factor
/// named in any frame's gamma (InvalidOrderingError otherwise); factors no
/// frame constrains are skipped.
DecisionTree build_tree(const VFGraph& graph, const std::vector<std::string>& ordering,
                        const PropertySet& requested);

/// Follows one root-to-leaf path. Candidates drop frames meanwhile
/// Invalidated in the graph. Raises MissingFactorError when the context
/// lacks a tested factor, NoFeasibleModelError on an exhausted leaf.
LookupResult lookup(const DecisionTree& tree, const VFGraph& graph, const Context& context);

/// Drops every leaf candidate whose wcet exceeds the deadline; a leaf left
/// empty is marked infeasible. The dual-model comparison budget is enforced
/// at selection time, not here (comparisons that would bust the budget are
/// skipped by the runtime).
DecisionTree prune_for_deadline(const DecisionTree& tree, const VFGraph& graph, double deadline);

struct GraphSearchResult {
  std::vector<std::string> candidates;
  int vertices_visited = 0;
};

/// Baseline the tree is measured against: breadth-first sweep from the head
/// over the whole design-time graph, testing admissibility per vertex.
/// Always visits |V| vertices and returns the same candidate list as the
/// tree lookup.
GraphSearchResult graph_search_baseline(const VFGraph& graph, const Context& context,
                                        const PropertySet& requested);

/// Human-readable dump: one node per line, two-space indent per level,
/// leaves list candidate ids in order.
std::string serialize_tree(const DecisionTree& tree);

}  // namespace vfsim
