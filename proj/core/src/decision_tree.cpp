#include "vfsim/decision_tree.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "vfsim/errors.hpp"

namespace vfsim {

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

int region_index(const std::vector<double>& endpoints, double value) {
  // Regions over sorted endpoints p0..p{k-1}:
  //   0: (-inf,p0)  1: [p0]  2: (p0,p1)  3: [p1]  ...  2k: (p{k-1},+inf)
  const auto k = endpoints.size();
  if (k == 0) return 0;
  auto it = std::lower_bound(endpoints.begin(), endpoints.end(), value);
  if (it == endpoints.end()) return static_cast<int>(2 * k);
  const auto i = static_cast<std::size_t>(it - endpoints.begin());
  if (*it == value) return static_cast<int>(2 * i + 1);
  return static_cast<int>(2 * i);
}

std::string region_label(const std::vector<double>& endpoints, int region) {
  const auto k = endpoints.size();
  if (k == 0) return "(-inf, +inf)";
  const auto r = static_cast<std::size_t>(region);
  if (r % 2 == 1) return "[" + format_number(endpoints[(r - 1) / 2]) + "]";
  if (r == 0) return "(-inf, " + format_number(endpoints[0]) + ")";
  if (r == 2 * k) return "(" + format_number(endpoints[k - 1]) + ", +inf)";
  return "(" + format_number(endpoints[r / 2 - 1]) + ", " + format_number(endpoints[r / 2]) + ")";
}

double region_representative(const std::vector<double>& endpoints, int region) {
  const auto k = endpoints.size();
  if (k == 0) return 0.0;
  const auto r = static_cast<std::size_t>(region);
  if (r % 2 == 1) return endpoints[(r - 1) / 2];
  if (r == 0) return endpoints[0] - 1.0;
  if (r == 2 * k) return endpoints[k - 1] + 1.0;
  return (endpoints[r / 2 - 1] + endpoints[r / 2]) / 2.0;
}

int DecisionTree::leaf_count() const {
  int n = 0;
  for (const auto& node : nodes)
    if (node.leaf) ++n;
  return n;
}

int DecisionTree::infeasible_leaf_count() const {
  int n = 0;
  for (const auto& node : nodes)
    if (node.leaf && node.infeasible) ++n;
  return n;
}

namespace {

struct FactorAxis {
  std::string name;
  bool boolean = true;
  std::vector<double> endpoints;  // interval factors
  int branch_count = 0;
};

ContextValue branch_value(const FactorAxis& axis, int branch) {
  if (axis.boolean) return branch == 1;
  return region_representative(axis.endpoints, branch);
}

std::vector<std::string> sorted_by_cost(std::vector<std::string> ids, const VFGraph& graph) {
  std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    const double wa = graph.frame(a).exec.wcet;
    const double wb = graph.frame(b).exec.wcet;
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return ids;
}

class TreeBuilder {
 public:
  TreeBuilder(const VFGraph& graph, std::vector<FactorAxis> axes, const PropertySet& requested)
      : graph_(graph), axes_(std::move(axes)), requested_(requested) {}

  DecisionTree build() {
    DecisionTree tree;
    std::vector<int> prefix;
    tree.root = build_node(tree, prefix, 0);
    tree.depth = depth_of(tree, tree.root);
    tree.source_revision = graph_.revision();
    return tree;
  }

 private:
  // Admissible set for one fully assigned cell, evaluated on representative
  // values; regions are elementary, so any interior point stands for the
  // whole cell.
  std::vector<std::string> cell_candidates(const std::vector<int>& cell) {
    auto it = cache_.find(cell);
    if (it != cache_.end()) return it->second;
    Context ctx;
    for (std::size_t i = 0; i < axes_.size(); ++i)
      ctx.set(axes_[i].name, branch_value(axes_[i], cell[i]));
    std::vector<std::string> ids;
    for (const auto& id : graph_.frame_ids()) {
      const ValidityFrame& f = graph_.frame(id);
      if (!frame_covers(f, requested_)) continue;
      if (!frame_admits(f, ctx)) continue;
      ids.push_back(id);
    }
    ids = sorted_by_cost(std::move(ids), graph_);
    cache_.emplace(cell, ids);
    return ids;
  }

  // True iff every completion of `prefix` yields `expected`.
  bool constant_below(std::vector<int>& cell, std::size_t axis,
                      const std::vector<std::string>& expected) {
    if (axis == axes_.size()) return cell_candidates(cell) == expected;
    for (int b = 0; b < axes_[axis].branch_count; ++b) {
      cell.push_back(b);
      const bool ok = constant_below(cell, axis + 1, expected);
      cell.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  int build_node(DecisionTree& tree, std::vector<int>& prefix, std::size_t axis) {
    // Collapse to a leaf as soon as the remaining factors cannot change the
    // outcome; frequent contexts then resolve in fewer tests.
    std::vector<int> probe = prefix;
    for (std::size_t i = axis; i < axes_.size(); ++i) probe.push_back(0);
    const std::vector<std::string> first = cell_candidates(probe);
    {
      std::vector<int> walk = prefix;
      if (constant_below(walk, axis, first)) {
        TreeNode leaf;
        leaf.leaf = true;
        leaf.candidates = first;
        leaf.infeasible = first.empty();
        tree.nodes.push_back(std::move(leaf));
        return static_cast<int>(tree.nodes.size() - 1);
      }
    }

    TreeNode node;
    node.factor = axes_[axis].name;
    node.boolean_factor = axes_[axis].boolean;
    node.endpoints = axes_[axis].endpoints;
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(node);
    std::vector<int> children;
    children.reserve(static_cast<std::size_t>(axes_[axis].branch_count));
    for (int b = 0; b < axes_[axis].branch_count; ++b) {
      prefix.push_back(b);
      children.push_back(build_node(tree, prefix, axis + 1));
      prefix.pop_back();
    }
    tree.nodes[static_cast<std::size_t>(index)].children = std::move(children);
    return index;
  }

  int depth_of(const DecisionTree& tree, int index) const {
    const TreeNode& node = tree.node(index);
    if (node.leaf) return 0;
    int deepest = 0;
    for (int c : node.children) deepest = std::max(deepest, depth_of(tree, c));
    return deepest + 1;
  }

  const VFGraph& graph_;
  std::vector<FactorAxis> axes_;
  const PropertySet& requested_;
  std::map<std::vector<int>, std::vector<std::string>> cache_;
};

}  // namespace

DecisionTree build_tree(const VFGraph& graph, const std::vector<std::string>& ordering,
                        const PropertySet& requested) {
  // Every factor some frame constrains must appear in the ordering.
  std::set<std::string> ordered(ordering.begin(), ordering.end());
  for (const auto& name : graph.factor_names())
    if (!ordered.count(name))
      throw InvalidOrderingError("ordering misses factor '" + name + "'");

  std::vector<FactorAxis> axes;
  for (const auto& name : ordering) {
    const Domain* domain = graph.factor_domain(name);
    if (!domain) continue;  // no frame constrains it; testing it is pointless
    FactorAxis axis;
    axis.name = name;
    if (std::holds_alternative<BoolSet>(*domain)) {
      axis.boolean = true;
      axis.branch_count = 2;
    } else {
      axis.boolean = false;
      axis.endpoints = graph.factor_endpoints(name);
      axis.branch_count = static_cast<int>(2 * axis.endpoints.size() + 1);
    }
    axes.push_back(std::move(axis));
  }

  return TreeBuilder(graph, std::move(axes), requested).build();
}

LookupResult lookup(const DecisionTree& tree, const VFGraph& graph, const Context& context) {
  LookupResult result;
  if (tree.root < 0) throw NoFeasibleModelError("empty decision tree");
  const TreeNode* node = &tree.node(tree.root);
  while (!node->leaf) {
    const ContextValue* value = context.find(node->factor);
    if (!value) throw MissingFactorError(node->factor, "decision-tree lookup");
    ++result.nodes_visited;
    int branch;
    if (node->boolean_factor) {
      const bool* b = std::get_if<bool>(value);
      if (!b) throw InvalidArgument("factor '" + node->factor + "' expects a flag value");
      branch = *b ? 1 : 0;
    } else {
      const double* x = std::get_if<double>(value);
      if (!x) throw InvalidArgument("factor '" + node->factor + "' expects a real value");
      branch = region_index(node->endpoints, *x);
    }
    node = &tree.node(node->children[static_cast<std::size_t>(branch)]);
  }
  if (node->infeasible)
    throw NoFeasibleModelError("no feasible model for context (infeasible leaf)");
  for (const auto& id : node->candidates)
    if (graph.frame(id).validity.status != ValidityStatus::Invalidated)
      result.candidates.push_back(id);
  if (result.candidates.empty())
    throw NoFeasibleModelError("no feasible model for context (all candidates invalidated)");
  return result;
}

DecisionTree prune_for_deadline(const DecisionTree& tree, const VFGraph& graph,
                                double deadline) {
  DecisionTree pruned = tree;
  for (auto& node : pruned.nodes) {
    if (!node.leaf) continue;
    std::vector<std::string> kept;
    for (const auto& id : node.candidates)
      if (graph.frame(id).exec.wcet <= deadline) kept.push_back(id);
    node.candidates = std::move(kept);
    node.infeasible = node.candidates.empty();
  }
  return pruned;
}

GraphSearchResult graph_search_baseline(const VFGraph& graph, const Context& context,
                                        const PropertySet& requested) {
  GraphSearchResult result;
  std::set<std::string> seen;
  std::deque<std::string> queue;
  std::vector<std::string> admitted;

  auto visit = [&](const std::string& id) {
    ++result.vertices_visited;
    const ValidityFrame& f = graph.frame(id);
    if (f.validity.status == ValidityStatus::Invalidated) return;
    if (!frame_covers(f, requested)) return;
    if (!frame_admits(f, context)) return;
    admitted.push_back(id);
  };

  if (!graph.head().empty() && graph.contains(graph.head())) {
    queue.push_back(graph.head());
    seen.insert(graph.head());
  }
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    visit(cur);
    for (const auto& e : graph.edges()) {
      if (e.from == cur && seen.insert(e.to).second) queue.push_back(e.to);
      if (e.to == cur && seen.insert(e.from).second) queue.push_back(e.from);
    }
  }
  // Vertices the edge relation does not reach still have to be evaluated.
  for (const auto& id : graph.frame_ids())
    if (seen.insert(id).second) visit(id);

  result.candidates = sorted_by_cost(std::move(admitted), graph);
  return result;
}

namespace {

void dump_node(const DecisionTree& tree, int index, int indent, std::ostringstream& os) {
  const TreeNode& node = tree.node(index);
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (node.leaf) {
    os << pad << "leaf";
    if (node.infeasible) {
      os << " (infeasible)";
    } else {
      for (const auto& id : node.candidates) os << " " << id;
    }
    os << "\n";
    return;
  }
  os << pad << "test " << node.factor << "\n";
  for (std::size_t b = 0; b < node.children.size(); ++b) {
    const std::string label =
        node.boolean_factor ? (b == 1 ? "true" : "false")
                            : region_label(node.endpoints, static_cast<int>(b));
    os << pad << "  = " << label << ":\n";
    dump_node(tree, node.children[b], indent + 2, os);
  }
}

}  // namespace

std::string serialize_tree(const DecisionTree& tree) {
  std::ostringstream os;
  if (tree.root >= 0) dump_node(tree, tree.root, 0, os);
  return os.str();
}

}  // namespace vfsim
