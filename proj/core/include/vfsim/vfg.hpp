#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vfsim/frames.hpp"

namespace vfsim {

/// Relation kinds between frames:
///  - Abstract: target drops properties (pi strictly shrinks).
///  - Approximate: target keeps the property name set, loses detail;
///    its gamma entries are contained in the source's.
///  - ViewDecomposition: target exposes a portion of pi and/or gamma.
enum class EdgeKind { Abstract, Approximate, ViewDecomposition };

const char* to_string(EdgeKind k);
EdgeKind edge_kind_from_string(const std::string& s);

struct VFEdge {
  std::string from;
  std::string to;
  EdgeKind kind = EdgeKind::Abstract;

  friend bool operator==(const VFEdge&, const VFEdge&) = default;
};

/// Design-time mega-model: frames as vertices, typed relations as edges,
/// with the most detailed frame as the head. Construction preserves the
/// per-kind subset invariants and acyclicity; anything reachable through
/// add_frame/add_edge is consistent.
class VFGraph {
 public:
  /// Throws InvalidArgument on duplicate id, structural defects, or a
  /// factor redeclared with a different domain kind than elsewhere.
  void add_frame(ValidityFrame frame);

  /// Throws ConsistencyError (naming the offending property/factor) when
  /// the edge violates its kind's rule, CycleError when it closes a cycle.
  void add_edge(const std::string& from, const std::string& to, EdgeKind kind);

  /// Declares the most detailed frame. It must exist and have no incoming
  /// edges; add_edge keeps rejecting edges into it afterwards.
  void set_head(const std::string& id);

  bool contains(const std::string& id) const { return frames_.count(id) != 0; }
  const ValidityFrame& frame(const std::string& id) const;
  ValidityFrame& frame_mut(const std::string& id);
  const std::string& head() const { return head_; }
  std::size_t size() const { return frames_.size(); }

  /// Frame ids in insertion order.
  const std::vector<std::string>& frame_ids() const { return order_; }
  const std::vector<VFEdge>& edges() const { return edges_; }

  /// Factor names in first-declaration order across all frames' gammas.
  const std::vector<std::string>& factor_names() const { return factor_order_; }

  /// Representative domain of a factor (first declaration). Null if unknown.
  const Domain* factor_domain(const std::string& name) const;

  /// All interval endpoints declared for a factor across frames, sorted and
  /// deduplicated. Empty for boolean factors.
  std::vector<double> factor_endpoints(const std::string& name) const;

  /// Source frame of an Approximate edge ending at `target`, if any.
  std::optional<std::string> approximate_source_of(const std::string& target) const;

  /// Bumped by add_frame/add_edge/set_head; lets a compiled tree record
  /// which graph revision it was built from.
  std::uint64_t revision() const { return revision_; }

 private:
  void check_edge(const ValidityFrame& from, const ValidityFrame& to, EdgeKind kind) const;
  bool path_exists(const std::string& from, const std::string& to) const;

  std::vector<std::string> order_;
  std::map<std::string, ValidityFrame> frames_;
  std::vector<VFEdge> edges_;
  std::vector<std::string> factor_order_;
  std::map<std::string, Domain> factor_kinds_;
  std::string head_;
  std::uint64_t revision_ = 0;
};

/// Exhaustive context query, the oracle the compiled tree must match:
/// every frame that admits the context, covers the requested properties and
/// is not Invalidated, ordered by ascending wcet then frame id.
std::vector<std::string> enumerate_admissible(const VFGraph& graph, const Context& context,
                                              const PropertySet& requested);

}  // namespace vfsim
