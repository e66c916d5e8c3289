#include "vfsim/vfg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vfsim/errors.hpp"

namespace vfsim {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Abstract: return "abstract";
    case EdgeKind::Approximate: return "approximate";
    case EdgeKind::ViewDecomposition: return "view";
  }
  return "abstract";
}

EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "abstract") return EdgeKind::Abstract;
  if (s == "approximate") return EdgeKind::Approximate;
  if (s == "view") return EdgeKind::ViewDecomposition;
  throw InvalidArgument("unknown edge kind '" + s + "'");
}

void VFGraph::add_frame(ValidityFrame frame) {
  frame.validate();
  if (contains(frame.frame_id))
    throw InvalidArgument("duplicate frame id '" + frame.frame_id + "'");
  // One domain kind per factor name across the whole graph; admissibility
  // over mixed kinds would be undecidable at compile time.
  for (const auto& [name, domain] : frame.gamma.entries()) {
    auto it = factor_kinds_.find(name);
    if (it == factor_kinds_.end()) {
      factor_kinds_.emplace(name, domain);
      factor_order_.push_back(name);
    } else if (it->second.index() != domain.index()) {
      throw InvalidArgument("factor '" + name + "' redeclared with a different domain kind");
    }
  }
  order_.push_back(frame.frame_id);
  frames_.emplace(frame.frame_id, std::move(frame));
  ++revision_;
}

const ValidityFrame& VFGraph::frame(const std::string& id) const {
  auto it = frames_.find(id);
  if (it == frames_.end()) throw InvalidArgument("unknown frame '" + id + "'");
  return it->second;
}

ValidityFrame& VFGraph::frame_mut(const std::string& id) {
  auto it = frames_.find(id);
  if (it == frames_.end()) throw InvalidArgument("unknown frame '" + id + "'");
  return it->second;
}

void VFGraph::set_head(const std::string& id) {
  if (!contains(id)) throw InvalidArgument("head frame '" + id + "' not in graph");
  for (const auto& e : edges_)
    if (e.to == id) throw ConsistencyError("head frame '" + id + "' has incoming edges");
  head_ = id;
  ++revision_;
}

bool VFGraph::path_exists(const std::string& from, const std::string& to) const {
  std::deque<std::string> queue = {from};
  std::set<std::string> seen = {from};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    for (const auto& e : edges_)
      if (e.from == cur && seen.insert(e.to).second) queue.push_back(e.to);
  }
  return false;
}

void VFGraph::check_edge(const ValidityFrame& from, const ValidityFrame& to,
                         EdgeKind kind) const {
  const auto from_pi = from.pi.names();
  const auto to_pi = to.pi.names();

  switch (kind) {
    case EdgeKind::Approximate: {
      // Detail is removed but the property name set is retained.
      if (from_pi != to_pi) {
        for (const auto& n : from_pi)
          if (!to_pi.count(n))
            throw ConsistencyError("approximate edge " + from.frame_id + " -> " + to.frame_id +
                                       " drops property '" + n + "'",
                                   n);
        for (const auto& n : to_pi)
          if (!from_pi.count(n))
            throw ConsistencyError("approximate edge " + from.frame_id + " -> " + to.frame_id +
                                       " adds property '" + n + "'",
                                   n);
      }
      for (const auto& [name, domain] : to.gamma.entries()) {
        const Domain* outer = from.gamma.find(name);
        if (!outer || !domain_subsumes(*outer, domain))
          throw ConsistencyError("approximate edge " + from.frame_id + " -> " + to.frame_id +
                                     " widens factor '" + name + "'",
                                 name);
      }
      break;
    }
    case EdgeKind::Abstract: {
      // Reasoning on a set of properties is eliminated: pi strictly shrinks.
      for (const auto& [name, range] : to.pi.entries()) {
        const Domain* outer = from.pi.find(name);
        if (!outer || !domain_subsumes(*outer, range))
          throw ConsistencyError("abstract edge " + from.frame_id + " -> " + to.frame_id +
                                     " does not contain property '" + name + "'",
                                 name);
      }
      if (to_pi.size() >= from_pi.size())
        throw ConsistencyError("abstract edge " + from.frame_id + " -> " + to.frame_id +
                               " must drop at least one property");
      break;
    }
    case EdgeKind::ViewDecomposition: {
      // The target exposes a portion of pi and/or gamma.
      for (const auto& [name, range] : to.pi.entries()) {
        const Domain* outer = from.pi.find(name);
        if (!outer || !domain_subsumes(*outer, range))
          throw ConsistencyError("view edge " + from.frame_id + " -> " + to.frame_id +
                                     " does not contain property '" + name + "'",
                                 name);
      }
      for (const auto& [name, domain] : to.gamma.entries()) {
        const Domain* outer = from.gamma.find(name);
        if (!outer || !domain_subsumes(*outer, domain))
          throw ConsistencyError("view edge " + from.frame_id + " -> " + to.frame_id +
                                     " does not contain factor '" + name + "'",
                                 name);
      }
      const bool pi_equal = from.pi == to.pi;
      const bool gamma_equal = from.gamma == to.gamma;
      if (pi_equal && gamma_equal)
        throw ConsistencyError("view edge " + from.frame_id + " -> " + to.frame_id +
                               " must be a strict portion of pi and/or gamma");
      break;
    }
  }
}

void VFGraph::add_edge(const std::string& from, const std::string& to, EdgeKind kind) {
  if (!contains(from)) throw InvalidArgument("edge endpoint '" + from + "' not in graph");
  if (!contains(to)) throw InvalidArgument("edge endpoint '" + to + "' not in graph");
  if (from == to) throw CycleError("self edge on '" + from + "'");
  if (!head_.empty() && to == head_)
    throw ConsistencyError("edge into head frame '" + head_ + "'");
  check_edge(frame(from), frame(to), kind);
  if (path_exists(to, from))
    throw CycleError("edge " + from + " -> " + to + " closes a cycle");
  edges_.push_back({from, to, kind});
  ++revision_;
}

const Domain* VFGraph::factor_domain(const std::string& name) const {
  auto it = factor_kinds_.find(name);
  return it == factor_kinds_.end() ? nullptr : &it->second;
}

std::vector<double> VFGraph::factor_endpoints(const std::string& name) const {
  std::set<double> points;
  for (const auto& id : order_) {
    const Domain* d = frames_.at(id).gamma.find(name);
    if (!d) continue;
    if (const auto* iv = std::get_if<Interval>(d)) {
      points.insert(iv->lo);
      points.insert(iv->hi);
    }
  }
  return {points.begin(), points.end()};
}

std::optional<std::string> VFGraph::approximate_source_of(const std::string& target) const {
  for (const auto& e : edges_)
    if (e.kind == EdgeKind::Approximate && e.to == target) return e.from;
  return std::nullopt;
}

std::vector<std::string> enumerate_admissible(const VFGraph& graph, const Context& context,
                                              const PropertySet& requested) {
  std::vector<std::string> out;
  for (const auto& id : graph.frame_ids()) {
    const ValidityFrame& f = graph.frame(id);
    if (f.validity.status == ValidityStatus::Invalidated) continue;
    if (!frame_covers(f, requested)) continue;
    if (!frame_admits(f, context)) continue;
    out.push_back(id);
  }
  std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
    const double wa = graph.frame(a).exec.wcet;
    const double wb = graph.frame(b).exec.wcet;
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

}  // namespace vfsim
