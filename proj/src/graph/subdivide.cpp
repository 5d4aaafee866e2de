#include <algorithm>
#include <set>

#include "congest/graph.hpp"

namespace congest {

LabeledGraph subdivide_edges(const LabeledGraph& graph, std::span<const Edge> edges,
                             std::uint32_t length) {
  if (length < 1) throw InputError("subdivision length must be >= 1");
  std::set<Edge> targets;
  for (const Edge& e : edges) {
    if (!graph.has_edge(e.u, e.v)) {
      throw InputError("cannot subdivide missing edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    if (!targets.insert(e).second) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") listed twice for subdivision");
    }
  }

  LabeledGraph out(graph.node_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (auto side = graph.side_of(u)) out.set_side(u, *side);
    if (auto role = graph.role_of(u)) out.assign_role(u, *role);
  }
  for (const Edge& e : graph.edges()) {
    if (length == 1 || !targets.contains(e)) out.add_edge(e.u, e.v);
  }
  if (length == 1) return out;

  for (const Edge& e : edges) {
    const Edge key(e.u, e.v);
    const auto su = graph.side_of(key.u);
    const auto sv = graph.side_of(key.v);
    NodeId prev = key.u;
    for (std::uint32_t pos = 1; pos < length; ++pos) {
      const NodeId w = out.add_node();
      out.assign_role(w, Role::intermediate(key, pos));
      if (su && su == sv) out.set_side(w, *su);
      out.add_edge(prev, w);
      prev = w;
    }
    out.add_edge(prev, key.v);
  }
  return out;
}

}  // namespace congest
