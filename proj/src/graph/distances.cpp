#include <algorithm>
#include <string>

#include "congest/graph.hpp"

namespace congest {

std::uint32_t Hops::value() const {
  if (!reachable()) throw DisconnectedGraph("distance is unreachable");
  return raw_;
}

namespace detail {

// Frontier-array BFS writing straight into a caller-owned row. Shared by the
// serial and OpenMP oracles so both run the same per-source kernel.
void bfs_into(const LabeledGraph& graph, NodeId source, std::span<Hops> out,
              std::vector<NodeId>& queue) {
  std::fill(out.begin(), out.end(), Hops::unreachable());
  queue.clear();
  queue.push_back(source);
  out[source] = Hops(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::uint32_t next = out[u].value() + 1;
    for (NodeId v : graph.neighbors(u)) {
      if (!out[v].reachable()) {
        out[v] = Hops(next);
        queue.push_back(v);
      }
    }
  }
}

}  // namespace detail

std::vector<Hops> bfs(const LabeledGraph& graph, NodeId source) {
  if (source >= graph.node_count()) {
    throw InputError("bfs source " + std::to_string(source) + " out of range (node count " +
                     std::to_string(graph.node_count()) + ")");
  }
  std::vector<Hops> dist(graph.node_count());
  std::vector<NodeId> queue;
  queue.reserve(graph.node_count());
  detail::bfs_into(graph, source, dist, queue);
  return dist;
}

DistanceMatrix apsp_oracle_serial(const LabeledGraph& graph) {
  const auto n = graph.node_count();
  DistanceMatrix dm(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) detail::bfs_into(graph, s, dm.row(s), queue);
  return dm;
}

DistanceParams distance_params(const DistanceMatrix& dm) {
  const auto n = dm.size();
  if (n == 0) throw InputError("distance matrix is empty");
  DistanceParams p;
  p.eccentricities.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    std::uint32_t ecc = 0;
    for (NodeId v = 0; v < n; ++v) {
      const Hops h = dm.at(u, v);
      if (!h.reachable()) {
        throw DisconnectedGraph("graph is disconnected: node " + std::to_string(v) +
                                " unreachable from node " + std::to_string(u));
      }
      ecc = std::max(ecc, h.value());
    }
    p.eccentricities[u] = ecc;
  }
  const auto [lo, hi] = std::minmax_element(p.eccentricities.begin(), p.eccentricities.end());
  p.radius = *lo;
  p.diameter = *hi;
  return p;
}

}  // namespace congest
