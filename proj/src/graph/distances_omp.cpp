#include <exception>

#include "congest/graph.hpp"

namespace congest {

namespace detail {
void bfs_into(const LabeledGraph& graph, NodeId source, std::span<Hops> out,
              std::vector<NodeId>& queue);
}

DistanceMatrix apsp_oracle(const LabeledGraph& graph) {
  const auto n = static_cast<std::int64_t>(graph.node_count());
  DistanceMatrix dm(graph.node_count());
  std::exception_ptr failure;

  // Each source owns its row; the graph is only read.
#pragma omp parallel
  {
    std::vector<NodeId> queue;
    queue.reserve(graph.node_count());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t s = 0; s < n; ++s) {
      try {
        detail::bfs_into(graph, static_cast<NodeId>(s), dm.row(static_cast<NodeId>(s)), queue);
      } catch (...) {
#pragma omp critical(congest_oracle_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return dm;
}

}  // namespace congest
