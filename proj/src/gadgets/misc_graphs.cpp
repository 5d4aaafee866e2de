#include <algorithm>
#include <numeric>
#include <string>

#include "congest/gadgets.hpp"

namespace congest {

LabeledGraph build_line(std::uint32_t d) {
  if (d < 1) throw InputError("line network requires d >= 1");
  LabeledGraph g(d + 1);
  for (std::uint32_t i = 0; i <= d; ++i) g.assign_role(i, Role::line_node(i));
  for (std::uint32_t i = 0; i < d; ++i) g.add_edge(i, i + 1);
  g.set_side(0, Side::Alice);
  g.set_side(d, Side::Bob);
  return g;
}

LabeledGraph random_connected_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph requires n >= 1");
  const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m + 1 < n || m > max_m) {
    throw InputError("random connected graph needs n-1 <= m <= n(n-1)/2; got n=" +
                     std::to_string(n) + ", m=" + std::to_string(m));
  }
  std::mt19937_64 rng(seed);
  LabeledGraph g(n);

  // Random spanning tree: attach each node of a shuffled order to an earlier one.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::uint32_t t = 1; t < n; ++t) {
    std::uniform_int_distribution<std::uint32_t> pick(0, t - 1);
    g.add_edge(order[t], order[pick(rng)]);
  }

  std::uint64_t remaining = m - (n - 1);
  if (remaining == 0) return g;
  if (remaining * 2 <= max_m) {
    std::uniform_int_distribution<NodeId> node(0, n - 1);
    while (remaining > 0) {
      const NodeId u = node(rng), v = node(rng);
      if (u == v || g.has_edge(u, v)) continue;
      g.add_edge(u, v);
      --remaining;
    }
  } else {
    std::vector<Edge> absent;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) absent.emplace_back(u, v);
      }
    }
    std::shuffle(absent.begin(), absent.end(), rng);
    for (std::uint64_t e = 0; e < remaining; ++e) g.add_edge(absent[e].u, absent[e].v);
  }
  return g;
}

BitVector random_bits(std::size_t k, std::mt19937_64& rng) {
  BitVector v(k);
  for (std::size_t p = 1; p <= k; ++p) v.set(p, (rng() >> 63) != 0);
  return v;
}

}  // namespace congest
