#include <string>

#include "congest/gadgets.hpp"
#include "decoder_access.hpp"

namespace congest {

ApspGadgetParams apsp_params(std::uint32_t n) {
  if (n < 5) throw InputError("APSP gadget requires n >= 5, got n=" + std::to_string(n));
  ApspGadgetParams p;
  p.n = n;
  p.s = (n - 1) / 2;
  p.k = static_cast<std::uint64_t>(p.s) * (p.s - 1) / 2;
  p.has_b0 = n % 2 == 0;
  p.alice_nodes = p.s + 1;
  p.bob_nodes = p.has_b0 ? p.s + 1 : p.s;
  return p;
}

LabeledGraph build_apsp_gadget(std::uint32_t n, const BitVector& x, const BitVector& y) {
  const auto params = apsp_params(n);
  if (x.size() != params.k || y.size() != params.k) {
    throw InputError("APSP gadget with n=" + std::to_string(n) + " needs |x| = |y| = k = " +
                     std::to_string(params.k) + ", got " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()));
  }
  const std::uint32_t s = params.s;
  LabeledGraph g(n);

  const NodeId a0 = 0;
  auto a = [](std::uint32_t i) -> NodeId { return i; };
  const NodeId b_base = params.has_b0 ? s + 2 : s + 1;
  auto b = [&](std::uint32_t i) -> NodeId { return b_base + i - 1; };

  g.assign_role(a0, Role::a0());
  g.set_side(a0, Side::Alice);
  if (params.has_b0) {
    g.assign_role(s + 1, Role::b0());
    g.set_side(s + 1, Side::Bob);
  }
  for (std::uint32_t i = 1; i <= s; ++i) {
    g.assign_role(a(i), Role::a(i));
    g.set_side(a(i), Side::Alice);
    g.assign_role(b(i), Role::b(i));
    g.set_side(b(i), Side::Bob);
  }

  for (std::uint32_t i = 1; i <= s; ++i) {
    g.add_edge(a0, a(i));
    g.add_edge(a(i), b(i));
    if (params.has_b0) g.add_edge(s + 1, b(i));
  }
  for (std::uint64_t p = 1; p <= params.k; ++p) {
    const auto [i, j] = index_to_pair(p, s);
    if (!x.at(p)) g.add_edge(a(i), a(j));
    if (!y.at(p)) g.add_edge(b(i), b(j));
  }
  return g;
}

namespace detail {

void note_alice_read(const LabeledGraph& graph, NodeId node, AccessLog* log) {
  if (graph.side_of(node) != Side::Alice) {
    throw std::logic_error("decoder attempted to read non-Alice node " + std::to_string(node));
  }
  if (log) log->nodes_read.push_back(node);
}

}  // namespace detail

std::uint64_t decode_apsp(const DistanceMatrix& dm, const LabeledGraph& graph, AccessLog* log) {
  if (dm.size() != graph.node_count()) {
    throw InputError("distance matrix size does not match the graph");
  }
  graph.node(Role::a0());
  std::uint32_t s = 0;
  while (graph.find(Role::a(s + 1))) ++s;
  if (s < 2) throw InputError("graph is missing APSP gadget roles A(1), A(2)");

  std::uint64_t count = 0;
  for (std::uint32_t i = 1; i <= s; ++i) {
    const NodeId ai = graph.node(Role::a(i));
    detail::note_alice_read(graph, ai, log);
    const auto row = dm.row(ai);
    for (std::uint32_t j = i + 1; j <= s; ++j) {
      if (row[graph.node(Role::b(j))].value() == 3) ++count;
    }
  }
  return count;
}

}  // namespace congest
