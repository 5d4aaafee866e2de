#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "congest/graph.hpp"
#include "congest/instances.hpp"

namespace congest {

/// Records which nodes a decoder looked at. Decoders only ever read entries
/// belonging to Alice-side nodes and throw std::logic_error otherwise.
struct AccessLog {
  std::vector<NodeId> nodes_read;
};

// ---------------------------------------------------------------------------
// APSP reduction graph

struct ApspGadgetParams {
  std::uint32_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t k = 0;
  bool has_b0 = false;  // n even
  std::uint32_t alice_nodes = 0;
  std::uint32_t bob_nodes = 0;
};

/// s = floor((n-1)/2), k = s(s-1)/2. Requires n >= 5.
ApspGadgetParams apsp_params(std::uint32_t n);

/// Nodes: a_0, a_1..a_s, [b_0], b_1..b_s (in that index order). a_i and a_j
/// are joined iff x_p = 0, b_i and b_j iff y_p = 0, p = pair_to_index(i, j, s).
LabeledGraph build_apsp_gadget(std::uint32_t n, const BitVector& x, const BitVector& y);

/// Counts pairs i < j with d(a_i, b_j) = 3, reading only rows of a-nodes.
std::uint64_t decode_apsp(const DistanceMatrix& dm, const LabeledGraph& graph,
                          AccessLog* log = nullptr);

// ---------------------------------------------------------------------------
// Eccentricity reduction graph, with optional subdivision length ell

struct EccGadgetParams {
  std::uint32_t n = 0;
  std::uint32_t ell = 1;
  std::uint32_t k = 0;
  std::uint32_t s = 0;

  /// Node count before padding for inputs of the given Hamming weights.
  std::uint64_t n_prime(std::uint64_t x_weight, std::uint64_t y_weight) const;
};

/// Left-hand side of the k budget: node count with |x| = |y| = k.
std::uint64_t ecc_worst_case_nodes(std::uint64_t k, std::uint32_t ell);

/// Largest k whose worst-case node count fits in n. Requires n >= 31*ell - 8.
EccGadgetParams ecc_params(std::uint32_t n, std::uint32_t ell);

/// Exactly n nodes; ell = 1 is the unsubdivided construction.
LabeledGraph build_ecc_gadget(std::uint32_t n, std::uint32_t ell, const BitVector& x,
                              const BitVector& y);

/// Edges between the Alice and Bob halves of an eccentricity gadget (never subdivided).
std::size_t ecc_cut_size(std::uint32_t s);

/// Counts p with ecc[a_p] < 5*ell + 1. `ecc` is indexed by node.
std::uint64_t decode_ecc(std::span<const std::uint32_t> ecc, const LabeledGraph& graph,
                         std::uint32_t ell, AccessLog* log = nullptr);

/// ell = ceil(2 / (9 eps)) for 0 < eps < 2/3.
std::uint32_t choose_ell(double eps);

struct ApproxThresholds {
  double low = 0;   // 3*ell + 1
  double high = 0;  // (5*ell + 1) / (5/3 - eps)
};
ApproxThresholds approx_thresholds(std::uint32_t ell, double eps);

/// Classifies a_p as intersecting iff est[a_p] <= 3*ell + 1. When `exact` is
/// given, every estimate read is checked against e/(5/3 - eps) <= est <= e and a
/// ContractViolation is thrown otherwise.
std::uint64_t decode_ecc_approx(std::span<const double> est, const LabeledGraph& graph,
                                std::uint32_t ell, double eps,
                                std::optional<std::span<const std::uint32_t>> exact = std::nullopt,
                                AccessLog* log = nullptr);

// ---------------------------------------------------------------------------
// Other constructors

/// Path A_0 .. A_d; A_0 on Alice's side, A_d on Bob's.
LabeledGraph build_line(std::uint32_t d);

/// Connected simple graph with n nodes and m edges, n-1 <= m <= n(n-1)/2.
LabeledGraph random_connected_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed);

/// Bit vector of length k with independent fair bits.
BitVector random_bits(std::size_t k, std::mt19937_64& rng);

}  // namespace congest
