#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congest/errors.hpp"

namespace congest {

using NodeId = std::uint32_t;

/// Undirected edge, always stored with first < second.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

enum class Side : std::uint8_t { Alice, Bob };

std::string_view to_string(Side side);

enum class RoleKind : std::uint8_t {
  A,             // a_p (eccentricity gadget) or a_i (APSP gadget)
  B,             // b_p / b_i
  A0,
  B0,
  AHelper,       // a^bit_i
  BHelper,       // b^bit_i
  APrime,        // a'_j
  BPrime,        // b'_j
  BDoublePrime,  // b''_p
  Padding,       // a''_i
  Intermediate,  // subdivision node: original edge (i, j), position k
  LineNode,      // A_i of the line network
};

/// Named role of a node inside a reduction gadget. Unused index slots stay 0.
struct Role {
  RoleKind kind = RoleKind::A;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  static Role a(std::uint32_t p) { return {RoleKind::A, p}; }
  static Role b(std::uint32_t p) { return {RoleKind::B, p}; }
  static Role a0() { return {RoleKind::A0}; }
  static Role b0() { return {RoleKind::B0}; }
  static Role a_helper(std::uint32_t i, std::uint32_t bit) { return {RoleKind::AHelper, i, bit}; }
  static Role b_helper(std::uint32_t i, std::uint32_t bit) { return {RoleKind::BHelper, i, bit}; }
  static Role a_prime(std::uint32_t j) { return {RoleKind::APrime, j}; }
  static Role b_prime(std::uint32_t j) { return {RoleKind::BPrime, j}; }
  static Role b_double_prime(std::uint32_t p) { return {RoleKind::BDoublePrime, p}; }
  static Role padding(std::uint32_t i) { return {RoleKind::Padding, i}; }
  static Role intermediate(Edge original, std::uint32_t position) {
    return {RoleKind::Intermediate, original.u, original.v, position};
  }
  static Role line_node(std::uint32_t i) { return {RoleKind::LineNode, i}; }

  /// Canonical text form, e.g. "A(3)", "AHelper(2,1)", "Intermediate(4,9,2)".
  std::string to_string() const;
  static Role parse(std::string_view text);

  auto operator<=>(const Role&) const = default;
};

/// Undirected simple graph with optional gadget roles and Alice/Bob sides.
///
/// Adjacency lists are kept sorted so every traversal is deterministic; port
/// numbers used by the simulator are positions in these lists.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t node_count);

  static LabeledGraph from_edges(std::size_t node_count, std::span<const Edge> edges);

  NodeId add_node();
  /// Throws InputError on self-loops, duplicates, or unknown endpoints.
  void add_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const;

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }
  /// Position of v in u's adjacency list; throws if not adjacent.
  std::uint32_t port_of(NodeId u, NodeId v) const;
  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  void assign_role(NodeId node, Role role);
  std::optional<Role> role_of(NodeId node) const;
  std::optional<NodeId> find(const Role& role) const;
  /// Like find() but throws InputError naming the missing role.
  NodeId node(const Role& role) const;
  const std::map<Role, NodeId>& roles() const { return role_to_node_; }

  void set_side(NodeId node, Side side);
  std::optional<Side> side_of(NodeId node) const;
  bool has_full_side_map() const;

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::map<Role, NodeId> role_to_node_;
  std::map<NodeId, Role> node_to_role_;
  std::vector<std::optional<Side>> sides_;
};

bool is_connected(const LabeledGraph& graph);

/// Hop count with a distinguished "unreachable" state. Reading the value of an
/// unreachable distance throws instead of returning a large integer.
class Hops {
 public:
  constexpr Hops() = default;
  constexpr explicit Hops(std::uint32_t value) : raw_(value) {}

  static constexpr Hops unreachable() {
    Hops h;
    h.raw_ = kUnreachable;
    return h;
  }

  constexpr bool reachable() const { return raw_ != kUnreachable; }
  std::uint32_t value() const;

  constexpr auto operator<=>(const Hops&) const = default;

 private:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t raw_ = kUnreachable;
};

/// Row-major n x n matrix of hop distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n) {}

  std::size_t size() const { return n_; }
  Hops at(NodeId u, NodeId v) const { return dist_[u * n_ + v]; }
  std::span<const Hops> row(NodeId u) const { return {dist_.data() + u * n_, n_}; }
  std::span<Hops> row(NodeId u) { return {dist_.data() + u * n_, n_}; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Hops> dist_;
};

struct DistanceParams {
  std::vector<std::uint32_t> eccentricities;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
};

std::vector<Hops> bfs(const LabeledGraph& graph, NodeId source);

/// All-pairs distances by one BFS per source, sources spread over OpenMP threads.
DistanceMatrix apsp_oracle(const LabeledGraph& graph);
/// Single-threaded reference for apsp_oracle; results are identical.
DistanceMatrix apsp_oracle_serial(const LabeledGraph& graph);

/// Throws DisconnectedGraph if any entry is unreachable.
DistanceParams distance_params(const DistanceMatrix& dm);

/// Replaces each listed edge by a path of `length` edges through fresh
/// Intermediate nodes, appended after the existing nodes in list order.
/// Intermediates inherit the side of their endpoints when both agree.
LabeledGraph subdivide_edges(const LabeledGraph& graph, std::span<const Edge> edges,
                             std::uint32_t length);

}  // namespace congest
