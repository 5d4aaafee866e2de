#include "congest/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <queue>

namespace congest {

std::string_view to_string(Side side) { return side == Side::Alice ? "alice" : "bob"; }

namespace {

struct RoleName {
  RoleKind kind;
  std::string_view name;
  int arity;
};

constexpr std::array<RoleName, 12> kRoleNames{{
    {RoleKind::A, "A", 1},
    {RoleKind::B, "B", 1},
    {RoleKind::A0, "A0", 0},
    {RoleKind::B0, "B0", 0},
    {RoleKind::AHelper, "AHelper", 2},
    {RoleKind::BHelper, "BHelper", 2},
    {RoleKind::APrime, "APrime", 1},
    {RoleKind::BPrime, "BPrime", 1},
    {RoleKind::BDoublePrime, "BDoublePrime", 1},
    {RoleKind::Padding, "Padding", 1},
    {RoleKind::Intermediate, "Intermediate", 3},
    {RoleKind::LineNode, "LineNode", 1},
}};

const RoleName& lookup(RoleKind kind) {
  for (const auto& r : kRoleNames) {
    if (r.kind == kind) return r;
  }
  throw std::logic_error("unknown role kind");
}

}  // namespace

std::string Role::to_string() const {
  const auto& info = lookup(kind);
  std::string out(info.name);
  if (info.arity == 0) return out;
  const std::array<std::uint32_t, 3> idx{i, j, k};
  out += '(';
  for (int a = 0; a < info.arity; ++a) {
    if (a) out += ',';
    out += std::to_string(idx[a]);
  }
  out += ')';
  return out;
}

Role Role::parse(std::string_view text) {
  auto fail = [&] { return InputError("malformed role tag: '" + std::string(text) + "'"); };
  const auto open = text.find('(');
  const auto name = text.substr(0, open);
  const RoleName* info = nullptr;
  for (const auto& r : kRoleNames) {
    if (r.name == name) info = &r;
  }
  if (!info) throw fail();

  Role role{info->kind};
  if (open == std::string_view::npos) {
    if (info->arity != 0) throw fail();
    return role;
  }
  if (text.back() != ')') throw fail();
  auto args = text.substr(open + 1, text.size() - open - 2);
  std::array<std::uint32_t*, 3> slots{&role.i, &role.j, &role.k};
  int count = 0;
  while (true) {
    if (count >= info->arity) throw fail();
    const auto comma = args.find(',');
    const auto token = args.substr(0, comma);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *slots[count]);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) throw fail();
    ++count;
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (count != info->arity) throw fail();
  return role;
}

LabeledGraph::LabeledGraph(std::size_t node_count)
    : adjacency_(node_count), sides_(node_count) {}

LabeledGraph LabeledGraph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  LabeledGraph g(node_count);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void LabeledGraph::check_node(NodeId u) const {
  if (u >= adjacency_.size()) {
    throw InputError("node " + std::to_string(u) + " out of range (node count " +
                     std::to_string(adjacency_.size()) + ")");
  }
}

NodeId LabeledGraph::add_node() {
  adjacency_.emplace_back();
  sides_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void LabeledGraph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) throw InputError("self-loop at node " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool LabeledGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::span<const NodeId> LabeledGraph::neighbors(NodeId u) const {
  check_node(u);
  return adjacency_[u];
}

std::uint32_t LabeledGraph::port_of(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw InputError("nodes " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not adjacent");
  }
  return static_cast<std::uint32_t>(it - nbrs.begin());
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void LabeledGraph::assign_role(NodeId node, Role role) {
  check_node(node);
  if (auto it = role_to_node_.find(role); it != role_to_node_.end() && it->second != node) {
    throw InputError("role " + role.to_string() + " already held by node " +
                     std::to_string(it->second));
  }
  if (auto it = node_to_role_.find(node); it != node_to_role_.end()) {
    role_to_node_.erase(it->second);
  }
  role_to_node_[role] = node;
  node_to_role_[node] = role;
}

std::optional<Role> LabeledGraph::role_of(NodeId node) const {
  auto it = node_to_role_.find(node);
  if (it == node_to_role_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> LabeledGraph::find(const Role& role) const {
  auto it = role_to_node_.find(role);
  if (it == role_to_node_.end()) return std::nullopt;
  return it->second;
}

NodeId LabeledGraph::node(const Role& role) const {
  if (auto n = find(role)) return *n;
  throw InputError("graph has no node with role " + role.to_string());
}

void LabeledGraph::set_side(NodeId node, Side side) {
  check_node(node);
  sides_[node] = side;
}

std::optional<Side> LabeledGraph::side_of(NodeId node) const {
  check_node(node);
  return sides_[node];
}

bool LabeledGraph::has_full_side_map() const {
  return std::all_of(sides_.begin(), sides_.end(), [](const auto& s) { return s.has_value(); });
}

bool is_connected(const LabeledGraph& graph) {
  if (graph.node_count() == 0) return true;
  const auto d = bfs(graph, 0);
  return std::all_of(d.begin(), d.end(), [](Hops h) { return h.reachable(); });
}

}  // namespace congest
