#include "congest/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace congest {

void write_edge_list(std::ostream& out, const LabeledGraph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

LabeledGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    return InputError("edge list line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw InputError("edge list is empty");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string trailing;
    if (!(header >> n >> m) || (header >> trailing)) throw fail("expected header 'n m'");
  }
  if (n < 1) throw fail("node count must be positive");
  if (m < 0) throw fail("edge count must be non-negative");

  LabeledGraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line()) throw fail("expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(e));
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string trailing;
    if (!(row >> u >> v) || (row >> trailing)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint out of range");
    try {
      g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    } catch (const InputError& err) {
      throw fail(err.what());
    }
  }
  if (next_line()) throw fail("unexpected content after the declared edges");
  return g;
}

nlohmann::ordered_json roles_to_json(const LabeledGraph& graph,
                                     const nlohmann::ordered_json& extra) {
  nlohmann::ordered_json j;
  auto roles = nlohmann::ordered_json::object();
  // Node order rather than role order keeps the file readable top to bottom.
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (auto r = graph.role_of(u)) roles[r->to_string()] = u;
  }
  j["roles"] = std::move(roles);
  auto alice = nlohmann::ordered_json::array();
  auto bob = nlohmann::ordered_json::array();
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (auto s = graph.side_of(u)) (*s == Side::Alice ? alice : bob).push_back(u);
  }
  j["side"] = {{"alice", std::move(alice)}, {"bob", std::move(bob)}};
  if (extra.is_object()) {
    for (const auto& [key, value] : extra.items()) j[key] = value;
  }
  return j;
}

void apply_roles_json(LabeledGraph& graph, const nlohmann::json& sidecar) {
  try {
    if (sidecar.contains("roles")) {
      for (const auto& [tag, index] : sidecar.at("roles").items()) {
        graph.assign_role(index.get<NodeId>(), Role::parse(tag));
      }
    }
    if (sidecar.contains("side")) {
      const auto& side = sidecar.at("side");
      for (const auto& [key, which] : {std::pair{"alice", Side::Alice}, {"bob", Side::Bob}}) {
        if (!side.contains(key)) continue;
        for (const auto& idx : side.at(key)) graph.set_side(idx.get<NodeId>(), which);
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw InputError(std::string("malformed role sidecar: ") + err.what());
  }
}

void write_dot(std::ostream& out, const LabeledGraph& graph, const std::string& name) {
  auto label = [&](NodeId u) {
    auto r = graph.role_of(u);
    return r ? r->to_string() : std::to_string(u);
  };
  out << "graph " << name << " {\n";
  for (auto side : {Side::Alice, Side::Bob}) {
    bool any = false;
    for (NodeId u = 0; u < graph.node_count(); ++u) {
      if (graph.side_of(u) != side) continue;
      if (!any) out << "  subgraph cluster_" << to_string(side) << " {\n    label=\""
                    << to_string(side) << "\";\n";
      any = true;
      out << "    " << u << " [label=\"" << label(u) << "\"];\n";
    }
    if (any) out << "  }\n";
  }
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (!graph.side_of(u)) out << "  " << u << " [label=\"" << label(u) << "\"];\n";
  }
  for (const Edge& e : graph.edges()) {
    const bool cut = graph.side_of(e.u) && graph.side_of(e.v) &&
                     graph.side_of(e.u) != graph.side_of(e.v);
    out << "  " << e.u << " -- " << e.v << (cut ? " [color=red]" : "") << ";\n";
  }
  out << "}\n";
}

LabeledGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open JSON file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    throw InputError("malformed JSON in '" + path + "': " + err.what());
  }
}

}  // namespace congest
