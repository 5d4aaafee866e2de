#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "congest/graph.hpp"

namespace congest {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
void write_edge_list(std::ostream& out, const LabeledGraph& graph);
LabeledGraph read_edge_list(std::istream& in);

/// Role sidecar: {"roles": {"<tag>": index, ...}, "side": {"alice": [...], "bob": [...]}}.
/// `extra` is merged at top level (used for gadget metadata such as {"gadget": {...}}).
nlohmann::ordered_json roles_to_json(const LabeledGraph& graph,
                                     const nlohmann::ordered_json& extra = {});
/// Applies roles and sides from a sidecar onto an already-loaded graph.
void apply_roles_json(LabeledGraph& graph, const nlohmann::json& sidecar);

/// Graphviz export; nodes carry their role tag (or index) as label and are
/// clustered by side when sides are declared.
void write_dot(std::ostream& out, const LabeledGraph& graph, const std::string& name = "G");

LabeledGraph load_edge_list_file(const std::string& path);
nlohmann::json load_json_file(const std::string& path);

}  // namespace congest
