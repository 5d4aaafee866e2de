#pragma once

#include <optional>

#include <json.hpp>

#include "congest/sim.hpp"

namespace congest {

/// {"rounds": r, "outputs": {"<node>": {...}}, "cut": {...}, "bandwidth_bits": B}.
/// "cut" is present only when a report is supplied.
nlohmann::ordered_json sim_to_json(const SimResult& result,
                                   const std::optional<CutReport>& cut = std::nullopt);

nlohmann::ordered_json output_to_json(const NodeOutput& output);

}  // namespace congest
