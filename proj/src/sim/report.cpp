#include "congest/report.hpp"

#include <string>

namespace congest {

nlohmann::ordered_json output_to_json(const NodeOutput& output) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : output.scalars) j[key] = value;
  for (const auto& [key, values] : output.vectors) j[key] = values;
  return j;
}

nlohmann::ordered_json sim_to_json(const SimResult& result, const std::optional<CutReport>& cut) {
  nlohmann::ordered_json j;
  j["rounds"] = result.rounds_used;
  auto outputs = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < result.outputs.size(); ++v) {
    outputs[std::to_string(v)] = output_to_json(result.outputs[v]);
  }
  j["outputs"] = std::move(outputs);
  if (cut) {
    j["cut"] = {
        {"size", cut->cut_size},
        {"total_bits", cut->total_cross_bits},
        {"per_round", cut->per_round_cross_bits},
        {"bound", static_cast<std::uint64_t>(result.rounds_used) * cut->cut_size *
                      result.bandwidth_bits},
        {"within_bound", cut->within_bound(result.rounds_used, result.bandwidth_bits)},
    };
  }
  j["bandwidth_bits"] = result.bandwidth_bits;
  return j;
}

}  // namespace congest
