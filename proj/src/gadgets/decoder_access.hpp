#pragma once

#include "congest/gadgets.hpp"

namespace congest::detail {

// Throws std::logic_error unless `node` is on Alice's side; logs the read.
void note_alice_read(const LabeledGraph& graph, NodeId node, AccessLog* log);

}  // namespace congest::detail
