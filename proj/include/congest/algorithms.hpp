#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "congest/sim.hpp"

namespace congest {

/// Leader = minimum ID, plus a BFS tree rooted at it. Fixed clock: the flood
/// runs n - 1 rounds, parent notices go out in round n, and nodes halt in
/// round n + 1 knowing leader, depth, parent port and child ports.
///
/// Output scalars: "leader", "depth", "parent_port" (-1 at the root);
/// vector "children_ports".
std::unique_ptr<NodeProgram> leader_bfs_tree();

/// All-pairs distances. After the tree phase a token walks the BFS tree
/// depth-first, pausing one round at each first visit; a visited node starts
/// a BFS wave tagged with its ID. Waves relax distance estimates and are
/// forwarded through per-port FIFO queues within the bandwidth budget.
/// Nodes halt on the phase clock at round apsp_halt_round(n).
///
/// Output vector: "distances" (indexed by node ID).
std::unique_ptr<NodeProgram> pipelined_apsp();

/// pipelined_apsp followed by a convergecast of (max, min) eccentricity up the
/// BFS tree and a broadcast of the result back down.
///
/// Output scalars: "ecc", "diameter", "radius".
std::unique_ptr<NodeProgram> ecc_diameter_radius();

/// Round in which pipelined_apsp nodes halt (5n for n >= 2, 0 for n = 1).
std::uint32_t apsp_halt_round(std::uint32_t n);

/// "tree", "apsp" or "ecc"; throws InputError otherwise.
std::unique_ptr<NodeProgram> program_by_name(std::string_view name);

}  // namespace congest
