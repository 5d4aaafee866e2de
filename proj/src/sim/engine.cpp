#include <algorithm>
#include <bit>
#include <exception>
#include <string>

#include "congest/sim.hpp"

namespace congest {

std::uint32_t id_bits(std::uint32_t n) {
  return static_cast<std::uint32_t>(std::bit_width(static_cast<std::uint64_t>(n)));
}

std::uint32_t bandwidth_bits(std::uint32_t n, std::uint32_t beta) {
  if (n < 1) throw InputError("bandwidth_bits requires n >= 1");
  if (beta < 1) throw InputError("bandwidth multiplier beta must be >= 1");
  return beta * id_bits(n);
}

std::size_t Message::size_bits() const {
  std::size_t bits = kTagBits;
  for (const auto& f : fields) bits += f.width;
  return bits;
}

DirectedEdgeIndex::DirectedEdgeIndex(const LabeledGraph& graph) {
  const auto n = graph.node_count();
  offsets_.resize(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + graph.degree(u);
  sources_.resize(offsets_[n]);
  targets_.resize(offsets_[n]);
  reverse_ports_.resize(offsets_[n]);
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = graph.neighbors(u);
    for (Port p = 0; p < nbrs.size(); ++p) {
      const auto e = offsets_[u] + p;
      sources_[e] = u;
      targets_[e] = nbrs[p];
      reverse_ports_[e] = graph.port_of(nbrs[p], u);
    }
  }
}

BandwidthViolation::BandwidthViolation(std::uint32_t round_, NodeId from_, NodeId to_,
                                       std::size_t bits_, std::uint32_t limit_)
    : std::runtime_error("bandwidth violation in round " + std::to_string(round_) + " on edge " +
                         std::to_string(from_) + "->" + std::to_string(to_) + ": " +
                         std::to_string(bits_) + " bits attempted, limit " +
                         std::to_string(limit_)),
      round(round_),
      from(from_),
      to(to_),
      bits(bits_),
      limit(limit_) {}

SimTimeout::SimTimeout(std::uint32_t max_rounds_, std::size_t unhalted_, SimResult partial_)
    : std::runtime_error("simulation did not halt within " + std::to_string(max_rounds_) +
                         " rounds (" + std::to_string(unhalted_) + " nodes still running)"),
      max_rounds(max_rounds_),
      unhalted(unhalted_),
      partial(std::move(partial_)) {}

namespace {

std::uint64_t node_seed(std::uint64_t seed, NodeId id) {
  // splitmix64 finalizer over (seed, id).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(id) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate(const Message& msg, NodeId from) {
  if (msg.kind >= (1U << kTagBits)) {
    throw MalformedMessage("node " + std::to_string(from) + " sent message kind " +
                           std::to_string(msg.kind) + " wider than the tag");
  }
  for (const auto& f : msg.fields) {
    if (f.width > 64 || (f.width < 64 && (f.value >> f.width) != 0)) {
      throw MalformedMessage("node " + std::to_string(from) + " sent value " +
                             std::to_string(f.value) + " in a " + std::to_string(f.width) +
                             "-bit field");
    }
  }
}

// Runs `step(v)` for every node, in parallel when requested. The first
// exception in node order is rethrown so failures are reproducible.
template <typename Step>
void for_each_node(std::size_t n, bool parallel, Step&& step) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t v = 0; v < count; ++v) {
    try {
      step(static_cast<NodeId>(v));
    } catch (...) {
      errors[v] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

SimResult run(const LabeledGraph& graph, const NodeProgram& program, const SimConfig& config,
              const RoundObserver& observer) {
  const auto n = static_cast<std::uint32_t>(graph.node_count());
  if (n == 0) throw InputError("cannot simulate an empty graph");
  if (config.max_rounds < 1) throw InputError("max_rounds must be positive");

  SimResult result;
  result.bandwidth_bits = bandwidth_bits(n, config.beta);
  const std::uint32_t limit = result.bandwidth_bits;
  const DirectedEdgeIndex index(graph);

  std::vector<std::unique_ptr<NodeBehavior>> nodes(n);
  std::vector<Outbox> outboxes;
  std::vector<PortMessages> inboxes(n);
  outboxes.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    outboxes.emplace_back(graph.degree(v));
    inboxes[v].resize(graph.degree(v));
    NodeContext ctx{v, n, static_cast<std::uint32_t>(graph.degree(v)), limit,
                    node_seed(config.seed, v)};
    nodes[v] = program.make_node(ctx);
  }

  for_each_node(n, config.parallel, [&](NodeId v) { nodes[v]->init(outboxes[v]); });

  auto all_halted = [&] {
    return std::all_of(nodes.begin(), nodes.end(), [](const auto& b) { return b->halted(); });
  };

  std::uint32_t round = 0;
  while (!all_halted()) {
    if (round == config.max_rounds) {
      SimResult partial = result;
      partial.outputs.clear();
      for (const auto& b : nodes) partial.outputs.push_back(b->snapshot());
      const auto unhalted = static_cast<std::size_t>(
          std::count_if(nodes.begin(), nodes.end(), [](const auto& b) { return !b->halted(); }));
      throw SimTimeout(config.max_rounds, unhalted, std::move(partial));
    }
    ++round;

    // Transmit: check every directed edge against B, then hand messages over.
    auto& load = result.edge_load.emplace_back(index.size(), 0);
    std::uint64_t received = 0;
    for (std::size_t e = 0; e < index.size(); ++e) {
      const NodeId u = index.source(e);
      const Port port = static_cast<Port>(e - index.id(u, 0));
      auto& queue = outboxes[u].messages()[port];
      std::size_t bits = 0;
      for (const auto& msg : queue) {
        validate(msg, u);
        bits += msg.size_bits();
      }
      if (bits > limit) throw BandwidthViolation(round, u, index.target(e), bits, limit);
      load[e] = static_cast<std::uint32_t>(bits);
      received += bits;
      auto& slot = inboxes[index.target(e)][index.reverse_port(e)];
      slot = std::move(queue);
      queue.clear();
    }
    result.received_bits.push_back(received);

    for_each_node(n, config.parallel, [&](NodeId v) {
      if (!nodes[v]->halted()) nodes[v]->on_round(round, inboxes[v], outboxes[v]);
      for (auto& q : inboxes[v]) q.clear();
    });

    if (observer) observer(round, nodes);
  }

  result.rounds_used = round;
  result.halted = true;
  result.outputs.reserve(n);
  for (const auto& b : nodes) result.outputs.push_back(b->output());
  return result;
}

bool CutReport::within_bound(std::uint32_t rounds, std::uint32_t bandwidth) const {
  return total_cross_bits <= static_cast<std::uint64_t>(rounds) * cut_size * bandwidth;
}

CutReport cut_report(const SimResult& result, const LabeledGraph& graph) {
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    if (!graph.side_of(u)) {
      throw InputError("node " + std::to_string(u) + " has no declared Alice/Bob side");
    }
  }
  const DirectedEdgeIndex index(graph);
  std::vector<bool> crossing(index.size());
  CutReport report;
  for (std::size_t e = 0; e < index.size(); ++e) {
    crossing[e] = graph.side_of(index.source(e)) != graph.side_of(index.target(e));
    if (crossing[e] && index.source(e) < index.target(e)) ++report.cut_size;
  }
  for (const auto& load : result.edge_load) {
    if (load.size() != index.size()) {
      throw InputError("simulation result does not belong to this graph");
    }
    std::uint64_t bits = 0;
    for (std::size_t e = 0; e < index.size(); ++e) {
      if (crossing[e]) bits += load[e];
    }
    report.per_round_cross_bits.push_back(bits);
    report.total_cross_bits += bits;
  }
  return report;
}

}  // namespace congest
