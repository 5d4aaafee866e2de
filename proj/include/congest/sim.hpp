#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

/// Width of every message's kind tag, in bits.
inline constexpr unsigned kTagBits = 3;

/// B = beta * ceil(log2(n + 1)) bits per directed edge per round.
std::uint32_t bandwidth_bits(std::uint32_t n, std::uint32_t beta);

/// Bits needed to write any value in [0, n]: ceil(log2(n + 1)).
std::uint32_t id_bits(std::uint32_t n);

struct Field {
  std::uint64_t value = 0;
  std::uint8_t width = 0;
};

struct Message {
  std::uint8_t kind = 0;
  std::vector<Field> fields;

  std::size_t size_bits() const;
  std::uint64_t field(std::size_t i) const { return fields.at(i).value; }
};

using Port = std::uint32_t;

/// Messages indexed by port; a port is the position of a neighbor in the
/// node's sorted adjacency list.
using PortMessages = std::vector<std::vector<Message>>;

class Outbox {
 public:
  explicit Outbox(std::size_t degree = 0) : per_port_(degree) {}

  void send(Port port, Message msg) { per_port_.at(port).push_back(std::move(msg)); }
  void broadcast(const Message& msg) {
    for (auto& q : per_port_) q.push_back(msg);
  }
  std::size_t degree() const { return per_port_.size(); }
  PortMessages& messages() { return per_port_; }
  const PortMessages& messages() const { return per_port_; }
  void clear() {
    for (auto& q : per_port_) q.clear();
  }

 private:
  PortMessages per_port_;
};

/// What a node knows when it starts.
struct NodeContext {
  NodeId id = 0;
  std::uint32_t n = 0;
  std::uint32_t degree = 0;
  std::uint32_t bandwidth_bits = 0;
  std::uint64_t seed = 0;  // program-level randomness only
};

struct NodeOutput {
  std::map<std::string, std::int64_t> scalars;
  std::map<std::string, std::vector<std::uint32_t>> vectors;

  bool operator==(const NodeOutput&) const = default;
};

/// Per-node state machine. A node stops computing once it halts; messages
/// emitted in its halting round are still transmitted.
class NodeBehavior {
 public:
  virtual ~NodeBehavior() = default;

  virtual void init(Outbox& out) = 0;
  /// `inbox` holds what each neighbor transmitted this round, by port.
  virtual void on_round(std::uint32_t round, const PortMessages& inbox, Outbox& out) = 0;
  /// Current tentative output; used for diagnostics and timeouts.
  virtual NodeOutput snapshot() const { return output_; }

  bool halted() const { return halted_; }
  const NodeOutput& output() const { return output_; }

 protected:
  void halt(NodeOutput output) {
    output_ = std::move(output);
    halted_ = true;
  }

 private:
  bool halted_ = false;
  NodeOutput output_;
};

/// Factory for the behavior run at every node.
class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<NodeBehavior> make_node(const NodeContext& ctx) const = 0;
  /// Largest single message the program emits on an n-node graph.
  virtual std::size_t max_message_bits(std::uint32_t n) const = 0;
};

struct SimConfig {
  std::uint32_t beta = 4;
  std::uint32_t max_rounds = 1000;
  std::uint64_t seed = 0;
  bool parallel = true;  // per-node compute across OpenMP threads
};

struct SimResult {
  std::uint32_t rounds_used = 0;
  std::uint32_t bandwidth_bits = 0;
  std::vector<NodeOutput> outputs;
  /// edge_load[r][e]: bits transmitted on directed edge e in round r + 1.
  std::vector<std::vector<std::uint32_t>> edge_load;
  /// Bits placed into inboxes in round r + 1.
  std::vector<std::uint64_t> received_bits;
  bool halted = false;

  bool operator==(const SimResult&) const = default;
};

/// Dense numbering of directed edges: id = offset(u) + port.
class DirectedEdgeIndex {
 public:
  explicit DirectedEdgeIndex(const LabeledGraph& graph);

  std::size_t size() const { return targets_.size(); }
  std::size_t id(NodeId u, Port port) const { return offsets_[u] + port; }
  NodeId source(std::size_t e) const { return sources_[e]; }
  NodeId target(std::size_t e) const { return targets_[e]; }
  /// Port on the receiving side of directed edge e.
  Port reverse_port(std::size_t e) const { return reverse_ports_[e]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> targets_;
  std::vector<Port> reverse_ports_;
};

class BandwidthViolation : public std::runtime_error {
 public:
  BandwidthViolation(std::uint32_t round, NodeId from, NodeId to, std::size_t bits,
                     std::uint32_t limit);
  std::uint32_t round;
  NodeId from;
  NodeId to;
  std::size_t bits;
  std::uint32_t limit;
};

class MalformedMessage : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SimTimeout : public std::runtime_error {
 public:
  SimTimeout(std::uint32_t max_rounds, std::size_t unhalted, SimResult partial);
  std::uint32_t max_rounds;
  std::size_t unhalted;
  /// Snapshots of every node when the budget ran out.
  SimResult partial;
};

using RoundObserver =
    std::function<void(std::uint32_t round, std::span<const std::unique_ptr<NodeBehavior>> nodes)>;

/// Runs `program` on every node of `graph` until all nodes halt.
/// Throws BandwidthViolation, MalformedMessage, or SimTimeout.
SimResult run(const LabeledGraph& graph, const NodeProgram& program, const SimConfig& config,
              const RoundObserver& observer = {});

struct CutReport {
  std::size_t cut_size = 0;
  std::uint64_t total_cross_bits = 0;
  std::vector<std::uint64_t> per_round_cross_bits;

  /// total_cross_bits <= rounds * cut_size * B.
  bool within_bound(std::uint32_t rounds, std::uint32_t bandwidth) const;
};

/// Sums traffic on edges whose endpoints lie on different sides. Every node
/// must have a declared side.
CutReport cut_report(const SimResult& result, const LabeledGraph& graph);

}  // namespace congest
