#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <string>

#include "congest/algorithms.hpp"

namespace congest {

namespace {

enum Kind : std::uint8_t {
  kLeader = 0,  // (leader, sender depth)
  kParent = 1,  // ()
  kWave = 2,    // (source, sender distance)
  kToken = 3,   // ()
  kUp = 4,      // (max ecc, min ecc) of a subtree
  kDown = 5,    // (diameter, radius)
};

enum class Mode { Tree, Apsp, Ecc };

constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();

std::size_t largest_message(std::uint32_t n) { return kTagBits + 2 * id_bits(n); }

class DistanceNode final : public NodeBehavior {
 public:
  DistanceNode(const NodeContext& ctx, Mode mode)
      : ctx_(ctx), mode_(mode), width_(static_cast<std::uint8_t>(id_bits(ctx.n))) {
    if (ctx.n > 1 && ctx.bandwidth_bits < largest_message(ctx.n)) {
      throw InputError("bandwidth of " + std::to_string(ctx.bandwidth_bits) +
                       " bits cannot carry this program's " +
                       std::to_string(largest_message(ctx.n)) + "-bit messages; raise beta");
    }
    leader_ = ctx.id;
    queues_.resize(ctx.degree);
  }

  void init(Outbox& out) override {
    if (ctx_.n == 1) {
      dist_.assign(1, 0);
      halt(final_output(0, 0, 0));
      return;
    }
    out.broadcast(pair_message(kLeader, leader_, depth_));
  }

  void on_round(std::uint32_t round, const PortMessages& inbox, Outbox& out) override {
    const std::uint32_t n = ctx_.n;
    if (round < n) {
      flood_leader(inbox, out);
      return;
    }
    if (round == n) {
      flood_leader(inbox, out);
      if (parent_) out.send(*parent_, Message{kParent, {}});
      return;
    }
    if (round == n + 1) {
      for (Port p = 0; p < inbox.size(); ++p) {
        for (const auto& msg : inbox[p]) {
          if (msg.kind == kParent) children_.push_back(p);
        }
      }
      if (mode_ == Mode::Tree) {
        halt(tree_output());
        return;
      }
      dist_.assign(n, kUnknown);
      if (!parent_) {
        launch_wave();
        token_send_round_ = round + 1;
      }
      flush(round, out);
      return;
    }

    const std::uint32_t halt_round = apsp_halt_round(n);
    if (round <= halt_round) {
      relay_waves(round, inbox);
      flush(round, out);
      if (round == halt_round) finish_apsp(out);
      return;
    }
    aggregate(inbox, out);
  }

  NodeOutput snapshot() const override {
    NodeOutput o;
    o.scalars["leader"] = leader_;
    o.scalars["depth"] = depth_;
    if (!dist_.empty()) o.vectors["distances"] = dist_;
    return o;
  }

 private:
  Message pair_message(Kind kind, std::uint64_t a, std::uint64_t b) const {
    return Message{kind, {{a, width_}, {b, width_}}};
  }

  void flood_leader(const PortMessages& inbox, Outbox& out) {
    bool changed = false;
    for (Port p = 0; p < inbox.size(); ++p) {
      for (const auto& msg : inbox[p]) {
        if (msg.kind != kLeader) continue;
        const auto cand = static_cast<NodeId>(msg.field(0));
        const auto cand_depth = static_cast<std::uint32_t>(msg.field(1)) + 1;
        // Strict improvement only, so ties keep the lowest port.
        if (cand < leader_ || (cand == leader_ && cand_depth < depth_)) {
          leader_ = cand;
          depth_ = cand_depth;
          parent_ = p;
          changed = true;
        }
      }
    }
    if (changed) out.broadcast(pair_message(kLeader, leader_, depth_));
  }

  void launch_wave() {
    dist_[ctx_.id] = 0;
    enqueue(ctx_.id, 0);
  }

  void enqueue(NodeId source, std::uint32_t d) {
    for (auto& q : queues_) {
      auto it = std::find_if(q.begin(), q.end(), [&](const auto& e) { return e.first == source; });
      if (it != q.end()) {
        it->second = std::min(it->second, d);
      } else {
        q.emplace_back(source, d);
      }
    }
  }

  void relay_waves(std::uint32_t round, const PortMessages& inbox) {
    for (Port p = 0; p < inbox.size(); ++p) {
      for (const auto& msg : inbox[p]) {
        if (msg.kind == kWave) {
          const auto source = static_cast<NodeId>(msg.field(0));
          const auto d = static_cast<std::uint32_t>(msg.field(1)) + 1;
          if (d < dist_[source]) {
            dist_[source] = d;
            enqueue(source, d);
          }
        } else if (msg.kind == kToken) {
          if (parent_ && p == *parent_ && !visited_) {
            visited_ = true;
            launch_wave();
            token_send_round_ = round + 1;  // pause one round on first visit
          } else {
            token_send_round_ = round;
          }
        }
      }
    }
  }

  // Token first, then as many queued wave announcements per port as fit.
  void flush(std::uint32_t round, Outbox& out) {
    std::optional<Port> token_port;
    if (token_send_round_ == round) {
      token_send_round_ = 0;
      if (next_child_ < children_.size()) {
        token_port = children_[next_child_++];
      } else if (parent_) {
        token_port = *parent_;
      }
      if (token_port) out.send(*token_port, Message{kToken, {}});
    }
    const std::size_t wave_bits = largest_message(ctx_.n);
    for (Port p = 0; p < queues_.size(); ++p) {
      std::size_t budget = ctx_.bandwidth_bits;
      if (token_port == p) budget -= kTagBits;
      auto& q = queues_[p];
      while (!q.empty() && budget >= wave_bits) {
        out.send(p, pair_message(kWave, q.front().first, q.front().second));
        q.pop_front();
        budget -= wave_bits;
      }
    }
  }

  void finish_apsp(Outbox& out) {
    if (mode_ == Mode::Apsp) {
      NodeOutput o;
      o.vectors["distances"] = dist_;
      halt(std::move(o));
      return;
    }
    ecc_ = *std::max_element(dist_.begin(), dist_.end());
    sub_max_ = sub_min_ = ecc_;
    pending_children_ = children_.size();
    if (pending_children_ == 0) report_up(out);
  }

  void report_up(Outbox& out) {
    if (parent_) {
      out.send(*parent_, pair_message(kUp, sub_max_, sub_min_));
    } else {
      broadcast_down(sub_max_, sub_min_, out);
    }
  }

  void broadcast_down(std::uint32_t diameter, std::uint32_t radius, Outbox& out) {
    for (Port c : children_) out.send(c, pair_message(kDown, diameter, radius));
    halt(final_output(ecc_, diameter, radius));
  }

  void aggregate(const PortMessages& inbox, Outbox& out) {
    for (Port p = 0; p < inbox.size(); ++p) {
      for (const auto& msg : inbox[p]) {
        if (msg.kind == kUp) {
          sub_max_ = std::max(sub_max_, static_cast<std::uint32_t>(msg.field(0)));
          sub_min_ = std::min(sub_min_, static_cast<std::uint32_t>(msg.field(1)));
          if (--pending_children_ == 0) report_up(out);
        } else if (msg.kind == kDown) {
          broadcast_down(static_cast<std::uint32_t>(msg.field(0)),
                         static_cast<std::uint32_t>(msg.field(1)), out);
        }
      }
    }
  }

  NodeOutput tree_output() const {
    NodeOutput o;
    o.scalars["leader"] = leader_;
    o.scalars["depth"] = depth_;
    o.scalars["parent_port"] = parent_ ? static_cast<std::int64_t>(*parent_) : -1;
    o.vectors["children_ports"] = children_;
    return o;
  }

  NodeOutput final_output(std::uint32_t ecc, std::uint32_t diameter, std::uint32_t radius) const {
    switch (mode_) {
      case Mode::Tree:
        return tree_output();
      case Mode::Apsp: {
        NodeOutput o;
        o.vectors["distances"] = dist_;
        return o;
      }
      case Mode::Ecc:
        break;
    }
    NodeOutput o;
    o.scalars["ecc"] = ecc;
    o.scalars["diameter"] = diameter;
    o.scalars["radius"] = radius;
    return o;
  }

  NodeContext ctx_;
  Mode mode_;
  std::uint8_t width_;

  NodeId leader_;
  std::uint32_t depth_ = 0;
  std::optional<Port> parent_;
  std::vector<Port> children_;

  std::vector<std::uint32_t> dist_;
  std::vector<std::deque<std::pair<NodeId, std::uint32_t>>> queues_;
  bool visited_ = false;
  std::uint32_t token_send_round_ = 0;
  std::size_t next_child_ = 0;

  std::uint32_t ecc_ = 0;
  std::uint32_t sub_max_ = 0;
  std::uint32_t sub_min_ = 0;
  std::size_t pending_children_ = 0;
};

class DistanceProgram final : public NodeProgram {
 public:
  DistanceProgram(Mode mode, std::string name) : mode_(mode), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  std::unique_ptr<NodeBehavior> make_node(const NodeContext& ctx) const override {
    return std::make_unique<DistanceNode>(ctx, mode_);
  }
  std::size_t max_message_bits(std::uint32_t n) const override { return largest_message(n); }

 private:
  Mode mode_;
  std::string name_;
};

}  // namespace

std::uint32_t apsp_halt_round(std::uint32_t n) { return n <= 1 ? 0 : 5 * n; }

std::unique_ptr<NodeProgram> leader_bfs_tree() {
  return std::make_unique<DistanceProgram>(Mode::Tree, "tree");
}

std::unique_ptr<NodeProgram> pipelined_apsp() {
  return std::make_unique<DistanceProgram>(Mode::Apsp, "apsp");
}

std::unique_ptr<NodeProgram> ecc_diameter_radius() {
  return std::make_unique<DistanceProgram>(Mode::Ecc, "ecc");
}

std::unique_ptr<NodeProgram> program_by_name(std::string_view name) {
  if (name == "tree") return leader_bfs_tree();
  if (name == "apsp") return pipelined_apsp();
  if (name == "ecc") return ecc_diameter_radius();
  throw InputError("unknown program '" + std::string(name) + "' (expected tree, apsp or ecc)");
}

}  // namespace congest
