#include <doctest.h>

#include <random>

#include "congest/algorithms.hpp"
#include "congest/gadgets.hpp"
#include "test_support.hpp"

using namespace congest;
using congest::testing::complete_graph;
using congest::testing::cycle_graph;
using congest::testing::path_graph;

namespace {

std::vector<std::uint32_t> oracle_row(const LabeledGraph& g, NodeId u) {
  std::vector<std::uint32_t> out;
  for (auto h : bfs(g, u)) out.push_back(h.value());
  return out;
}

void check_apsp(const LabeledGraph& g, const SimConfig& cfg = {}) {
  const auto r = run(g, *pipelined_apsp(), cfg);
  REQUIRE(r.halted);
  CHECK(r.rounds_used == apsp_halt_round(g.node_count()));
  for (NodeId u = 0; u < g.node_count(); ++u) {
    CAPTURE(u);
    REQUIRE(r.outputs[u].vectors.at("distances") == oracle_row(g, u));
  }
}

// Star whose center has the largest ID, so the leader is a leaf.
LabeledGraph star_with_high_center(std::uint32_t leaves) {
  LabeledGraph g(leaves + 1);
  for (NodeId v = 0; v < leaves; ++v) g.add_edge(v, leaves);
  return g;
}

}  // namespace

TEST_CASE("leader and BFS tree on a star settle by round 2") {
  const auto g = star_with_high_center(5);
  std::vector<NodeOutput> at_round_2;
  const auto r = run(g, *leader_bfs_tree(), SimConfig{},
                     [&](std::uint32_t round, std::span<const std::unique_ptr<NodeBehavior>> nodes) {
                       if (round != 2) return;
                       for (const auto& node : nodes) at_round_2.push_back(node->snapshot());
                     });
  REQUIRE(at_round_2.size() == 6);
  for (NodeId v = 0; v <= 5; ++v) {
    CHECK(r.outputs[v].scalars.at("leader") == 0);
    CHECK(at_round_2[v].scalars.at("leader") == 0);
    CHECK(at_round_2[v].scalars.at("depth") == r.outputs[v].scalars.at("depth"));
  }
  CHECK(r.outputs[0].scalars.at("depth") == 0);
  CHECK(r.outputs[5].scalars.at("depth") == 1);
  CHECK(r.outputs[3].scalars.at("depth") == 2);
  CHECK(r.outputs[0].scalars.at("parent_port") == -1);
}

TEST_CASE("tree program on a path") {
  const auto r = run(path_graph(6), *leader_bfs_tree(), SimConfig{});
  for (NodeId v = 0; v < 6; ++v) {
    CHECK(r.outputs[v].scalars.at("leader") == 0);
    CHECK(r.outputs[v].scalars.at("depth") == v);
  }
}

TEST_CASE("tree program builds a BFS tree rooted at the minimum ID") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 60);
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto m = std::min<std::uint64_t>(max_m, n - 1 + rng() % (2 * n));
    const auto g = random_connected_graph(n, m, rng());
    CAPTURE(n);
    const auto r = run(g, *leader_bfs_tree(), SimConfig{});
    const auto depth = oracle_row(g, 0);
    std::size_t child_links = 0;
    for (NodeId v = 0; v < n; ++v) {
      const auto& out = r.outputs[v];
      REQUIRE(out.scalars.at("leader") == 0);
      REQUIRE(out.scalars.at("depth") == depth[v]);
      const auto parent_port = out.scalars.at("parent_port");
      if (v == 0) {
        REQUIRE(parent_port == -1);
        continue;
      }
      REQUIRE(parent_port >= 0);
      const NodeId parent = g.neighbors(v)[static_cast<std::size_t>(parent_port)];
      REQUIRE(depth[parent] + 1 == depth[v]);
      const auto& kids = r.outputs[parent].vectors.at("children_ports");
      REQUIRE(std::find(kids.begin(), kids.end(), g.port_of(parent, v)) != kids.end());
    }
    for (const auto& out : r.outputs) child_links += out.vectors.at("children_ports").size();
    CHECK(child_links == n - 1);
  }
}

TEST_CASE("pipelined APSP on small graphs") {
  check_apsp(path_graph(4));
  check_apsp(path_graph(2));
  check_apsp(path_graph(3));
  check_apsp(cycle_graph(3));
  check_apsp(complete_graph(5));
  check_apsp(cycle_graph(9));
  check_apsp(star_with_high_center(7));

  const auto single = run(LabeledGraph(1), *pipelined_apsp(), SimConfig{});
  CHECK(single.rounds_used == 0);
  CHECK(single.outputs[0].vectors.at("distances") == std::vector<std::uint32_t>{0});
}

TEST_CASE("pipelined APSP on the small APSP gadget") {
  const auto g = build_apsp_gadget(8, BitVector::parse("010"), BitVector::parse("110"));
  const auto r = run(g, *pipelined_apsp(), SimConfig{});
  const auto& from_a1 = r.outputs[g.node(Role::a(1))].vectors.at("distances");
  CHECK(from_a1[g.node(Role::b(3))] == 3);
  CHECK(from_a1[g.node(Role::b(2))] == 2);
  check_apsp(g);
}

TEST_CASE("pipelined APSP on random graphs, serial and parallel") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng() % 40);
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto m = std::min<std::uint64_t>(max_m, n - 1 + rng() % (3 * n));
    const auto g = random_connected_graph(n, m, rng());
    CAPTURE(n);
    CAPTURE(m);
    SimConfig cfg;
    cfg.parallel = trial % 2 == 0;
    check_apsp(g, cfg);
  }
}

TEST_CASE("distance estimates only decrease") {
  const auto g = random_connected_graph(24, 40, 3);
  std::vector<std::vector<std::uint32_t>> last(g.node_count());
  bool monotone = true;
  run(g, *pipelined_apsp(), SimConfig{},
      [&](std::uint32_t, std::span<const std::unique_ptr<NodeBehavior>> nodes) {
        for (std::size_t v = 0; v < nodes.size(); ++v) {
          const auto snap = nodes[v]->snapshot();
          auto it = snap.vectors.find("distances");
          if (it == snap.vectors.end()) continue;
          if (!last[v].empty()) {
            for (std::size_t i = 0; i < it->second.size(); ++i)
              monotone &= it->second[i] <= last[v][i];
          }
          last[v] = it->second;
        }
      });
  CHECK(monotone);
}

TEST_CASE("eccentricity, diameter and radius") {
  SUBCASE("path of 3") {
    const auto r = run(path_graph(3), *ecc_diameter_radius(), SimConfig{});
    const std::vector<std::int64_t> want{2, 1, 2};
    for (NodeId v = 0; v < 3; ++v) {
      CHECK(r.outputs[v].scalars.at("ecc") == want[v]);
      CHECK(r.outputs[v].scalars.at("diameter") == 2);
      CHECK(r.outputs[v].scalars.at("radius") == 1);
    }
  }
  SUBCASE("6-cycle") {
    const auto r = run(cycle_graph(6), *ecc_diameter_radius(), SimConfig{});
    for (const auto& out : r.outputs) {
      CHECK(out.scalars.at("ecc") == 3);
      CHECK(out.scalars.at("diameter") == 3);
      CHECK(out.scalars.at("radius") == 3);
    }
  }
  SUBCASE("eccentricity gadget at ell = 1") {
    const auto g = build_ecc_gadget(23, 1, BitVector::parse("100"), BitVector::parse("110"));
    const auto r = run(g, *ecc_diameter_radius(), SimConfig{});
    const auto params = distance_params(apsp_oracle(g));
    for (NodeId v = 0; v < g.node_count(); ++v) {
      REQUIRE(r.outputs[v].scalars.at("ecc") == params.eccentricities[v]);
      REQUIRE(r.outputs[v].scalars.at("diameter") == params.diameter);
      REQUIRE(r.outputs[v].scalars.at("radius") == params.radius);
    }
    CHECK(r.outputs[g.node(Role::a(1))].scalars.at("ecc") == 4);
    CHECK(r.outputs[g.node(Role::a(2))].scalars.at("ecc") == 6);
    CHECK(r.outputs[g.node(Role::a(3))].scalars.at("ecc") == 6);
  }
}

TEST_CASE("distance programs reject a bandwidth too small for their messages") {
  SimConfig cfg;
  cfg.beta = 1;
  CHECK_THROWS_AS(run(path_graph(5), *pipelined_apsp(), cfg), InputError);
}

TEST_CASE("program lookup") {
  CHECK(program_by_name("ecc")->name() == "ecc");
  CHECK_THROWS_AS(program_by_name("sssp"), InputError);
}
