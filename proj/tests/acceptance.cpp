// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "congest/algorithms.hpp"
#include "congest/gadgets.hpp"
#include "congest/report.hpp"

using namespace congest;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Instance {
  LabeledGraph graph;
  enum Kind { Apsp, Ecc, Random } kind;
  std::uint32_t cut_s = 0;  // s in the cut bound; unused for random graphs
  std::string label;
};

BitVector from_mask(std::uint32_t mask, std::size_t k) {
  BitVector v(k);
  for (std::size_t p = 1; p <= k; ++p) v.set(p, (mask >> (p - 1)) & 1U);
  return v;
}

std::string bits_label(const BitVector& x, const BitVector& y) {
  return "x=" + x.to_string() + " y=" + y.to_string();
}

class Criterion {
 public:
  Criterion(int id, std::string title, double limit_s) : id_(id), title_(std::move(title)), limit_s_(limit_s) {}

  void fail(const std::string& why) {
    if (first_failure_.empty()) first_failure_ = why;
    ++failures_;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    if (!ok) fail(why());
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  template <class Fn>
  bool run(Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body(*this);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (limit_s_ > 0 && elapsed.count() >= limit_s_) {
      std::ostringstream msg;
      msg << "runtime " << elapsed.count() << " s exceeds " << limit_s_ << " s";
      fail(msg.str());
    }
    const bool ok = failures_ == 0;
    std::ostringstream line;
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " [" << id_ << "] " << title_ << " (" << std::fixed
         << elapsed.count() << " s";
    if (!notes_.empty()) line << "; " << notes_;
    line << ")";
    if (!ok) line << " -- " << failures_ << " failure(s), first: " << first_failure_;
    std::cout << line.str() << std::endl;
    return ok;
  }

 private:
  int id_;
  std::string title_;
  double limit_s_;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
  std::string notes_;
};

}  // namespace

int main() {
  bool all = true;
  std::vector<Instance> apsp_gadgets, ecc_gadgets;
  std::uint32_t apsp_max_diameter = 0, ecc1_max_diameter = 0;

  all &= Criterion(1, "APSP gadget distance law, n=8, all 64 inputs", 1.0).run([&](Criterion& c) {
    const auto p = apsp_params(8);
    c.expect(p.k == 3, [&] { return "k=" + std::to_string(p.k); });
    std::uint32_t checked = 0;
    for (std::uint32_t mx = 0; mx < 8; ++mx) {
      for (std::uint32_t my = 0; my < 8; ++my) {
        const auto x = from_mask(mx, 3), y = from_mask(my, 3);
        const auto g = build_apsp_gadget(8, x, y);
        const auto dm = apsp_oracle(g);
        for (std::uint32_t i = 1; i <= p.s; ++i) {
          for (std::uint32_t j = i + 1; j <= p.s; ++j) {
            const auto q = pair_to_index(i, j, p.s);
            const std::uint32_t want = x.at(q) && y.at(q) ? 3 : 2;
            const auto got = dm.at(g.node(Role::a(i)), g.node(Role::b(j))).value();
            ++checked;
            c.expect(got == want, [&] {
              return bits_label(x, y) + " d(A(" + std::to_string(i) + "),B(" + std::to_string(j) +
                     "))=" + std::to_string(got);
            });
          }
        }
      }
    }
    c.note(std::to_string(checked) + " distances");
  });

  all &= Criterion(2, "APSP decoder equals |x & y|, n in 5..40, 200 random inputs", 10.0).run([&](Criterion& c) {
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::uint32_t>(5 + t % 36);  // every n appears
      const auto p = apsp_params(n);
      const auto x = random_bits(p.k, rng), y = random_bits(p.k, rng);
      auto g = build_apsp_gadget(n, x, y);
      const auto dm = apsp_oracle(g);
      const auto got = decode_apsp(dm, g);
      const auto want = intersection_size(x, y);
      c.expect(got == want, [&] {
        return "n=" + std::to_string(n) + " decoded " + std::to_string(got) + ", want " + std::to_string(want);
      });
      apsp_max_diameter = std::max(apsp_max_diameter, distance_params(dm).diameter);
      apsp_gadgets.push_back({std::move(g), Instance::Apsp, p.s, "apsp n=" + std::to_string(n)});
    }
  });

  all &= Criterion(3, "Eccentricity law at n=23,54,85 (ell=1,2,3), all 64 inputs each", 30.0).run([&](Criterion& c) {
    for (std::uint32_t ell = 1; ell <= 3; ++ell) {
      const std::uint32_t n = 31 * ell - 8;
      const auto p = ecc_params(n, ell);
      c.expect(p.k == 3, [&] { return "ell=" + std::to_string(ell) + " k=" + std::to_string(p.k); });
      for (std::uint32_t mx = 0; mx < 8; ++mx) {
        for (std::uint32_t my = 0; my < 8; ++my) {
          const auto x = from_mask(mx, 3), y = from_mask(my, 3);
          auto g = build_ecc_gadget(n, ell, x, y);
          const auto dm = apsp_oracle(g);
          const auto params = distance_params(dm);
          for (std::uint32_t q = 1; q <= 3; ++q) {
            const NodeId a = g.node(Role::a(q));
            const std::uint32_t want = x.at(q) && y.at(q) ? 3 * ell + 1 : 5 * ell + 1;
            c.expect(params.eccentricities[a] == want, [&] {
              return "ell=" + std::to_string(ell) + " " + bits_label(x, y) + " e(A(" + std::to_string(q) +
                     "))=" + std::to_string(params.eccentricities[a]);
            });
            if (ell != 1) continue;
            const NodeId far = g.node(Role::b_double_prime(q));
            for (NodeId v = 0; v < n; ++v) {
              const auto d = dm.at(a, v).value();
              c.expect(d <= (v == far ? 6U : 5U), [&] {
                return bits_label(x, y) + " d(A(" + std::to_string(q) + ")," + std::to_string(v) +
                       ")=" + std::to_string(d);
              });
            }
          }
          if (ell == 1) ecc1_max_diameter = std::max(ecc1_max_diameter, params.diameter);
          ecc_gadgets.push_back({std::move(g), Instance::Ecc, 2 * p.s + 1,
                                 "ecc ell=" + std::to_string(ell) + " " + bits_label(x, y)});
        }
      }
    }
  });

  all &= Criterion(4, "Approximation thresholds for eps=0.01..0.66; approx decoder, 1000 trials at eps=0.1", 10.0)
             .run([&](Criterion& c) {
               for (int t = 1; t <= 66; ++t) {
                 const double eps = 0.01 * t;
                 const auto ell = static_cast<std::uint32_t>(std::ceil(2.0 / (9.0 * eps)));
                 c.expect(choose_ell(eps) == ell, [&] { return "choose_ell(" + std::to_string(eps) + ")"; });
                 const double low = 3.0 * ell + 1, high = (5.0 * ell + 1) / (5.0 / 3.0 - eps);
                 c.expect(low < high, [&] { return "eps=" + std::to_string(eps) + " low >= high"; });
               }

               const double eps = 0.1;
               const auto ell = choose_ell(eps);
               const std::uint32_t n = 31 * ell - 8;
               const auto k = ecc_params(n, ell).k;
               const double factor = 5.0 / 3.0 - eps;
               std::mt19937_64 rng(kSeed + 4);
               std::uniform_real_distribution<double> unit(0.0, 1.0);
               for (int trial = 0; trial < 1000; ++trial) {
                 const auto x = random_bits(k, rng), y = random_bits(k, rng);
                 const auto g = build_ecc_gadget(n, ell, x, y);
                 const auto exact = distance_params(apsp_oracle(g)).eccentricities;
                 std::vector<double> est(exact.size());
                 for (std::size_t v = 0; v < exact.size(); ++v) {
                   const double hi = exact[v], lo = hi / factor;
                   switch (trial % 3) {
                     case 0:  // push each class toward the other's side
                       est[v] = exact[v] == 3 * ell + 1 ? hi : lo;
                       break;
                     case 1:
                       est[v] = lo + (hi - lo) * unit(rng);
                       break;
                     default:
                       est[v] = rng() & 1 ? lo : hi;
                       break;
                   }
                 }
                 const auto got = decode_ecc_approx(est, g, ell, eps, std::span<const std::uint32_t>(exact));
                 const auto want = intersection_size(x, y);
                 c.expect(got == want, [&] {
                   return "trial " + std::to_string(trial) + " decoded " + std::to_string(got) + ", want " +
                          std::to_string(want);
                 });
               }
               c.note("ell=" + std::to_string(ell) + ", n=" + std::to_string(n));
             });

  all &= Criterion(5, "Constant diameter: APSP gadgets <= 4, ell=1 eccentricity gadgets <= 6", 0).run([&](Criterion& c) {
    c.expect(!apsp_gadgets.empty() && !ecc_gadgets.empty(), [] { return "criteria 2/3 produced no gadgets"; });
    c.expect(apsp_max_diameter <= 4, [&] { return "APSP max diameter " + std::to_string(apsp_max_diameter); });
    c.expect(ecc1_max_diameter <= 6, [&] { return "ecc max diameter " + std::to_string(ecc1_max_diameter); });
    c.note("observed " + std::to_string(apsp_max_diameter) + " and " + std::to_string(ecc1_max_diameter));
  });

  // Criterion 6 workload: 50 seeded random graphs plus every gadget above.
  std::vector<Instance> workload;
  {
    std::mt19937_64 rng(kSeed + 6);
    for (int t = 0; t < 50; ++t) {
      const auto n = static_cast<std::uint32_t>(2 + rng() % 99);
      const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
      const auto m = std::min<std::uint64_t>(max_m, n - 1 + rng() % (3 * n));
      const auto seed = rng();
      workload.push_back({random_connected_graph(n, m, seed), Instance::Random, 0,
                          "random n=" + std::to_string(n) + " m=" + std::to_string(m)});
    }
    for (auto& inst : apsp_gadgets) workload.push_back(std::move(inst));
    for (auto& inst : ecc_gadgets) workload.push_back(std::move(inst));
  }

  std::vector<std::string> reports_first;
  std::vector<SimResult> results;
  std::vector<std::optional<CutReport>> cuts;
  all &= Criterion(6, "Pipelined APSP equals the oracle within 6n+6D rounds at beta=4", 120.0).run([&](Criterion& c) {
    std::uint32_t worst_ratio_n = 0, worst_rounds = 0;
    for (const auto& inst : workload) {
      const auto& g = inst.graph;
      const auto n = g.node_count();
      const auto dm = apsp_oracle(g);
      const auto diameter = distance_params(dm).diameter;
      SimConfig cfg;
      cfg.beta = 4;
      cfg.max_rounds = 16 * n + 64;
      cfg.seed = kSeed;
      auto result = run(g, *pipelined_apsp(), cfg);
      c.expect(result.rounds_used <= 6 * n + 6 * diameter, [&] {
        return inst.label + " rounds " + std::to_string(result.rounds_used);
      });
      for (NodeId u = 0; u < n; ++u) {
        const auto& got = result.outputs[u].vectors.at("distances");
        bool same = got.size() == n;
        for (NodeId v = 0; same && v < n; ++v) same = got[v] == dm.at(u, v).value();
        c.expect(same, [&] { return inst.label + " node " + std::to_string(u) + " distances differ"; });
      }
      if (result.rounds_used > worst_rounds) {
        worst_rounds = result.rounds_used;
        worst_ratio_n = n;
      }
      std::optional<CutReport> cut;
      if (inst.kind != Instance::Random) cut = cut_report(result, g);
      reports_first.push_back(sim_to_json(result, cut).dump());
      results.push_back(std::move(result));
      cuts.push_back(std::move(cut));
    }
    c.note(std::to_string(workload.size()) + " graphs, max rounds " + std::to_string(worst_rounds) +
           " at n=" + std::to_string(worst_ratio_n));
  });

  all &= Criterion(7, "Cut traffic <= rounds * s * B on every gadget run", 0).run([&](Criterion& c) {
    c.expect(results.size() == workload.size(), [] { return "criterion 6 did not complete"; });
    std::size_t runs = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& inst = workload[i];
      if (inst.kind == Instance::Random) continue;
      ++runs;
      const auto& cut = *cuts[i];
      c.expect(cut.cut_size == inst.cut_s, [&] {
        return inst.label + " cut has " + std::to_string(cut.cut_size) + " edges, want " + std::to_string(inst.cut_s);
      });
      const std::uint64_t bound =
          static_cast<std::uint64_t>(results[i].rounds_used) * inst.cut_s * results[i].bandwidth_bits;
      c.expect(cut.total_cross_bits <= bound, [&] {
        return inst.label + " crossed " + std::to_string(cut.total_cross_bits) + " bits > " + std::to_string(bound);
      });
    }
    c.note(std::to_string(runs) + " gadget runs");
  });

  all &= Criterion(8, "Repeating criterion 6 gives byte-identical JSON", 120.0).run([&](Criterion& c) {
    c.expect(reports_first.size() == workload.size(), [] { return "criterion 6 did not complete"; });
    for (std::size_t i = 0; i < reports_first.size(); ++i) {
      const auto& g = workload[i].graph;
      SimConfig cfg;
      cfg.beta = 4;
      cfg.max_rounds = 16 * g.node_count() + 64;
      cfg.seed = kSeed;
      const auto result = run(g, *pipelined_apsp(), cfg);
      std::optional<CutReport> cut;
      if (workload[i].kind != Instance::Random) cut = cut_report(result, g);
      c.expect(sim_to_json(result, cut).dump() == reports_first[i],
               [&] { return workload[i].label + " report differs"; });
    }
  });

  std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
