#include <algorithm>
#include <random>
#include <sstream>

#include "cli_internal.hpp"
#include "congest/algorithms.hpp"
#include "congest/gadgets.hpp"

namespace congest::cli {

namespace {

using nlohmann::ordered_json;

// Exhaustive sweeps are used while 4^k stays at or below this.
constexpr std::uint64_t kExhaustiveLimit = 4096;

BitVector from_mask(std::uint64_t mask, std::size_t k) {
  BitVector v(k);
  for (std::size_t p = 1; p <= k; ++p) v.set(p, (mask >> (p - 1)) & 1U);
  return v;
}

// Calls fn(x, y) for every pair when small enough, otherwise for `trials` random pairs.
template <class Fn>
void for_each_input(std::size_t k, std::uint64_t trials, std::mt19937_64& rng, Fn&& fn) {
  if (trials == 0 && 2 * k < 64 && (1ULL << (2 * k)) <= kExhaustiveLimit) {
    for (std::uint64_t mx = 0; mx < (1ULL << k); ++mx)
      for (std::uint64_t my = 0; my < (1ULL << k); ++my) fn(from_mask(mx, k), from_mask(my, k));
    return;
  }
  if (trials == 0) trials = 100;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto x = random_bits(k, rng);
    const auto y = random_bits(k, rng);
    fn(x, y);
  }
}

std::vector<std::uint32_t> node_counts(const VerifyOptions& o, std::uint32_t fallback) {
  if (o.n_range.second != 0) {
    std::vector<std::uint32_t> ns;
    for (auto n = o.n_range.first; n <= o.n_range.second; ++n) ns.push_back(n);
    return ns;
  }
  return {o.n ? o.n : fallback};
}

std::string describe(std::uint32_t n, const BitVector& x, const BitVector& y) {
  return "n=" + std::to_string(n) + " x=" + x.to_string() + " y=" + y.to_string();
}

VerifyReport apsp_prop(const VerifyOptions& o) {
  VerifyReport r{"apsp-prop"};
  std::mt19937_64 rng(o.seed);
  std::uint32_t max_diameter = 0;
  for (auto n : node_counts(o, 8)) {
    const auto p = apsp_params(n);
    for_each_input(p.k, o.trials, rng, [&](const BitVector& x, const BitVector& y) {
      ++r.instances;
      const auto g = build_apsp_gadget(n, x, y);
      const auto dm = apsp_oracle(g);
      max_diameter = std::max(max_diameter, distance_params(dm).diameter);
      const auto id = describe(n, x, y);
      for (std::uint32_t i = 1; i <= p.s; ++i) {
        for (std::uint32_t j = i + 1; j <= p.s; ++j) {
          const auto q = pair_to_index(i, j, p.s);
          const std::uint32_t want = x.at(q) && y.at(q) ? 3 : 2;
          const auto got = dm.at(g.node(Role::a(i)), g.node(Role::b(j))).value();
          r.check(got == want,
                  id + " d(A(" + std::to_string(i) + "),B(" + std::to_string(j) + "))", want,
                  got);
        }
      }
      const auto want = intersection_size(x, y);
      const auto got = decode_apsp(dm, g);
      r.check(got == want, id + " decode_apsp", want, got);
    });
  }
  r.details["max_diameter"] = max_diameter;
  return r;
}

VerifyReport ecc_exact(const VerifyOptions& o) {
  VerifyReport r{"ecc-exact"};
  std::mt19937_64 rng(o.seed);
  const auto ell = o.ell;
  std::uint32_t max_diameter = 0;
  for (auto n : node_counts(o, 31 * ell - 8)) {
    const auto p = ecc_params(n, ell);
    for_each_input(p.k, o.trials, rng, [&](const BitVector& x, const BitVector& y) {
      ++r.instances;
      const auto g = build_ecc_gadget(n, ell, x, y);
      const auto dm = apsp_oracle(g);
      const auto params = distance_params(dm);
      max_diameter = std::max(max_diameter, params.diameter);
      const auto id = describe(n, x, y) + " ell=" + std::to_string(ell);
      for (std::uint32_t q = 1; q <= p.k; ++q) {
        const NodeId a = g.node(Role::a(q));
        const std::uint32_t want = x.at(q) && y.at(q) ? 3 * ell + 1 : 5 * ell + 1;
        r.check(params.eccentricities[a] == want, id + " e(A(" + std::to_string(q) + "))",
                want, params.eccentricities[a]);
        if (ell != 1) continue;
        const NodeId far = g.node(Role::b_double_prime(q));
        for (NodeId v = 0; v < g.node_count(); ++v) {
          const std::uint32_t bound = v == far ? 6 : 5;
          const auto d = dm.at(a, v).value();
          if (d > bound) {
            r.check(false, id + " d(A(" + std::to_string(q) + ")," + std::to_string(v) + ")",
                    "<= " + std::to_string(bound), d);
          }
        }
      }
      const auto want = intersection_size(x, y);
      const auto got = decode_ecc(params.eccentricities, g, ell);
      r.check(got == want, id + " decode_ecc", want, got);
    });
  }
  r.details["max_diameter"] = max_diameter;
  return r;
}

VerifyReport ecc_approx(const VerifyOptions& o) {
  VerifyReport r{"ecc-approx"};
  const double eps = o.eps > 0 ? o.eps : 0.1;
  const auto ell = choose_ell(eps);
  const auto n = o.n ? o.n : 31 * ell - 8;
  const auto p = ecc_params(n, ell);
  const auto trials = o.trials ? o.trials : 1000;
  const double factor = 5.0 / 3.0 - eps;
  std::mt19937_64 rng(o.seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++r.instances;
    const auto x = random_bits(p.k, rng);
    const auto y = random_bits(p.k, rng);
    const auto g = build_ecc_gadget(n, ell, x, y);
    const auto exact = distance_params(apsp_oracle(g)).eccentricities;
    // Adversarial estimates: either end of the allowed band, or a point inside it.
    std::vector<double> est(exact.size());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t v = 0; v < exact.size(); ++v) {
      const double hi = exact[v], lo = hi / factor;
      switch (rng() % 3) {
        case 0: est[v] = lo; break;
        case 1: est[v] = hi; break;
        default: est[v] = lo + (hi - lo) * unit(rng); break;
      }
    }
    const auto id = describe(n, x, y) + " trial=" + std::to_string(t);
    const auto want = intersection_size(x, y);
    try {
      const auto got = decode_ecc_approx(est, g, ell, eps, std::span<const std::uint32_t>(exact));
      r.check(got == want, id, want, got);
    } catch (const ContractViolation& e) {
      r.check(false, id, want, e.what());
    }
  }
  r.details = {{"eps", eps}, {"ell", ell}, {"n", n}, {"k", p.k}};
  return r;
}

VerifyReport thresholds(const VerifyOptions& o) {
  VerifyReport r{"thresholds"};
  std::vector<double> grid;
  if (o.eps > 0) {
    grid.push_back(o.eps);
  } else {
    for (int t = 1; t <= 66; ++t) grid.push_back(0.01 * t);
  }
  auto rows = ordered_json::array();
  for (double eps : grid) {
    ++r.instances;
    const auto ell = choose_ell(eps);
    const auto th = approx_thresholds(ell, eps);
    std::ostringstream id;
    id << "eps=" << eps << " ell=" << ell;
    const double low = 3.0 * ell + 1, high = (5.0 * ell + 1) / (5.0 / 3.0 - eps);
    r.check(th.low == low && th.high == high, id.str() + " values",
            ordered_json{{"low", low}, {"high", high}}, ordered_json{{"low", th.low}, {"high", th.high}});
    r.check(th.low < th.high, id.str() + " low < high", "low < high",
            ordered_json{{"low", th.low}, {"high", th.high}});
    rows.push_back({{"eps", eps}, {"ell", ell}, {"low", th.low}, {"high", th.high}});
  }
  r.details["thresholds"] = std::move(rows);
  return r;
}

VerifyReport sim_vs_oracle(const VerifyOptions& o) {
  VerifyReport r{"sim-vs-oracle"};
  const auto range = o.n_range.second ? o.n_range
                     : o.n            ? std::pair{o.n, o.n}
                                      : std::pair<std::uint32_t, std::uint32_t>{2, 60};
  const auto trials = o.trials ? o.trials : 20;
  std::mt19937_64 rng(o.seed);
  std::uint32_t max_rounds = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++r.instances;
    const auto n = range.first + static_cast<std::uint32_t>(rng() % (range.second - range.first + 1));
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto m = std::min<std::uint64_t>(max_m, n - 1 + rng() % (2 * n + 1));
    const auto seed = rng();
    const auto g = random_connected_graph(n, m, seed);
    const auto id = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " seed=" + std::to_string(seed);
    const auto dm = apsp_oracle(g);
    const auto diameter = distance_params(dm).diameter;
    SimConfig cfg;
    cfg.max_rounds = 16 * n + 64;
    try {
      const auto res = run(g, *pipelined_apsp(), cfg);
      max_rounds = std::max(max_rounds, res.rounds_used);
      std::uint64_t mismatched = 0;
      for (NodeId u = 0; u < n; ++u) {
        std::vector<std::uint32_t> want;
        for (auto h : dm.row(u)) want.push_back(h.value());
        mismatched += res.outputs[u].vectors.at("distances") != want;
      }
      r.check(mismatched == 0, id + " distances", "0 mismatched nodes", mismatched);
      const auto budget = 6 * n + 6 * diameter;
      r.check(res.rounds_used <= budget, id + " rounds", "<= " + std::to_string(budget),
              res.rounds_used);
    } catch (const std::runtime_error& e) {
      r.check(false, id, "clean run", e.what());
    }
  }
  r.details["max_rounds_used"] = max_rounds;
  return r;
}

}  // namespace

ordered_json VerifyReport::to_json(const std::vector<std::string>& invocation) const {
  auto fails = ordered_json::array();
  for (const auto& f : failures) {
    fails.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"command", "verify"}, {"invocation", invocation}, {"suite", suite},
          {"instances", instances}, {"passed", failures.empty()},
          {"failures", std::move(fails)}, {"details", details}};
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon != std::string::npos) {
      std::size_t used_a = 0, used_b = 0;
      const auto a = std::stoul(text.substr(0, colon), &used_a);
      const auto b = std::stoul(text.substr(colon + 1), &used_b);
      if (used_a == colon && used_b == text.size() - colon - 1 && a <= b && b > 0) {
        return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
      }
    }
  } catch (const std::exception&) {
  }
  throw InputError("--n-range must look like a:b with a <= b, got '" + text + "'");
}

VerifyReport verify_suite(const VerifyOptions& o) {
  if (o.suite == "apsp-prop") return apsp_prop(o);
  if (o.suite == "ecc-exact") return ecc_exact(o);
  if (o.suite == "ecc-approx") return ecc_approx(o);
  if (o.suite == "thresholds") return thresholds(o);
  if (o.suite == "sim-vs-oracle") return sim_vs_oracle(o);
  throw InputError("unknown suite '" + o.suite + "'");
}

}  // namespace congest::cli
