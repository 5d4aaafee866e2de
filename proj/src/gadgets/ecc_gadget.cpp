#include <bit>
#include <cmath>
#include <string>

#include "congest/gadgets.hpp"
#include "decoder_access.hpp"

namespace congest {

namespace {

// floor(log2(k - 1)) + 1, the number of bits needed to write 0..k-1.
std::uint32_t helper_bits(std::uint64_t k) {
  return static_cast<std::uint32_t>(std::bit_width(k - 1));
}

std::uint32_t min_nodes_for(std::uint32_t ell) { return 31 * ell - 8; }

}  // namespace

std::uint64_t ecc_worst_case_nodes(std::uint64_t k, std::uint32_t ell) {
  if (k < 2) throw InputError("eccentricity gadget requires k >= 2");
  const std::uint64_t s = helper_bits(k);
  return 3 * k + 4 * s + 6 + static_cast<std::uint64_t>(ell - 1) * (3 * k + 2 * k * s + 4 + 2 * k);
}

std::uint64_t EccGadgetParams::n_prime(std::uint64_t x_weight, std::uint64_t y_weight) const {
  const std::uint64_t kk = k, ss = s;
  return 3 * kk + 4 * ss + 6 +
         static_cast<std::uint64_t>(ell - 1) * (3 * kk + 2 * kk * ss + 4 + x_weight + y_weight);
}

EccGadgetParams ecc_params(std::uint32_t n, std::uint32_t ell) {
  if (ell < 1) throw InputError("subdivision length ell must be >= 1");
  if (n < min_nodes_for(ell)) {
    throw InputError("eccentricity gadget requires n >= 31*ell - 8 = " +
                     std::to_string(min_nodes_for(ell)) + " (n=" + std::to_string(n) +
                     ", ell=" + std::to_string(ell) + ")");
  }
  std::uint64_t k = 2;
  while (ecc_worst_case_nodes(k + 1, ell) <= n) ++k;
  if (ecc_worst_case_nodes(k, ell) > n) {
    throw InputError("n=" + std::to_string(n) + " too small for any k >= 2");
  }
  EccGadgetParams p;
  p.n = n;
  p.ell = ell;
  p.k = static_cast<std::uint32_t>(k);
  p.s = helper_bits(k);
  return p;
}

std::size_t ecc_cut_size(std::uint32_t s) { return 2 * static_cast<std::size_t>(s) + 1; }

LabeledGraph build_ecc_gadget(std::uint32_t n, std::uint32_t ell, const BitVector& x,
                              const BitVector& y) {
  const auto params = ecc_params(n, ell);
  const std::uint32_t k = params.k, s = params.s;
  if (x.size() != k || y.size() != k) {
    throw InputError("eccentricity gadget with n=" + std::to_string(n) + ", ell=" +
                     std::to_string(ell) + " needs |x| = |y| = k = " + std::to_string(k) +
                     ", got " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  const std::uint64_t n_prime = params.n_prime(x.count(), y.count());
  if (n_prime > n) throw std::logic_error("eccentricity gadget overflows its node budget");
  const std::uint32_t padding = static_cast<std::uint32_t>(n - n_prime);
  const std::uint32_t base = 3 * k + 4 * s + 6;

  LabeledGraph g(base + padding);
  NodeId next = 0;
  auto place = [&](Role role, Side side) {
    const NodeId id = next++;
    g.assign_role(id, role);
    g.set_side(id, side);
    return id;
  };
  for (std::uint32_t p = 1; p <= k; ++p) place(Role::a(p), Side::Alice);
  for (std::uint32_t i = 1; i <= s; ++i) {
    place(Role::a_helper(i, 0), Side::Alice);
    place(Role::a_helper(i, 1), Side::Alice);
  }
  for (std::uint32_t j = 1; j <= 3; ++j) place(Role::a_prime(j), Side::Alice);
  for (std::uint32_t p = 1; p <= k; ++p) place(Role::b(p), Side::Bob);
  for (std::uint32_t i = 1; i <= s; ++i) {
    place(Role::b_helper(i, 0), Side::Bob);
    place(Role::b_helper(i, 1), Side::Bob);
  }
  for (std::uint32_t j = 1; j <= 3; ++j) place(Role::b_prime(j), Side::Bob);
  for (std::uint32_t p = 1; p <= k; ++p) place(Role::b_double_prime(p), Side::Bob);
  for (std::uint32_t i = 1; i <= padding; ++i) place(Role::padding(i), Side::Alice);

  auto at = [&](Role r) { return g.node(r); };
  std::vector<Edge> stretched;
  auto stretch = [&](Role u, Role v) {
    g.add_edge(at(u), at(v));
    stretched.emplace_back(at(u), at(v));
  };

  for (std::uint32_t p = 1; p <= k; ++p) {
    for (std::uint32_t i = 1; i <= s; ++i) {
      const auto bit = static_cast<std::uint32_t>(bit_b(p, i));
      stretch(Role::a(p), Role::a_helper(i, bit));
    }
    stretch(Role::a(p), Role::a_prime(1));
    if (x.at(p)) stretch(Role::a(p), Role::a_prime(3));
  }
  stretch(Role::a_prime(1), Role::a_prime(2));
  stretch(Role::a_prime(2), Role::a_prime(3));

  for (std::uint32_t p = 1; p <= k; ++p) {
    for (std::uint32_t i = 1; i <= s; ++i) {
      const auto bit = static_cast<std::uint32_t>(bit_b(p, i));
      stretch(Role::b(p), Role::b_helper(i, bit));
    }
    stretch(Role::b(p), Role::b_prime(1));
    stretch(Role::b(p), Role::b_double_prime(p));
    if (y.at(p)) stretch(Role::b(p), Role::b_prime(3));
  }
  stretch(Role::b_prime(1), Role::b_prime(2));
  stretch(Role::b_prime(2), Role::b_prime(3));

  // Cut edges and padding attachments stay length 1.
  for (std::uint32_t i = 1; i <= s; ++i) {
    g.add_edge(at(Role::a_helper(i, 0)), at(Role::b_helper(i, 1)));
    g.add_edge(at(Role::a_helper(i, 1)), at(Role::b_helper(i, 0)));
  }
  g.add_edge(at(Role::a_prime(3)), at(Role::b_prime(3)));
  for (std::uint32_t i = 1; i <= padding; ++i) g.add_edge(at(Role::a_prime(1)), at(Role::padding(i)));

  auto out = subdivide_edges(g, stretched, ell);
  if (out.node_count() != n) throw std::logic_error("eccentricity gadget node count mismatch");
  return out;
}

std::uint64_t decode_ecc(std::span<const std::uint32_t> ecc, const LabeledGraph& graph,
                         std::uint32_t ell, AccessLog* log) {
  if (ecc.size() != graph.node_count()) {
    throw InputError("eccentricity vector size does not match the graph");
  }
  if (!graph.find(Role::a(1))) throw InputError("graph is missing eccentricity gadget role A(1)");
  const std::uint64_t threshold = 5ULL * ell + 1;
  std::uint64_t count = 0;
  for (std::uint32_t p = 1;; ++p) {
    const auto ap = graph.find(Role::a(p));
    if (!ap) break;
    detail::note_alice_read(graph, *ap, log);
    if (ecc[*ap] < threshold) ++count;
  }
  return count;
}

std::uint32_t choose_ell(double eps) {
  if (!(eps > 0.0 && eps < 2.0 / 3.0)) {
    throw InputError("eps must satisfy 0 < eps < 2/3, got " + std::to_string(eps));
  }
  return static_cast<std::uint32_t>(std::ceil(2.0 / (9.0 * eps)));
}

ApproxThresholds approx_thresholds(std::uint32_t ell, double eps) {
  if (ell < 1) throw InputError("ell must be >= 1");
  if (!(eps > 0.0 && eps < 2.0 / 3.0)) {
    throw InputError("eps must satisfy 0 < eps < 2/3, got " + std::to_string(eps));
  }
  return {3.0 * ell + 1.0, (5.0 * ell + 1.0) / (5.0 / 3.0 - eps)};
}

std::uint64_t decode_ecc_approx(std::span<const double> est, const LabeledGraph& graph,
                                std::uint32_t ell, double eps,
                                std::optional<std::span<const std::uint32_t>> exact,
                                AccessLog* log) {
  if (est.size() != graph.node_count()) {
    throw InputError("estimate vector size does not match the graph");
  }
  if (exact && exact->size() != graph.node_count()) {
    throw InputError("exact eccentricity vector size does not match the graph");
  }
  if (!graph.find(Role::a(1))) throw InputError("graph is missing eccentricity gadget role A(1)");
  const double ratio = 5.0 / 3.0 - eps;
  const double low = approx_thresholds(ell, eps).low;
  std::uint64_t count = 0;
  for (std::uint32_t p = 1;; ++p) {
    const auto ap = graph.find(Role::a(p));
    if (!ap) break;
    detail::note_alice_read(graph, *ap, log);
    const double e_hat = est[*ap];
    if (exact) {
      const double e = (*exact)[*ap];
      // Slack absorbs rounding in e / ratio only.
      constexpr double kSlack = 1e-9;
      if (e_hat < e / ratio - kSlack || e_hat > e + kSlack) {
        throw ContractViolation("estimate " + std::to_string(e_hat) + " for A(" +
                                std::to_string(p) + ") outside [" + std::to_string(e / ratio) +
                                ", " + std::to_string(e) + "]");
      }
    }
    if (e_hat <= low) ++count;
  }
  return count;
}

}  // namespace congest
