#include "congest/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cli_internal.hpp"
#include "congest/algorithms.hpp"
#include "congest/gadgets.hpp"
#include "congest/graph_io.hpp"
#include "congest/report.hpp"

namespace congest {

namespace {

using nlohmann::ordered_json;

struct GenArgs {
  std::string kind;
  std::uint32_t n = 0;
  std::uint32_t ell = 1;
  std::uint32_t d = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::string x, y;
  std::string out;
  bool dot = false;
};

struct OracleArgs {
  std::string graph;
  std::string roles;
  bool matrix = false;
};

struct RunArgs {
  std::string program;
  std::string graph;
  std::string roles;
  std::uint32_t beta = 4;
  std::uint32_t max_rounds = 0;
  std::uint64_t seed = 0;
  bool cut = false;
  bool check_oracle = false;
  bool serial = false;
};

ordered_json base_report(const std::string& command, const std::vector<std::string>& args) {
  return ordered_json{{"command", command}, {"invocation", args}};
}

BitVector bits_arg(const std::string& name, const std::string& text, std::size_t k,
                   std::mt19937_64& rng) {
  if (text.empty()) throw InputError("--" + name + " is required");
  if (text == "random") return random_bits(k, rng);
  return BitVector::parse(text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_gen(const GenArgs& a, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (a.out.empty()) throw InputError("--out PREFIX is required");
  std::mt19937_64 rng(a.seed);
  LabeledGraph g;
  ordered_json meta{{"kind", a.kind}};

  if (a.kind == "apsp") {
    const auto p = apsp_params(a.n);
    const auto x = bits_arg("x", a.x, p.k, rng);
    const auto y = bits_arg("y", a.y, p.k, rng);
    g = build_apsp_gadget(a.n, x, y);
    meta.update({{"n", a.n}, {"s", p.s}, {"k", p.k}, {"x", x.to_string()}, {"y", y.to_string()}});
  } else if (a.kind == "ecc") {
    const auto p = ecc_params(a.n, a.ell);
    const auto x = bits_arg("x", a.x, p.k, rng);
    const auto y = bits_arg("y", a.y, p.k, rng);
    g = build_ecc_gadget(a.n, a.ell, x, y);
    meta.update({{"n", a.n},
                 {"ell", a.ell},
                 {"s", p.s},
                 {"k", p.k},
                 {"x", x.to_string()},
                 {"y", y.to_string()}});
  } else if (a.kind == "line") {
    g = build_line(a.d);
    meta["d"] = a.d;
  } else {
    g = random_connected_graph(a.n, a.m, a.seed);
    meta.update({{"n", a.n}, {"m", a.m}, {"seed", a.seed}});
  }

  std::ostringstream edges, dot;
  write_edge_list(edges, g);
  const auto sidecar = roles_to_json(g, {{"gadget", meta}});
  ordered_json files{{"edges", a.out + ".edges"}, {"roles", a.out + ".roles.json"}};
  write_file(a.out + ".edges", edges.str());
  write_file(a.out + ".roles.json", sidecar.dump(2) + "\n");
  if (a.dot) {
    write_dot(dot, g);
    files["dot"] = a.out + ".dot";
    write_file(a.out + ".dot", dot.str());
  }

  auto report = base_report("gen", args);
  report["gadget"] = meta;
  report["nodes"] = g.node_count();
  report["edges"] = g.edge_count();
  report["files"] = files;
  out << report.dump(2) << "\n";
  err << "gen " << a.kind << ": " << g.node_count() << " nodes, " << g.edge_count()
      << " edges -> " << a.out << ".edges\n";
  return kExitOk;
}

LabeledGraph load_graph(const std::string& graph_path, const std::string& roles_path,
                        std::optional<nlohmann::json>& sidecar) {
  auto g = load_edge_list_file(graph_path);
  if (!roles_path.empty()) {
    sidecar = load_json_file(roles_path);
    apply_roles_json(g, *sidecar);
  }
  return g;
}

const nlohmann::json* gadget_meta(const std::optional<nlohmann::json>& sidecar) {
  if (!sidecar || !sidecar->contains("gadget")) return nullptr;
  return &sidecar->at("gadget");
}

int cmd_oracle(const OracleArgs& a, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  std::optional<nlohmann::json> sidecar;
  const auto g = load_graph(a.graph, a.roles, sidecar);
  const auto dm = apsp_oracle(g);
  const auto params = distance_params(dm);

  auto report = base_report("oracle", args);
  report["nodes"] = g.node_count();
  report["edges"] = g.edge_count();
  report["eccentricities"] = params.eccentricities;
  report["diameter"] = params.diameter;
  report["radius"] = params.radius;
  if (a.matrix) {
    auto rows = ordered_json::array();
    for (NodeId u = 0; u < g.node_count(); ++u) {
      std::vector<std::uint32_t> row;
      for (auto h : dm.row(u)) row.push_back(h.value());
      rows.push_back(row);
    }
    report["distances"] = std::move(rows);
  }
  if (const auto* meta = gadget_meta(sidecar)) {
    try {
      const auto kind = meta->at("kind").get<std::string>();
      std::optional<std::size_t> truth;
      if (meta->contains("x") && meta->contains("y")) {
        truth = intersection_size(BitVector::parse(meta->at("x").get<std::string>()),
                                  BitVector::parse(meta->at("y").get<std::string>()));
      }
      if (kind == "apsp") {
        report["decode_apsp"] = decode_apsp(dm, g);
      } else if (kind == "ecc") {
        report["decode_ecc"] =
            decode_ecc(params.eccentricities, g, meta->at("ell").get<std::uint32_t>());
      }
      if (truth && (kind == "apsp" || kind == "ecc")) report["intersection_size"] = *truth;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed gadget metadata: ") + e.what());
    }
  }
  out << report.dump(2) << "\n";
  err << "oracle: n=" << g.node_count() << " diameter=" << params.diameter
      << " radius=" << params.radius << "\n";
  return kExitOk;
}

int cmd_run(const RunArgs& a, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::optional<nlohmann::json> sidecar;
  const auto g = load_graph(a.graph, a.roles, sidecar);
  if (a.cut && !g.has_full_side_map()) {
    throw InputError("--cut needs a role sidecar declaring a side for every node");
  }
  const auto n = g.node_count();
  SimConfig cfg;
  cfg.beta = a.beta;
  cfg.max_rounds = a.max_rounds ? a.max_rounds : 16 * n + 64;
  cfg.seed = a.seed;
  cfg.parallel = !a.serial;
  const auto program = program_by_name(a.program);

  auto report = base_report("run", args);
  report["program"] = a.program;
  report["nodes"] = n;
  report["beta"] = a.beta;

  SimResult result;
  try {
    result = run(g, *program, cfg);
  } catch (const BandwidthViolation& e) {
    report["error"] = {{"type", "bandwidth_violation"}, {"round", e.round}, {"from", e.from},
                       {"to", e.to}, {"bits", e.bits}, {"limit", e.limit}};
    out << report.dump(2) << "\n";
    err << "run " << a.program << ": " << e.what() << "\n";
    return kExitFailure;
  } catch (const SimTimeout& e) {
    report["error"] = {{"type", "timeout"}, {"max_rounds", e.max_rounds},
                       {"unhalted", e.unhalted}, {"partial", sim_to_json(e.partial)}};
    out << report.dump(2) << "\n";
    err << "run " << a.program << ": " << e.what() << "\n";
    return kExitFailure;
  }

  std::optional<CutReport> cut;
  if (a.cut) cut = cut_report(result, g);
  const auto sim = sim_to_json(result, cut);
  for (const auto& [key, value] : sim.items()) report[key] = value;

  bool ok = true;
  if (a.check_oracle) {
    const auto dm = apsp_oracle(g);
    const auto params = distance_params(dm);
    std::uint64_t mismatches = 0;
    for (NodeId u = 0; u < n; ++u) {
      const auto& o = result.outputs[u];
      if (a.program == "apsp") {
        std::vector<std::uint32_t> want;
        for (auto h : dm.row(u)) want.push_back(h.value());
        mismatches += o.vectors.at("distances") != want;
      } else {
        mismatches += o.scalars.at("ecc") != params.eccentricities[u] ||
                      o.scalars.at("diameter") != params.diameter ||
                      o.scalars.at("radius") != params.radius;
      }
    }
    const std::uint64_t budget = 6ULL * n + 6ULL * params.diameter;
    const bool in_budget = result.rounds_used <= budget;
    ok = mismatches == 0 && in_budget;
    report["check_oracle"] = {{"ok", ok},
                              {"mismatched_nodes", mismatches},
                              {"round_budget", budget},
                              {"within_budget", in_budget}};
  }
  out << report.dump(2) << "\n";
  err << "run " << a.program << ": n=" << n << " rounds=" << result.rounds_used
      << " B=" << result.bandwidth_bits;
  if (cut) err << " cut_bits=" << cut->total_cross_bits;
  if (a.check_oracle) err << (ok ? " oracle=match" : " oracle=MISMATCH");
  err << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const cli::VerifyOptions& opts, const std::vector<std::string>& args,
               std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const auto report = cli::verify_suite(opts);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out << report.to_json(args).dump(2) << "\n";
  err << "verify " << report.suite << ": " << report.instances - report.failures.size() << "/"
      << report.instances << " passed in " << elapsed.count() << " s\n";
  for (const auto& f : report.failures) {
    err << "  FAIL " << f.instance << ": expected " << f.expected.dump() << ", got "
        << f.got.dump() << "\n";
  }
  return report.failures.empty() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CONGEST simulator and reduction-gadget laboratory", "congest-lab"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a gadget or test graph");
  gen_cmd->add_option("kind", gen.kind, "apsp | ecc | line | random")
      ->required()
      ->check(CLI::IsMember({"apsp", "ecc", "line", "random"}));
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--ell", gen.ell, "Subdivision length (ecc)")->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "Line length (line)");
  gen_cmd->add_option("--m", gen.m, "Edge count (random)");
  gen_cmd->add_option("--x", gen.x, "Alice's bits, x_1 first, or 'random'");
  gen_cmd->add_option("--y", gen.y, "Bob's bits, y_1 first, or 'random'");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random bits or graphs")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output prefix for .edges / .roles.json / .dot");
  gen_cmd->add_flag("--dot", gen.dot, "Also write a Graphviz file");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact distances by sequential BFS");
  oracle_cmd->add_option("--graph", oracle.graph, "Edge-list file")->required();
  oracle_cmd->add_option("--roles", oracle.roles, "Role sidecar (enables decoding)");
  oracle_cmd->add_flag("--matrix", oracle.matrix, "Include the full distance matrix");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Simulate a distributed program");
  run_cmd->add_option("program", run_args.program, "apsp | ecc")
      ->required()
      ->check(CLI::IsMember({"apsp", "ecc"}));
  run_cmd->add_option("--graph", run_args.graph, "Edge-list file")->required();
  run_cmd->add_option("--roles", run_args.roles, "Role sidecar");
  run_cmd->add_option("--beta", run_args.beta, "Bandwidth multiplier")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-rounds", run_args.max_rounds, "Round budget (default 16n+64)");
  run_cmd->add_option("--seed", run_args.seed, "Program seed")->capture_default_str();
  run_cmd->add_flag("--cut", run_args.cut, "Report traffic across the Alice/Bob cut");
  run_cmd->add_flag("--check-oracle", run_args.check_oracle,
                    "Compare outputs with the oracle and the 6n+6D round budget");
  run_cmd->add_flag("--serial", run_args.serial, "Compute nodes on one thread");

  cli::VerifyOptions verify;
  std::string n_range;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant sweep");
  verify_cmd->add_option("suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"apsp-prop", "ecc-exact", "ecc-approx", "thresholds",
                             "sim-vs-oracle"}));
  verify_cmd->add_option("--trials", verify.trials, "Random instances (0: suite default)");
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--n", verify.n, "Single node count");
  verify_cmd->add_option("--n-range", n_range, "Node-count range a:b");
  verify_cmd->add_option("--ell", verify.ell)->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--eps", verify.eps, "Approximation slack, 0 < eps < 2/3");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, args, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, args, out, err);
    if (*run_cmd) return cmd_run(run_args, args, out, err);
    if (!n_range.empty()) verify.n_range = cli::parse_range(n_range);
    return cmd_verify(verify, args, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace congest
