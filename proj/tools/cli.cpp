#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigrho/graph.hpp"
#include "sigrho/joins.hpp"
#include "sigrho/oracle.hpp"
#include "sigrho/sigma_rho.hpp"
#include "sigrho/solve.hpp"

namespace sigrho::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SigmaRhoSpec load_problem(const std::string& text, unsigned p) {
  const auto& names = SigmaRhoSpec::preset_names();
  if (std::find(names.begin(), names.end(), text) != names.end()) return SigmaRhoSpec::preset(text, p);
  return SigmaRhoSpec::parse(text);
}

struct Instance {
  Graph graph;
  TreeDecomposition td;
  bool td_given = false;
};

Instance load_instance(const std::string& graph_path, const std::string& td_path) {
  Instance inst;
  inst.graph = parse_graph(read_file(graph_path));
  if (!td_path.empty()) {
    inst.td = parse_td(read_file(td_path), inst.graph);
    inst.td_given = true;
  } else {
    inst.td = min_fill_heuristic(inst.graph);
  }
  return inst;
}

/// Picks naive or a fast join for "auto" by comparing work estimates for the
/// widest bag: pairs^k for the naive join against s^(k+1) * n * l * k.
JoinStrategy resolve_join(const std::string& name, const SigmaRhoSpec& spec, const Instance& inst) {
  const JoinStrategy fast = is_dominating_shaped(spec) ? JoinStrategy::fast_dominating : JoinStrategy::fast_general;
  if (name == "fast") return fast;
  if (name != "auto") return parse_join_strategy(name);
  const double k = inst.td.width() + 1;
  const double s = static_cast<double>(spec.num_labels());
  const double n = std::max<double>(1, static_cast<double>(inst.graph.n()));
  const double ell = std::max<double>(
      1, static_cast<double>(std::max(spec.layout(Side::sigma).modulus, spec.layout(Side::rho).modulus)));
  const double naive = std::pow(static_cast<double>(compatible_pairs(spec)), k);
  const double fast_cost = std::pow(s, k + 1) * n * ell * std::max(1.0, k);
  return fast_cost < naive ? fast : JoinStrategy::naive;
}

bool resolve_replacement(const std::string& flag, const SigmaRhoSpec& spec, JoinStrategy join) {
  if (flag == "on") return true;
  if (flag == "off") return false;
  return join != JoinStrategy::naive && has_replacement_property(spec);
}

nlohmann::json answer_json(const Answer& a) {
  nlohmann::json j;
  j["answer"] = a.to_string();
  j["feasible"] = a.feasible;
  j["size"] = a.size ? nlohmann::json(*a.size) : nlohmann::json(nullptr);
  j["count"] = a.count.str();
  return j;
}

struct SolveArgs {
  std::string problem = "dominating_set";
  unsigned p = 2;
  std::string variant = "min";
  std::string graph;
  std::string td;
  std::string join = "auto";
  std::string replacement = "auto";
  std::string format = "plain";
};

void add_common(CLI::App* sub, SolveArgs& a) {
  sub->add_option("--problem", a.problem, "Preset name, name(p), or \"sigma=<set> rho=<set>\"");
  sub->add_option("--p", a.p, "Parameter for induced_bounded_degree, p_dominating_set, induced_p_regular");
  sub->add_option("--variant", a.variant, "existence | min | max | count | count_min | count_max");
  sub->add_option("--graph", a.graph, "PACE .gr file")->required();
  sub->add_option("--td", a.td, "PACE .td file (default: min-fill heuristic)");
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  const SigmaRhoSpec spec = load_problem(a.problem, a.p);
  const Variant variant = parse_variant(a.variant);
  const Instance inst = load_instance(a.graph, a.td);
  SolveOptions opts;
  opts.join = resolve_join(a.join, spec, inst);
  opts.use_replacement = resolve_replacement(a.replacement, spec, opts.join);
  const SolveReport rep = solve(inst.graph, inst.td, spec, variant, opts);

  if (a.format == "json") {
    nlohmann::json j = answer_json(rep.answer);
    j["problem"] = {{"name", spec.name()}, {"sigma", spec.sigma().to_string()}, {"rho", spec.rho().to_string()},
                    {"labels", spec.num_labels()}};
    j["variant"] = std::string(to_string(variant));
    j["join"] = std::string(to_string(opts.join));
    j["replacement"] = opts.use_replacement;
    j["width"] = rep.width;
    j["decomposition"] = inst.td_given ? "given" : "min_fill";
    j["nodes"] = {{"total", rep.nice_nodes},
                  {"join", rep.join_nodes},
                  {"introduce", rep.introduce_nodes},
                  {"forget", rep.forget_nodes}};
    j["primes"] = rep.primes;
    j["ops"] = {{"mults", rep.field_mults}, {"adds", rep.field_adds}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << rep.answer.to_string() << '\n';
  out << "problem: " << spec.name() << " (" << spec.describe() << ")\n";
  out << "variant: " << to_string(variant) << '\n';
  out << "join: " << to_string(opts.join) << (opts.use_replacement ? " with size window" : "") << '\n';
  out << "width: " << rep.width << (inst.td_given ? "" : " (min-fill)") << '\n';
  out << "nodes: " << rep.nice_nodes << " (join " << rep.join_nodes << ", introduce " << rep.introduce_nodes
      << ", forget " << rep.forget_nodes << ")\n";
  out << "primes:";
  for (auto p : rep.primes) out << ' ' << p;
  out << '\n';
  out << "field multiplications: " << rep.field_mults << '\n';
  return 0;
}

int do_verify(const SolveArgs& a, std::ostream& out) {
  const SigmaRhoSpec spec = load_problem(a.problem, a.p);
  const Variant variant = parse_variant(a.variant);
  const Instance inst = load_instance(a.graph, a.td);

  struct Case {
    std::string name;
    SolveOptions opts;
  };
  std::vector<Case> cases{{"naive", {JoinStrategy::naive, false}}, {"fast_general", {JoinStrategy::fast_general, false}}};
  if (has_replacement_property(spec)) cases.push_back({"fast_general+window", {JoinStrategy::fast_general, true}});
  if (is_dominating_shaped(spec)) {
    cases.push_back({"fast_dominating", {JoinStrategy::fast_dominating, false}});
    cases.push_back({"fast_dominating+window", {JoinStrategy::fast_dominating, true}});
  }

  std::optional<Answer> reference;
  std::string ref_name;
  if (inst.graph.n() <= oracle::kMaxBruteForceVertices) {
    reference = oracle::brute_force_solve(inst.graph, spec, variant);
    ref_name = "brute_force";
    out << "REF brute_force " << reference->to_string() << '\n';
  }
  bool ok = true;
  for (const Case& c : cases) {
    const Answer got = solve(inst.graph, inst.td, spec, variant, c.opts).answer;
    if (!reference) {
      reference = got;
      ref_name = c.name;
    }
    const bool pass = got == *reference;
    ok = ok && pass;
    out << (pass ? "PASS " : "FAIL ") << c.name << ' ' << got.to_string();
    if (!pass) out << " (expected " << reference->to_string() << " from " << ref_name << ")";
    out << '\n';
  }
  out << "answer: " << reference->to_string() << '\n';
  out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  return ok ? 0 : 2;
}

struct BenchArgs {
  std::string problem = "dominating_set";
  unsigned p = 2;
  std::size_t kmin = 1;
  std::size_t kmax = 8;
  std::uint64_t seed = 1;
  std::string output;
};

int do_bench(const BenchArgs& a, std::ostream& out) {
  const SigmaRhoSpec spec = load_problem(a.problem, a.p);
  if (a.kmin > a.kmax) throw InputError("--kmin exceeds --kmax");
  const auto orders = transform_orders(spec, 1, a.kmax);
  const PrimeField field = choose_prime(orders, std::uint64_t{1} << 61);
  std::vector<JoinStrategy> strategies{JoinStrategy::naive, JoinStrategy::fast_general};
  if (is_dominating_shaped(spec)) strategies.push_back(JoinStrategy::fast_dominating);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw InputError("cannot write '" + a.output + "'");
    sink = &file;
  }
  *sink << "k,strategy,mults\n";
  for (std::size_t k = a.kmin; k <= a.kmax; ++k) {
    for (JoinStrategy s : strategies) {
      *sink << k << ',' << to_string(s) << ',' << count_join_mults(spec, k, s, field, a.seed + k) << '\n';
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for [sigma,rho]-domination problems on graphs of bounded treewidth", "sigrho"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  add_common(solve_cmd, solve_args);
  solve_cmd->add_option("--join", solve_args.join, "naive | fast | auto | fast_general | fast_dominating");
  solve_cmd->add_option("--replacement", solve_args.replacement, "auto | on | off");
  solve_cmd->add_option("--format", solve_args.format, "plain | json")->check(CLI::IsMember({"plain", "json"}));

  SolveArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check join strategies against brute force");
  add_common(verify_cmd, verify_args);

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Field multiplications per join on random tables, as CSV");
  bench_cmd->add_option("--problem", bench_args.problem, "Problem preset or explicit sets");
  bench_cmd->add_option("--p", bench_args.p, "Preset parameter");
  bench_cmd->add_option("--kmin", bench_args.kmin, "Smallest bag size");
  bench_cmd->add_option("--kmax", bench_args.kmax, "Largest bag size");
  bench_cmd->add_option("--seed", bench_args.seed, "Random seed");
  bench_cmd->add_option("--output", bench_args.output, "CSV path (default: stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve_args, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, out);
    if (bench_cmd->parsed()) return do_bench(bench_args, out);
  } catch (const InvalidDecomposition& e) {
    err << "error: invalid tree decomposition: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace sigrho::cli
