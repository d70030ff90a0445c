// Experiment driver for network creation games: dynamics runs, equilibrium
// verification, optimum computation, lower-bound instance generation and
// lemma checks, with machine-readable CSV/JSON output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncg/analysis.hpp"
#include "ncg/dynamics.hpp"
#include "ncg/io.hpp"

using namespace ncg;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNotConverged = 3;

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& field, const std::string& reason)
      : std::runtime_error("config error: " + field + ": " + reason) {}
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

struct ExperimentConfig {
  std::string host = "";
  std::string model = "cooperative";
  std::string alpha = "";
  std::string init = "empty";
  std::string policy = "round_robin";
  std::uint64_t max_steps = 0;  // 0: 100 * |E|
  std::string checks = "equilibrium,lemmas,poa";
  std::string out_csv = "";
  std::string out_json = "";
  std::string out_dir = "";
};

void load_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config", "expected key=value, got: " + line);
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t\r");
      std::size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "host") {
      cfg.host = value;
    } else if (key == "model") {
      cfg.model = value;
    } else if (key == "alpha") {
      cfg.alpha = value;
    } else if (key == "init") {
      cfg.init = value;
    } else if (key == "policy") {
      cfg.policy = value;
    } else if (key == "max_steps") {
      cfg.max_steps = std::stoull(value);
    } else if (key == "checks") {
      cfg.checks = value;
    } else if (key == "out_csv") {
      cfg.out_csv = value;
    } else if (key == "out_json") {
      cfg.out_json = value;
    } else if (key == "outdir") {
      cfg.out_dir = value;
    } else {
      throw ConfigError(key, "unknown config key");
    }
  }
}

HostGraph load_host_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("host", "cannot open " + path);
  EdgeListData data = read_edge_list(in);
  return build_host_graph(data.n, data.edges, Rational(0));
}

// host forms: file:PATH | complete:N | path:N | cycle:N | star:N |
// gnp:N:PERCENT:SEED | gkl:K:L
struct HostSource {
  HostGraph graph;  // alpha filled in per experiment entry
  std::optional<LowerBoundInstance> gkl;
};

HostSource resolve_host(const std::string& spec) {
  if (spec.empty()) throw ConfigError("host", "missing host source");
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arg_int = [&](std::size_t i, const char* what) {
    if (i >= parts.size()) throw ConfigError("host", std::string("missing ") + what);
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw ConfigError("host", std::string("bad ") + what + ": " + parts[i]);
    }
  };

  HostSource src;
  if (kind == "file") {
    if (parts.size() < 2) throw ConfigError("host", "file: needs a path");
    src.graph = load_host_file(spec.substr(5));
  } else if (kind == "complete") {
    src.graph = complete_graph(arg_int(1, "vertex count"), Rational(0));
  } else if (kind == "path") {
    src.graph = path_graph(arg_int(1, "vertex count"), Rational(0));
  } else if (kind == "cycle") {
    src.graph = cycle_graph(arg_int(1, "vertex count"), Rational(0));
  } else if (kind == "star") {
    src.graph = star_graph(arg_int(1, "vertex count"), Rational(0));
  } else if (kind == "gnp") {
    int n = arg_int(1, "vertex count");
    int percent = arg_int(2, "edge percentage");
    std::uint64_t seed = parts.size() > 3 ? std::stoull(parts[3]) : 0;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    src.graph = build_host_graph(n, edges, Rational(0));
  } else if (kind == "gkl") {
    auto inst = generate_lower_bound_instance(arg_int(1, "k"), arg_int(2, "l"));
    src.graph = inst.host;
    src.gkl = std::move(inst);
  } else {
    throw ConfigError("host", "unknown host source: " + kind);
  }
  return src;
}

std::vector<Rational> parse_alpha_list(const std::string& text, const HostSource& src) {
  std::vector<Rational> alphas;
  if (text.empty()) {
    if (src.gkl) {
      alphas.push_back(src.gkl->suggested_alpha);
      return alphas;
    }
    throw ConfigError("alpha", "missing alpha list");
  }
  for (const std::string& item : split(text, ',')) {
    try {
      alphas.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw ConfigError("alpha", "bad rational '" + item + "': " + e.what());
    }
    if (alphas.back().is_negative()) throw ConfigError("alpha", "alpha must be nonnegative");
  }
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (!(alphas[i - 1] < alphas[i])) {
      throw ConfigError("alpha", "sweep list must be strictly increasing");
    }
  }
  return alphas;
}

DynamicsPolicy parse_policy(const std::string& text) {
  auto parts = split(text, ':');
  if (parts[0] == "round_robin") return DynamicsPolicy::round_robin();
  if (parts[0] == "greedy") return DynamicsPolicy::greedy();
  if (parts[0] == "random") {
    std::uint64_t seed = parts.size() > 1 ? std::stoull(parts[1]) : 0;
    return DynamicsPolicy::random(seed);
  }
  throw ConfigError("policy", "unknown policy: " + text);
}

PaymentMatrix resolve_init(const std::string& init, const HostGraph& host,
                           const HostSource& src) {
  if (init == "empty") return PaymentMatrix::empty(host);
  if (init == "host-complete") return host_complete_payments(host);
  if (init == "g2") {
    if (!src.gkl) throw ConfigError("init", "init=g2 requires a gkl host");
    return src.gkl->g2_payments;
  }
  if (init.rfind("file:", 0) == 0) {
    std::ifstream in(init.substr(5));
    if (!in) throw ConfigError("init", "cannot open " + init.substr(5));
    return parse_payments(in, host);
  }
  throw ConfigError("init", "unknown init: " + init);
}

struct CheckSet {
  bool equilibrium = false;
  bool lemmas = false;
  bool poa = false;
};

CheckSet parse_checks(const std::string& text) {
  CheckSet c;
  if (text.empty()) return c;
  for (const std::string& item : split(text, ',')) {
    if (item == "equilibrium") {
      c.equilibrium = true;
    } else if (item == "lemmas") {
      c.lemmas = true;
    } else if (item == "poa") {
      c.poa = true;
    } else if (!item.empty()) {
      throw ConfigError("checks", "unknown check: " + item);
    }
  }
  return c;
}

std::string output_dir(const ExperimentConfig& cfg) {
  if (!cfg.out_dir.empty()) return cfg.out_dir;
  if (const char* env = std::getenv("NCG_OUTPUT_DIR")) return env;
  return ".";
}

struct EntryResult {
  SweepRow row;
  nlohmann::ordered_json detail;
  Trajectory trajectory;
  int exit_status = kExitOk;
};

EntryResult run_entry(const HostSource& src, const ExperimentConfig& cfg, Rational alpha,
                      const CheckSet& checks) {
  HostGraph host = src.graph.with_alpha(alpha);
  PaymentMatrix init = resolve_init(cfg.init, host, src);
  std::uint64_t max_steps =
      cfg.max_steps
          ? cfg.max_steps
          : std::max<std::uint64_t>(1000, 100 * static_cast<std::uint64_t>(host.edge_count()));

  Trajectory traj = run_dynamics(host, init, parse_policy(cfg.policy), max_steps);
  const PaymentMatrix& final_payments = traj.final_payments;
  const BuiltGraph& built = traj.final_built;
  CostBreakdown social = social_cost(built, JointStrategy(final_payments), Model::cooperative);

  EntryResult result;
  result.row.alpha = alpha;
  result.row.n = host.n;
  result.row.edges_realized = built.realized_count();
  result.row.diameter = built.dist.diameter();
  result.row.social_cost = social.total;
  result.row.converged = traj.converged;
  result.row.steps = traj.steps.size();
  if (!traj.converged) result.exit_status = kExitNotConverged;

  nlohmann::ordered_json detail;
  detail["alpha"] = alpha.to_string();
  detail["n"] = host.n;
  detail["edges_realized"] = built.realized_count();
  detail["diameter"] = built.dist.diameter();
  detail["social_cost"] = {{"unreachable_pairs", social.total.unreachable},
                           {"value", social.total.value.to_string()}};
  detail["converged"] = traj.converged;
  detail["steps"] = traj.steps.size();
  detail["mutations"] = traj.mutation_count;

  if (checks.equilibrium) {
    EquilibriumReport report = verify_collaborative(host, final_payments);
    detail["verify"] = equilibrium_report_json(report);
  }

  if (checks.lemmas) {
    std::string verdicts;
    detail["lemmas"] = nlohmann::ordered_json::array();
    auto append = [&](const LemmaCheckReport& r) {
      if (!verdicts.empty()) verdicts += "|";
      verdicts += r.lemma + (r.pass ? ":pass" : ":fail");
      detail["lemmas"].push_back(lemma_report_json(r));
    };
    for (const auto& r : check_doubling_lemma(built, alpha, Model::cooperative)) append(r);
    append(check_distance_stretch(host, built, alpha));
    result.row.lemma_verdicts = verdicts;
  }

  if (checks.poa) {
    std::optional<Cost> optimum;
    std::string basis = "-";
    if (host.edge_count() <= 20) {
      optimum = social_optimum_exact(host).cost;
      basis = "exact";
    } else if (all_pairs_distances(host).total_unreachable_pairs() == 0) {
      optimum = social_optimum_lower_bound(host);
      basis = "lower_bound";  // reported ratio upper-bounds the true PoA
    }
    result.row.optimum_basis = basis;
    detail["optimum_basis"] = basis;
    if (optimum && optimum->finite() && !optimum->value.is_zero() && social.total.finite()) {
      Rational poa = price_of_anarchy(social.total, *optimum);
      result.row.has_poa = true;
      result.row.poa = poa;
      detail["optimum"] = optimum->value.to_string();
      detail["poa"] = poa.to_string();
    } else {
      detail["poa"] = nullptr;
    }
  }

  result.trajectory = std::move(traj);
  result.detail = std::move(detail);
  return result;
}

int run_experiment_command(const ExperimentConfig& cfg, bool single_alpha) {
  if (cfg.model != "cooperative") {
    throw ConfigError("model",
                      "dynamics experiments support model=cooperative only; use the "
                      "verify/optimum subcommands for the unilateral model");
  }
  HostSource src = resolve_host(cfg.host);
  std::vector<Rational> alphas = parse_alpha_list(cfg.alpha, src);
  if (alphas.empty()) throw ConfigError("alpha", "empty alpha list");
  if (single_alpha && alphas.size() != 1) {
    throw ConfigError("alpha", "simulate takes exactly one alpha; use sweep for lists");
  }
  CheckSet checks = parse_checks(cfg.checks);
  // Resolve init and policy eagerly so a bad config fails before any output.
  (void)resolve_init(cfg.init, src.graph.with_alpha(alphas[0]), src);
  (void)parse_policy(cfg.policy);

  std::string dir = output_dir(cfg);
  fs::create_directories(dir);
  std::string csv_path = cfg.out_csv.empty() ? dir + "/sweep.csv" : cfg.out_csv;
  std::string json_path = cfg.out_json.empty() ? dir + "/details.json" : cfg.out_json;

  // Entries are independent; run them concurrently, emit rows in alpha order.
  std::vector<std::future<EntryResult>> futures;
  futures.reserve(alphas.size());
  for (const Rational& alpha : alphas) {
    futures.push_back(std::async(std::launch::async,
                                 [&, alpha] { return run_entry(src, cfg, alpha, checks); }));
  }

  std::vector<SweepRow> rows;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
  int exit_status = kExitOk;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    EntryResult r = futures[i].get();
    exit_status = std::max(exit_status, r.exit_status);
    if (!r.row.converged) {
      std::string traj_path = dir + "/trajectory_alpha_" + std::to_string(r.row.alpha.num()) +
                              "_" + std::to_string(r.row.alpha.den()) + ".txt";
      std::ofstream out(traj_path);
      write_trajectory(out, r.trajectory);
      std::cerr << "non-converged at alpha=" << r.row.alpha.to_string() << "; trajectory in "
                << traj_path << "\n";
    }
    rows.push_back(r.row);
    details.push_back(std::move(r.detail));
  }

  std::ofstream csv(csv_path, std::ios::binary);
  write_csv(csv, rows);
  csv.close();

  nlohmann::ordered_json doc;
  doc["config"] = {{"host", cfg.host},     {"model", cfg.model},   {"alpha", cfg.alpha},
                   {"init", cfg.init},     {"policy", cfg.policy}, {"max_steps", cfg.max_steps},
                   {"checks", cfg.checks}};
  doc["results"] = std::move(details);
  std::ofstream json_out(json_path, std::ios::binary);
  json_out << doc.dump(2) << "\n";

  // Plot-ready stdout summary.
  std::cout << "alpha\tdiameter\tedges\tsteps\tconverged\tpoa\n";
  for (const SweepRow& r : rows) {
    std::cout << r.alpha.to_string() << "\t" << r.diameter << "\t" << r.edges_realized << "\t"
              << r.steps << "\t" << (r.converged ? 1 : 0) << "\t"
              << (r.has_poa ? r.poa.to_string() : "-") << "\n";
  }
  return exit_status;
}

int verify_command(const std::string& host_spec, const std::string& alpha_text,
                   const std::string& model, const std::string& strategy_path,
                   const std::string& mode) {
  HostSource src = resolve_host(host_spec);
  Rational alpha =
      alpha_text.empty() && src.gkl ? src.gkl->suggested_alpha : Rational::parse(alpha_text);
  HostGraph host = src.graph.with_alpha(alpha);
  std::ifstream in(strategy_path);
  if (!in) throw ConfigError("strategy", "cannot open " + strategy_path);

  EquilibriumReport report;
  if (model == "cooperative") {
    PaymentMatrix payments = parse_payments(in, host);
    report = verify_collaborative(host, payments);
  } else if (model == "unilateral") {
    UnilateralStrategy s = parse_unilateral(in, host.n);
    report =
        verify_unilateral_nash(host, s, mode == "local" ? NashMode::local : NashMode::exact);
  } else {
    throw ConfigError("model", "unknown model: " + model);
  }

  std::cout << equilibrium_report_json(report).dump(2) << "\n";
  return report.pass ? kExitOk : kExitVerifyFail;
}

int optimum_command(const std::string& host_spec, const std::string& alpha_text,
                    bool lower_bound_only) {
  HostSource src = resolve_host(host_spec);
  Rational alpha =
      alpha_text.empty() && src.gkl ? src.gkl->suggested_alpha : Rational::parse(alpha_text);
  HostGraph host = src.graph.with_alpha(alpha);

  if (!lower_bound_only && host.edge_count() <= 20) {
    OptimumResult r = social_optimum_exact(host);
    std::cout << "basis exact\ncost " << r.cost.value.to_string() << "\nedges " << r.edges.size()
              << "\n";
    for (const Edge& e : r.edges) std::cout << e.u << " " << e.v << "\n";
  } else {
    Cost bound = social_optimum_lower_bound(host);
    std::cout << "basis lower_bound\ncost " << bound.value.to_string() << "\n";
  }
  return kExitOk;
}

int construct_command(int k, int l, const std::string& prefix) {
  LowerBoundInstance inst = generate_lower_bound_instance(k, l);
  std::vector<std::string> header = {"k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                     " alpha=" + inst.suggested_alpha.to_string()};

  auto edges_of = [&](const std::vector<char>& present) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < present.size(); ++i)
      if (present[i]) out.push_back(inst.host.edges[i]);
    return out;
  };

  {
    std::ofstream out(prefix + "_host.txt");
    write_edge_list(out, inst.host.n, inst.host.edges, header);
  }
  {
    std::ofstream out(prefix + "_g1.txt");
    write_edge_list(out, inst.host.n, edges_of(inst.g1_present), header);
  }
  {
    std::ofstream out(prefix + "_g2.txt");
    write_edge_list(out, inst.host.n, edges_of(inst.g2_present), header);
  }
  {
    std::ofstream out(prefix + "_g2_payments.txt");
    out << format_payments(inst.host, inst.g2_payments);
  }
  std::cout << "n " << inst.host.n << "\nedges " << inst.host.edge_count() << "\nalpha "
            << inst.suggested_alpha.to_string() << "\nfiles " << prefix << "_{host,g1,g2}.txt "
            << prefix << "_g2_payments.txt\n";
  return kExitOk;
}

int check_lemmas_command(const std::string& host_spec, const std::string& alpha_text,
                         const std::string& model_text, const std::string& built_path,
                         const std::string& strategy_path, const std::string& json_path,
                         const std::string& stretch_constant) {
  HostSource src = resolve_host(host_spec);
  Rational alpha =
      alpha_text.empty() && src.gkl ? src.gkl->suggested_alpha : Rational::parse(alpha_text);
  HostGraph host = src.graph.with_alpha(alpha);
  Model model = model_text == "unilateral" ? Model::unilateral : Model::cooperative;

  BuiltGraph built;
  std::optional<UnilateralStrategy> strategy;
  if (!built_path.empty()) {
    std::ifstream in(built_path);
    if (!in) throw ConfigError("built", "cannot open " + built_path);
    EdgeListData data = read_edge_list(in);
    std::vector<char> present(host.edges.size(), 0);
    for (auto [u, v] : data.edges) {
      int idx = host.edge_index(u, v);
      if (idx < 0) {
        throw ConfigError("built", "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} not in host");
      }
      present[idx] = 1;
    }
    built = realize_edges(host, present);
  } else if (!strategy_path.empty()) {
    std::ifstream in(strategy_path);
    if (!in) throw ConfigError("strategy", "cannot open " + strategy_path);
    if (model == Model::unilateral) {
      strategy = parse_unilateral(in, host.n);
      built = realize_network(host, *strategy);
    } else {
      built = realize_network(host, parse_payments(in, host));
    }
  } else {
    throw ConfigError("built", "check-lemmas needs --built or --strategy");
  }

  std::vector<LemmaCheckReport> reports = check_doubling_lemma(built, alpha, model);
  if (model == Model::cooperative) {
    reports.push_back(check_distance_stretch(host, built, alpha));
  } else {
    reports.push_back(check_distance_stretch_unilateral(host, built, alpha,
                                                        Rational::parse(stretch_constant)));
    if (strategy) {
      reports.push_back(check_cost_bound_unilateral(built, *strategy, alpha));
    }
  }

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    doc.push_back(lemma_report_json(r));
    bool informational = r.lemma == "distance_stretch_unilateral";
    std::cout << r.lemma << ": " << (r.pass ? "pass" : "fail")
              << (informational ? " (informational)" : "") << " (" << r.checked << " checked, "
              << r.witnesses.size() << " violations)\n";
    if (!informational) all_pass &= r.pass;
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << doc.dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network creation game simulator"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string config_path;

  auto add_experiment_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "flat key=value config file");
    cmd->add_option("--host", cfg.host,
                    "file:PATH | complete:N | path:N | cycle:N | star:N | gnp:N:PCT:SEED | "
                    "gkl:K:L");
    cmd->add_option("--model", cfg.model, "cooperative (default) | unilateral");
    cmd->add_option("--alpha", cfg.alpha, "rational, or comma list for sweep");
    cmd->add_option("--init", cfg.init, "empty | host-complete | g2 | file:PATH");
    cmd->add_option("--policy", cfg.policy, "round_robin | random:SEED | greedy");
    cmd->add_option("--max-steps", cfg.max_steps, "0 = 100 * |E|");
    cmd->add_option("--checks", cfg.checks, "subset of equilibrium,lemmas,poa");
    cmd->add_option("--csv", cfg.out_csv, "CSV output path");
    cmd->add_option("--json", cfg.out_json, "JSON detail output path");
    cmd->add_option("--outdir", cfg.out_dir, "output directory (or $NCG_OUTPUT_DIR)");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run dynamics for a single alpha");
  add_experiment_flags(simulate);
  CLI::App* sweep = app.add_subcommand("sweep", "run dynamics across an alpha list");
  add_experiment_flags(sweep);

  std::string v_host, v_alpha, v_model = "cooperative", v_strategy, v_mode = "exact";
  CLI::App* verify = app.add_subcommand("verify", "verify an equilibrium from a strategy file");
  verify->add_option("--host", v_host)->required();
  verify->add_option("--alpha", v_alpha);
  verify->add_option("--model", v_model, "cooperative | unilateral");
  verify->add_option("--strategy", v_strategy)->required();
  verify->add_option("--mode", v_mode, "exact | local (unilateral only)");

  std::string o_host, o_alpha;
  bool o_lower = false;
  CLI::App* optimum = app.add_subcommand("optimum", "social optimum (exact or lower bound)");
  optimum->add_option("--host", o_host)->required();
  optimum->add_option("--alpha", o_alpha);
  optimum->add_flag("--lower-bound", o_lower, "skip exact enumeration");

  int c_k = 0, c_l = 0;
  std::string c_prefix = "instance";
  CLI::App* construct = app.add_subcommand("construct", "emit a lower-bound instance family");
  construct->add_option("--k", c_k)->required();
  construct->add_option("--l", c_l)->required();
  construct->add_option("--out", c_prefix, "output file prefix");

  std::string l_host, l_alpha, l_model = "cooperative", l_built, l_strategy, l_json;
  std::string l_constant = "3";
  CLI::App* lemmas = app.add_subcommand("check-lemmas", "run structural lemma checks");
  lemmas->add_option("--host", l_host)->required();
  lemmas->add_option("--alpha", l_alpha);
  lemmas->add_option("--model", l_model);
  lemmas->add_option("--built", l_built, "edge list of the realized graph");
  lemmas->add_option("--strategy", l_strategy, "strategy file (alternative to --built)");
  lemmas->add_option("--json", l_json, "JSON report path");
  lemmas->add_option("--stretch-constant", l_constant,
                     "constant for the informational unilateral stretch report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed() || sweep->parsed()) {
      if (!config_path.empty()) {
        // Config file fills in whatever the flags left at defaults.
        ExperimentConfig file_cfg;
        load_config_file(config_path, file_cfg);
        auto merge = [](std::string& flag_value, const std::string& file_value) {
          if (flag_value.empty() && !file_value.empty()) flag_value = file_value;
        };
        merge(cfg.host, file_cfg.host);
        if (cfg.model == "cooperative" && file_cfg.model != "cooperative")
          cfg.model = file_cfg.model;
        merge(cfg.alpha, file_cfg.alpha);
        if (cfg.init == "empty" && file_cfg.init != "empty") cfg.init = file_cfg.init;
        if (cfg.policy == "round_robin" && file_cfg.policy != "round_robin")
          cfg.policy = file_cfg.policy;
        if (cfg.max_steps == 0) cfg.max_steps = file_cfg.max_steps;
        if (cfg.checks == "equilibrium,lemmas,poa" && !file_cfg.checks.empty())
          cfg.checks = file_cfg.checks;
        merge(cfg.out_csv, file_cfg.out_csv);
        merge(cfg.out_json, file_cfg.out_json);
        merge(cfg.out_dir, file_cfg.out_dir);
      }
      return run_experiment_command(cfg, simulate->parsed());
    }
    if (verify->parsed()) return verify_command(v_host, v_alpha, v_model, v_strategy, v_mode);
    if (optimum->parsed()) return optimum_command(o_host, o_alpha, o_lower);
    if (construct->parsed()) return construct_command(c_k, c_l, c_prefix);
    if (lemmas->parsed()) {
      return check_lemmas_command(l_host, l_alpha, l_model, l_built, l_strategy, l_json,
                                  l_constant);
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}
