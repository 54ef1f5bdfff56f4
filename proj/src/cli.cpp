#include "ldstab/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldstab/invariant.hpp"
#include "ldstab/model.hpp"
#include "ldstab/oracle.hpp"
#include "ldstab/reach.hpp"
#include "ldstab/stability.hpp"

namespace ldstab::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CliConfig {
  std::string input;
  std::string target;
  std::string format = "text";
  std::string dot_out = "-";
  bool highlight_target = false;
  bool highlight_c0 = false;
  bool highlight_lris = false;
  std::optional<std::size_t> x0;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::optional<std::size_t> k;
  std::optional<std::size_t> steps;
  std::string signal;
  bool periodic = false;
  bool random = false;
  std::string pdv;
  std::uint64_t seed = 0;
  std::uint64_t cap = OracleOptions{}.cap;
  unsigned workers = 1;
  bool weighted = false;
};

StateSet resolve_target(const Network& net, const CliConfig& cfg) {
  const std::size_t n = net.lds.state_count();
  if (!cfg.target.empty()) {
    try {
      return StateSet(n, parse_index_list(cfg.target));
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--target: ") + e.what());
    }
  }
  if (net.target) return *net.target;
  throw UsageError("no target set: pass --target or add \"target\" to the network file");
}

State checked_state(const Lds& lds, std::size_t x, const char* flag) {
  if (x < 1 || x > lds.state_count()) {
    throw UsageError(std::string(flag) + " " + std::to_string(x) + " outside 1.." +
                     std::to_string(lds.state_count()));
  }
  return x;
}

std::size_t checked_k(const std::optional<std::size_t>& k) {
  if (!k) throw UsageError("--k is required");
  if (*k == 0) throw UsageError("--k must be >= 1");
  return *k;
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(token));
    const BigInt num(token.substr(0, slash));
    const BigInt den(token.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + token + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("'" + token + "' is not a fraction");
  }
}

std::vector<Rational> parse_pdv(const std::string& text, std::size_t m) {
  if (text.empty()) return uniform_pdv(m);
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
  return out;
}

std::string decimal(const Rational& r, int places = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << to_double(r);
  return out.str();
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  const StateSet target = resolve_target(net, cfg);
  const StabilityReport report = analyze(net.lds, target);
  if (cfg.format == "json") {
    out << report_to_json(report).dump(2) << "\n";
    return kOk;
  }
  if (!net.name.empty()) out << "network: " << net.name << "\n";
  out << report_to_text(report);
  if (report.finite_time.holds) {
    if (const auto k = saturation_step(net.lds, target, 2 * net.lds.state_count())) {
      out << "ratio reaches one for every initial state from k = " << *k << "\n";
    }
  }
  return kOk;
}

int cmd_stg(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  DotHighlights highlights;
  if (cfg.highlight_target || cfg.highlight_lris) {
    const StateSet target = resolve_target(net, cfg);
    if (cfg.highlight_target) highlights.target = target;
    if (cfg.highlight_lris) highlights.lris = lris(net.lds, target);
  } else if (!cfg.target.empty()) {
    throw UsageError("--target given without --highlight-target or --highlight-lris");
  }
  if (cfg.highlight_c0) highlights.self_reachable = self_reachable_set(net.lds);

  const std::string dot = stg_dot(net.lds, highlights, net.name.empty() ? "stg" : net.name);
  if (cfg.dot_out == "-") {
    out << dot;
    return kOk;
  }
  std::ofstream file(cfg.dot_out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.dot_out);
  file << dot;
  return kOk;
}

int cmd_ratio(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  const std::size_t k = checked_k(cfg.k);
  const StateSet target = resolve_target(net, cfg);
  const RatioVector ratios = ratio_vector(net.lds, target, k);

  std::vector<State> initial;
  if (cfg.x0) {
    initial.push_back(checked_state(net.lds, *cfg.x0, "--x0"));
  } else {
    for (State x = 1; x <= net.lds.state_count(); ++x) initial.push_back(x);
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["k"] = k;
    doc["target"] = target.members();
    doc["ratios"] = nlohmann::ordered_json::array();
    for (State x : initial) {
      const Rational& r = ratios.values[x - 1];
      doc["ratios"].push_back(
          {{"x0", x}, {"value", to_fraction_string(r)}, {"decimal", to_double(r)}});
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "k = " << k << ", target M = " << target.to_string() << "\n";
  for (State x : initial) {
    const Rational& r = ratios.values[x - 1];
    out << "x0=" << x << ": " << to_fraction_string(r) << " (" << decimal(r) << ")\n";
  }
  return kOk;
}

int cmd_oracle(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  const std::size_t k = checked_k(cfg.k);
  const OracleReport report =
      verify_counts(net.lds, k, OracleOptions{cfg.cap, std::max(1U, cfg.workers)});
  const std::size_t n = net.lds.state_count();
  out << "k = " << k << ", " << net.lds.subnetwork_count() << "^" << k
      << " switching patterns per initial state\n";
  for (State i = 1; i <= n; ++i) {
    out << "  ";
    for (State j = 1; j <= n; ++j) out << (j > 1 ? " " : "") << report.enumerated.at(i, j);
    out << "\n";
  }
  if (report.equal) {
    out << "equal: enumeration matches Q^" << k << " entrywise\n";
    return kOk;
  }
  const auto [i, j] = *report.first_mismatch;
  out << "MISMATCH at (" << i << "," << j << "): enumerated " << report.enumerated.at(i, j)
      << ", Q^" << k << " has " << report.power.at(i, j) << "\n";
  return kMismatch;
}

int cmd_simulate(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  if (!cfg.x0) throw UsageError("--x0 is required");
  const State x0 = checked_state(net.lds, *cfg.x0, "--x0");

  Trajectory states;
  if (cfg.random) {
    if (!cfg.signal.empty()) throw UsageError("--signal and --random are exclusive");
    if (!cfg.steps) throw UsageError("--random needs --steps");
    const auto pdv = parse_pdv(cfg.pdv, net.lds.subnetwork_count());
    try {
      states = simulate_random(net.lds, x0, pdv, *cfg.steps, cfg.seed);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--pdv: ") + e.what());
    }
  } else {
    if (cfg.signal.empty()) throw UsageError("give --signal or --random");
    std::vector<std::size_t> word;
    try {
      word = parse_index_list(cfg.signal);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--signal: ") + e.what());
    }
    for (std::size_t j : word) {
      if (j > net.lds.subnetwork_count()) {
        throw UsageError("--signal value " + std::to_string(j) + " outside 1.." +
                         std::to_string(net.lds.subnetwork_count()));
      }
    }
    const std::size_t horizon = cfg.steps.value_or(word.size());
    const auto signal =
        cfg.periodic ? SwitchingSignal::periodic(word) : SwitchingSignal::finite(word);
    if (!cfg.periodic && horizon > word.size()) {
      throw UsageError("--steps exceeds the signal length; add --periodic to repeat it");
    }
    states = trajectory(net.lds, x0, signal, horizon);
  }
  for (std::size_t t = 0; t < states.size(); ++t) out << (t ? " " : "") << states[t];
  out << "\n";
  return kOk;
}

int cmd_lris(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  const StateSet target = resolve_target(net, cfg);
  const LrisResult result = lris_iterate(net.lds, target);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["target"] = target.members();
    doc["lris"] = result.set.members();
    doc["rounds"] = result.rounds;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "target M: " << target.to_string() << "\n";
  out << "LRIS I(M): " << result.set.to_string() << " (" << result.rounds << " rounds)\n";
  return kOk;
}

int cmd_reach(const CliConfig& cfg, std::ostream& out) {
  const Network net = load_network(cfg.input);
  const Lds& lds = net.lds;
  const std::size_t n = lds.state_count();

  if (cfg.from || cfg.to) {
    if (!cfg.from || !cfg.to) throw UsageError("--from and --to go together");
    const State from = checked_state(lds, *cfg.from, "--from");
    const State to = checked_state(lds, *cfg.to, "--to");
    if (cfg.k) {
      const bool hit = is_reachable(lds, from, to, checked_k(cfg.k));
      out << to << " is " << (hit ? "" : "not ") << *cfg.k << "-step reachable from " << from
          << "\n";
      return kOk;
    }
    if (const auto path = find_path(lds, from, to)) {
      out << to << " is reachable from " << from << ": " << format_path(*path) << "\n";
    } else {
      out << to << " is not reachable from " << from << "\n";
    }
    return kOk;
  }

  if (cfg.weighted) {
    const RationalMatrix r = reachability_matrix_weighted(lds);
    out << "R = Gamma + ... + Gamma^" << n << " (2 decimals)\n";
    for (State i = 1; i <= n; ++i) {
      for (State j = 1; j <= n; ++j) out << (j > 1 ? " " : "") << decimal(r.at(i, j), 2);
      out << "\n";
    }
    return kOk;
  }
  const BoolMatrix r = reachability_matrix_bool(lds);
  out << "reachability pattern (row i, column j: i reachable from j)\n";
  for (State i = 1; i <= n; ++i) {
    for (State j = 1; j <= n; ++j) out << (r.test(i, j) ? '1' : '0');
    out << "\n";
  }
  out << "self-reachable C0: " << self_reachable_set(r).to_string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set stability analysis of switched logic dynamical systems"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("network", cfg.input, "network JSON file")->required();
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--target", cfg.target, "target set as a comma list, overrides the file");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "all four stability verdicts with witnesses");
  add_input(analyze_cmd);
  add_target(analyze_cmd);
  add_format(analyze_cmd);

  auto* stg_cmd = app.add_subcommand("stg", "state transition graph as Graphviz DOT");
  add_input(stg_cmd);
  add_target(stg_cmd);
  stg_cmd->add_option("-o,--output", cfg.dot_out, "output file, - for stdout");
  stg_cmd->add_flag("--highlight-target", cfg.highlight_target, "fill target states");
  stg_cmd->add_flag("--highlight-c0", cfg.highlight_c0, "outline self-reachable states");
  stg_cmd->add_flag("--highlight-lris", cfg.highlight_lris, "double-circle the LRIS");

  auto* ratio_cmd = app.add_subcommand("ratio", "exact k-step reachable pattern ratios");
  add_input(ratio_cmd);
  add_target(ratio_cmd);
  add_format(ratio_cmd);
  ratio_cmd->add_option("--x0", cfg.x0, "initial state (default: all)");
  ratio_cmd->add_option("--k", cfg.k, "number of steps")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "check Q^k against pattern enumeration");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--k", cfg.k, "pattern length")->required();
  oracle_cmd->add_option("--cap", cfg.cap, "largest m^k to enumerate");
  oracle_cmd->add_option("--workers", cfg.workers, "threads for enumeration");

  auto* sim_cmd = app.add_subcommand("simulate", "trajectory under a given or random signal");
  add_input(sim_cmd);
  sim_cmd->add_option("--x0", cfg.x0, "initial state");
  sim_cmd->add_option("--signal", cfg.signal, "switching values as a comma list");
  sim_cmd->add_flag("--periodic", cfg.periodic, "repeat --signal indefinitely");
  sim_cmd->add_flag("--random", cfg.random, "draw the signal i.i.d.");
  sim_cmd->add_option("--pdv", cfg.pdv, "switching distribution, e.g. 1/3,2/3 (default uniform)");
  sim_cmd->add_option("--seed", cfg.seed, "generator seed");
  sim_cmd->add_option("--steps", cfg.steps, "horizon");

  auto* lris_cmd = app.add_subcommand("lris", "largest robustly invariant subset of the target");
  add_input(lris_cmd);
  add_target(lris_cmd);
  add_format(lris_cmd);

  auto* reach_cmd = app.add_subcommand("reach", "reachability matrix or a single query");
  add_input(reach_cmd);
  reach_cmd->add_option("--from", cfg.from, "source state");
  reach_cmd->add_option("--to", cfg.to, "destination state");
  reach_cmd->add_option("--k", cfg.k, "exact step count");
  reach_cmd->add_flag("--weighted", cfg.weighted, "print Gamma + ... + Gamma^n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (stg_cmd->parsed()) return cmd_stg(cfg, out);
    if (ratio_cmd->parsed()) return cmd_ratio(cfg, out);
    if (oracle_cmd->parsed()) return cmd_oracle(cfg, out);
    if (sim_cmd->parsed()) return cmd_simulate(cfg, out);
    if (lris_cmd->parsed()) return cmd_lris(cfg, out);
    if (reach_cmd->parsed()) return cmd_reach(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kMismatch;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ldstab::cli
