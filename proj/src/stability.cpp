#include "ldstab/stability.hpp"

#include <sstream>

#include "ldstab/invariant.hpp"

namespace ldstab {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::self_reachable_in_complement:
      return "self-reachable-in-complement";
    case WitnessKind::complement_reachable_from_c0:
      return "complement-reachable-from-C0";
    case WitnessKind::no_path_to_lris:
      return "no-path-to-lris";
  }
  return "unknown";
}

WitnessKind witness_kind_from_string(std::string_view text) {
  for (WitnessKind kind : {WitnessKind::self_reachable_in_complement,
                           WitnessKind::complement_reachable_from_c0,
                           WitnessKind::no_path_to_lris}) {
    if (to_string(kind) == text) return kind;
  }
  throw InvalidArgument("unknown witness kind '" + std::string(text) + "'");
}

namespace {

void check_universe(const Lds& lds, const StateSet& set) {
  if (set.universe() != lds.state_count()) {
    throw InvalidArgument("target set is over " + std::to_string(set.universe()) +
                          " states, the system has " + std::to_string(lds.state_count()));
  }
}

/// Reachability facts shared by all deciders for one system.
struct Context {
  explicit Context(const Lds& system)
      : lds(system), reach(reachability_matrix_bool(system)), c0(self_reachable_set(reach)) {}

  const Lds& lds;
  BoolMatrix reach;
  StateSet c0;
};

Verdict robust_from(const Context& ctx, const StateSet& target) {
  for (State i = 1; i <= ctx.lds.state_count(); ++i) {
    if (target.contains(i) || !ctx.c0.contains(i)) continue;
    return Verdict{false, Witness{WitnessKind::self_reachable_in_complement, {i},
                                  find_path(ctx.lds, i, i).value()}};
  }
  return Verdict{true, std::nullopt};
}

Verdict uniform_from(const Context& ctx, const StateSet& target) {
  for (State j : ctx.c0.members()) {
    for (State i = 1; i <= ctx.lds.state_count(); ++i) {
      if (target.contains(i) || !ctx.reach.test(i, j)) continue;
      return Verdict{false, Witness{WitnessKind::complement_reachable_from_c0, {j, i},
                                    find_path(ctx.lds, j, i).value()}};
    }
  }
  return Verdict{true, std::nullopt};
}

Verdict asymptotic_from(const Context& ctx, const StateSet& invariant) {
  const std::size_t n = ctx.lds.state_count();
  if (invariant.empty()) {
    return Verdict{false, Witness{WitnessKind::no_path_to_lris, {1}, {}}};
  }
  for (State x = 1; x <= n; ++x) {
    if (invariant.contains(x)) continue;
    bool reaches = false;
    for (State i : invariant.members()) {
      if (ctx.reach.test(i, x)) {
        reaches = true;
        break;
      }
    }
    if (!reaches) return Verdict{false, Witness{WitnessKind::no_path_to_lris, {x}, {}}};
  }
  return Verdict{true, std::nullopt};
}

Verdict finite_time_from(const Context& ctx, const StateSet& target, const StateSet& invariant) {
  Verdict uniform = uniform_from(ctx, target);
  bool no_loops_outside = true;
  for (State i = 1; i <= ctx.lds.state_count(); ++i) {
    if (!invariant.contains(i) && ctx.c0.contains(i)) {
      no_loops_outside = false;
      break;
    }
  }
  if (uniform.holds != no_loops_outside) {
    throw InconsistencyError("finite-time criteria disagree for target " + target.to_string() +
                             ": unreachability from C0 says " +
                             (uniform.holds ? "stable" : "unstable") +
                             ", no-loops-outside-I(M) says " +
                             (no_loops_outside ? "stable" : "unstable"));
  }
  return uniform;
}

}  // namespace

Verdict is_robustly_stable(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  return robust_from(Context(lds), target);
}

Verdict is_uniformly_robustly_stable(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  return uniform_from(Context(lds), target);
}

Verdict is_asymptotically_ratio_one(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  return asymptotic_from(Context(lds), lris(lds, target));
}

Verdict is_finite_time_ratio_one(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  return finite_time_from(Context(lds), target, lris(lds, target));
}

bool witness_is_valid(const Lds& lds, const StateSet& target, const Witness& witness) {
  check_universe(lds, target);
  const std::size_t n = lds.state_count();
  for (State s : witness.states) {
    if (s < 1 || s > n) return false;
  }
  switch (witness.kind) {
    case WitnessKind::self_reachable_in_complement: {
      if (witness.states.size() != 1) return false;
      const State s = witness.states[0];
      return !target.contains(s) && replays(lds, witness.path) &&
             witness.path.front().from == s && witness.path.back().to == s;
    }
    case WitnessKind::complement_reachable_from_c0: {
      if (witness.states.size() != 2) return false;
      const State j = witness.states[0];
      const State i = witness.states[1];
      return find_path(lds, j, j).has_value() && !target.contains(i) &&
             replays(lds, witness.path) && witness.path.front().from == j &&
             witness.path.back().to == i;
    }
    case WitnessKind::no_path_to_lris: {
      if (witness.states.size() != 1 || !witness.path.empty()) return false;
      const State x = witness.states[0];
      const StateSet invariant = lris(lds, target);
      if (invariant.contains(x)) return false;
      for (State i : invariant.members()) {
        if (is_reachable(lds, x, i)) return false;
      }
      return true;
    }
  }
  return false;
}

Rational ratio(const Lds& lds, State x0, const StateSet& target, std::size_t k) {
  check_universe(lds, target);
  lds.check_state(x0);
  const CountMatrix power = count_matrix_power(lds, k);
  BigInt hits = 0;
  for (State i : target.members()) hits += power.at(i, x0);
  return Rational(hits, boost::multiprecision::pow(BigInt(lds.subnetwork_count()),
                                                   static_cast<unsigned>(k)));
}

namespace {

/// Calls visit(k, counts, m^k) for k = 1..max_k, where counts[x0 - 1] is
/// beta_M^T Q^k e_{x0}; stops early when visit returns false.
template <typename Visit>
void walk_ratio_counts(const Lds& lds, const StateSet& target, std::size_t max_k, Visit visit) {
  check_universe(lds, target);
  const std::size_t n = lds.state_count();
  // u_0 = beta_M; u_k[x] = sum_j u_{k-1}[L_j(x)]  (row vector times Q).
  std::vector<BigInt> counts(n);
  for (State x = 1; x <= n; ++x) counts[x - 1] = target.contains(x) ? 1 : 0;
  BigInt scale = 1;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<BigInt> next(n);
    for (State x = 1; x <= n; ++x) {
      for (const auto& map : lds.maps()) next[x - 1] += counts[map[x] - 1];
    }
    counts = std::move(next);
    scale *= lds.subnetwork_count();
    if (!visit(k, counts, scale)) return;
  }
}

RatioVector to_ratio_vector(std::size_t k, const std::vector<BigInt>& counts, const BigInt& scale) {
  RatioVector out{k, {}};
  out.values.reserve(counts.size());
  for (const BigInt& c : counts) out.values.emplace_back(c, scale);
  return out;
}

}  // namespace

RatioVector ratio_vector(const Lds& lds, const StateSet& target, std::size_t k) {
  if (k == 0) throw InvalidArgument("ratio needs k >= 1");
  RatioVector out;
  walk_ratio_counts(lds, target, k, [&](std::size_t step, const auto& counts, const BigInt& scale) {
    if (step == k) out = to_ratio_vector(step, counts, scale);
    return true;
  });
  return out;
}

std::vector<RatioVector> ratio_sequence(const Lds& lds, const StateSet& target,
                                        std::size_t max_k) {
  std::vector<RatioVector> out;
  out.reserve(max_k);
  walk_ratio_counts(lds, target, max_k,
                    [&](std::size_t step, const auto& counts, const BigInt& scale) {
                      out.push_back(to_ratio_vector(step, counts, scale));
                      return true;
                    });
  return out;
}

std::optional<std::size_t> saturation_step(const Lds& lds, const StateSet& target,
                                           std::size_t max_k) {
  std::optional<std::size_t> found;
  walk_ratio_counts(lds, target, max_k,
                    [&](std::size_t step, const auto& counts, const BigInt& scale) {
                      for (const BigInt& c : counts) {
                        if (c != scale) return true;
                      }
                      found = step;
                      return false;
                    });
  return found;
}

std::vector<Rational> uniform_pdv(std::size_t m) {
  if (m == 0) throw InvalidArgument("distribution needs at least one entry");
  return std::vector<Rational>(m, Rational(1, static_cast<long long>(m)));
}

StochasticMatrix pls_tpm(const Lds& lds, std::span<const Rational> pdv) {
  if (pdv.size() != lds.subnetwork_count()) {
    throw InvalidArgument("distribution has " + std::to_string(pdv.size()) + " entries, expected " +
                          std::to_string(lds.subnetwork_count()));
  }
  Rational total = 0;
  for (const Rational& p : pdv) {
    if (p <= 0) throw InvalidArgument("distribution entries must be strictly positive");
    total += p;
  }
  if (total != 1) throw InvalidArgument("distribution sums to " + to_fraction_string(total));

  const std::size_t n = lds.state_count();
  StochasticMatrix tpm(n);
  for (std::size_t j = 1; j <= lds.subnetwork_count(); ++j) {
    for (State x = 1; x <= n; ++x) tpm.at(lds.map(j)[x], x) += pdv[j - 1];
  }
  return tpm;
}

StabilityReport analyze(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  const Context ctx(lds);
  const StateSet invariant = lris(lds, target);

  StabilityReport report{
      target,
      robust_from(ctx, target),
      uniform_from(ctx, target),
      asymptotic_from(ctx, invariant),
      finite_time_from(ctx, target, invariant),
      ctx.c0,
      invariant,
      robust_from(ctx, invariant),
      {},
  };
  const bool r = report.robust.holds;
  const bool u = report.uniform.holds;
  report.consistency.uniform_implies_robust = !u || r;
  report.consistency.robust_implies_asymptotic = !r || report.asymptotic.holds;
  report.consistency.uniform_iff_finite_time = u == report.finite_time.holds;
  report.consistency.uniform_iff_robust_wrt_lris = u == report.robust_wrt_lris.holds;
  return report;
}

namespace {

nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json out;
  out["kind"] = std::string(to_string(w.kind));
  out["states"] = w.states;
  out["path"] = nlohmann::ordered_json::array();
  for (const Edge& e : w.path) {
    out["path"].push_back({{"from", e.from}, {"subnetwork", e.subnetwork}, {"to", e.to}});
  }
  return out;
}

std::string describe(const Verdict& v, const std::string& set_name) {
  if (v.holds || !v.witness) return "";
  const Witness& w = *v.witness;
  switch (w.kind) {
    case WitnessKind::self_reachable_in_complement:
      return "state " + std::to_string(w.states[0]) + " outside " + set_name +
             " lies on the loop " + format_path(w.path);
    case WitnessKind::complement_reachable_from_c0:
      return "state " + std::to_string(w.states[1]) + " outside " + set_name +
             " is reachable from self-reachable state " + std::to_string(w.states[0]) +
             " via " + format_path(w.path);
    case WitnessKind::no_path_to_lris:
      return "state " + std::to_string(w.states[0]) + " has no path into I(M)";
  }
  return "";
}

}  // namespace

nlohmann::ordered_json report_to_json(const StabilityReport& report) {
  nlohmann::ordered_json out;
  out["robust"] = report.robust.holds;
  out["uniform"] = report.uniform.holds;
  out["asymptotic_ratio_one"] = report.asymptotic.holds;
  out["finite_time_ratio_one"] = report.finite_time.holds;
  out["self_reachable"] = report.self_reachable.members();
  out["lris"] = report.lris.members();
  out["robust_wrt_lris"] = report.robust_wrt_lris.holds;
  out["witnesses"] = nlohmann::ordered_json::object();
  const std::pair<const char*, const Verdict*> verdicts[] = {
      {"robust", &report.robust},
      {"uniform", &report.uniform},
      {"asymptotic_ratio_one", &report.asymptotic},
      {"finite_time_ratio_one", &report.finite_time},
      {"robust_wrt_lris", &report.robust_wrt_lris},
  };
  for (const auto& [key, verdict] : verdicts) {
    if (verdict->witness) out["witnesses"][key] = witness_to_json(*verdict->witness);
  }
  return out;
}

std::string report_to_text(const StabilityReport& report) {
  std::ostringstream out;
  auto line = [&](const char* label, const Verdict& v, const std::string& ok,
                  const std::string& set_name) {
    out << label << ": " << (v.holds ? "yes" : "no") << "  ("
        << (v.holds ? ok : describe(v, set_name)) << ")\n";
  };
  out << "target M: " << report.target.to_string() << "\n";
  out << "self-reachable C0: " << report.self_reachable.to_string() << "\n";
  out << "LRIS I(M): " << report.lris.to_string() << "\n";
  line("robust", report.robust, "[R]_{i,i} = 0 for every i outside M", "M");
  line("uniform", report.uniform, "[R]_{i,j} = 0 for i outside M, j in C0", "M");
  line("asymptotic_ratio_one", report.asymptotic,
       "I(M) nonempty and every state has a path into it", "I(M)");
  line("finite_time_ratio_one", report.finite_time,
       "no state outside M reachable from C0; no loops outside I(M)", "M");
  line("robust_wrt_lris", report.robust_wrt_lris, "[R]_{i,i} = 0 for every i outside I(M)",
       "I(M)");
  out << "consistency: " << (report.consistency.all() ? "ok" : "VIOLATED") << "\n";
  return out.str();
}

}  // namespace ldstab
