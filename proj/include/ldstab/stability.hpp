#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ldstab/model.hpp"
#include "ldstab/numeric.hpp"
#include "ldstab/reach.hpp"
#include "ldstab/state_set.hpp"

namespace ldstab {

enum class WitnessKind {
  /// A state outside the target lies on a loop (`path` is that loop).
  self_reachable_in_complement,
  /// states = {j, i}: i outside the target is reachable from the
  /// self-reachable state j (`path` goes from j to i).
  complement_reachable_from_c0,
  /// A state with no path into the LRIS (no path to show).
  no_path_to_lris,
};

std::string_view to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(std::string_view text);

struct Witness {
  WitnessKind kind;
  std::vector<State> states;
  Path path;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = false;
  /// Present exactly when `holds` is false.
  std::optional<Witness> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Robust M-stability: no state outside M is self-reachable.
Verdict is_robustly_stable(const Lds& lds, const StateSet& target);

/// Uniform robust M-stability: no state outside M is reachable from a
/// self-reachable state.
Verdict is_uniformly_robustly_stable(const Lds& lds, const StateSet& target);

/// Asymptotic stability with ratio one: I(M) is nonempty and every state
/// has a path into it (states already in I(M) count).
Verdict is_asymptotically_ratio_one(const Lds& lds, const StateSet& target);

/// Finite-time stability with ratio one. Decided by the uniform criterion
/// and checked against "no loops outside I(M)"; throws InconsistencyError
/// if the two disagree.
Verdict is_finite_time_ratio_one(const Lds& lds, const StateSet& target);

/// Checks that a witness really demonstrates the failure it claims.
bool witness_is_valid(const Lds& lds, const StateSet& target, const Witness& witness);

/// gamma_k(x0, M) = sum_{i in M} [Q^k]_{i,x0} / m^k.
Rational ratio(const Lds& lds, State x0, const StateSet& target, std::size_t k);

struct RatioVector {
  std::size_t k = 0;
  /// values[x0 - 1] = gamma_k(x0, M).
  std::vector<Rational> values;
};

/// beta_M^T Q^k / m^k for every initial state at once.
RatioVector ratio_vector(const Lds& lds, const StateSet& target, std::size_t k);

/// ratio_vector for k = 1..max_k, sharing the work between steps.
std::vector<RatioVector> ratio_sequence(const Lds& lds, const StateSet& target, std::size_t max_k);

/// First k <= max_k at which every ratio equals one. Once reached, all
/// later k stay at one.
std::optional<std::size_t> saturation_step(const Lds& lds, const StateSet& target,
                                           std::size_t max_k);

/// Transition matrix of the system under i.i.d. switching with
/// distribution `pdv`: sum_j pdv_j L_j. Throws InvalidArgument unless pdv
/// has m strictly positive entries summing to one.
StochasticMatrix pls_tpm(const Lds& lds, std::span<const Rational> pdv);

std::vector<Rational> uniform_pdv(std::size_t m);

struct ConsistencyFlags {
  bool uniform_implies_robust = true;
  bool robust_implies_asymptotic = true;
  bool uniform_iff_finite_time = true;
  bool uniform_iff_robust_wrt_lris = true;

  bool all() const {
    return uniform_implies_robust && robust_implies_asymptotic && uniform_iff_finite_time &&
           uniform_iff_robust_wrt_lris;
  }
};

struct StabilityReport {
  StateSet target;
  Verdict robust;
  Verdict uniform;
  Verdict asymptotic;
  Verdict finite_time;
  StateSet self_reachable;
  StateSet lris;
  /// Robust stability with respect to I(M) rather than M.
  Verdict robust_wrt_lris;
  ConsistencyFlags consistency;
};

StabilityReport analyze(const Lds& lds, const StateSet& target);

/// {robust, uniform, asymptotic_ratio_one, finite_time_ratio_one,
///  self_reachable, lris, robust_wrt_lris, witnesses}
nlohmann::ordered_json report_to_json(const StabilityReport& report);

/// Human-readable report naming the criterion behind each verdict.
std::string report_to_text(const StabilityReport& report);

}  // namespace ldstab
