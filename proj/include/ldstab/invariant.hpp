#pragma once

#include <cstddef>

#include "ldstab/model.hpp"
#include "ldstab/state_set.hpp"

namespace ldstab {

/// C is robustly invariant iff every subnetwork maps C into C.
bool is_robustly_invariant(const Lds& lds, const StateSet& set);

struct LrisResult {
  StateSet set;
  /// Shrinking passes performed; never more than |M|.
  std::size_t rounds = 0;
};

/// Largest robustly invariant subset of `target`:
///   C0 = M,  C(t+1) = { x in C(t) : step(x, j) in C(t) for all j },
/// iterated until it stops shrinking.
LrisResult lris_iterate(const Lds& lds, const StateSet& target);
StateSet lris(const Lds& lds, const StateSet& target);

inline constexpr std::size_t kDefaultLrisBruteforceCap = 16;

/// Union of all robustly invariant subsets of `target`, by enumerating the
/// 2^|M| subsets. Throws CapExceeded when |M| > cap.
StateSet lris_bruteforce(const Lds& lds, const StateSet& target,
                         std::size_t cap = kDefaultLrisBruteforceCap);

}  // namespace ldstab
