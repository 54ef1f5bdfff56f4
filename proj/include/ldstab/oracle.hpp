#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "ldstab/model.hpp"
#include "ldstab/numeric.hpp"
#include "ldstab/state_set.hpp"

namespace ldstab {

struct OracleOptions {
  /// Largest m^k (signals per initial state) the enumeration accepts.
  std::uint64_t cap = 10'000'000;
  /// Worker threads sharing the first-step branches; 1 means sequential.
  unsigned workers = 1;
};

/// Entry (i, j) = number of length-k switching signals that drive state j
/// to state i, counted by running every signal. Throws CapExceeded when
/// m^k > options.cap.
CountMatrix enumerate_pattern_counts(const Lds& lds, std::size_t k,
                                     const OracleOptions& options = {});

struct OracleReport {
  std::size_t k = 0;
  CountMatrix enumerated;
  CountMatrix power;
  bool equal = false;
  /// (row, col) of the first differing entry in row-major order.
  std::optional<std::pair<State, State>> first_mismatch;
};

/// Compares enumeration against Q^k.
OracleReport verify_counts(const Lds& lds, std::size_t k, const OracleOptions& options = {});

/// xorshift64* with splitmix64 seeding:
///   state = splitmix64(seed), or 0x9E3779B97F4A7C15 if that is zero
///   x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// (next() >> 11) * 2^-53, uniform on [0, 1).
  double uniform();
  /// Index in 1..cumulative.size(): the first j whose cumulative
  /// probability exceeds uniform().
  std::size_t pick(std::span<const double> cumulative);

 private:
  std::uint64_t state_;
};

/// Trajectory of length horizon + 1 under a signal drawn i.i.d. from pdv.
Trajectory simulate_random(const Lds& lds, State x0, std::span<const Rational> pdv,
                           std::size_t horizon, std::uint64_t seed);

struct MonteCarloEstimate {
  std::size_t samples = 0;
  std::size_t hits = 0;
  double estimate = 0.0;
  /// sqrt(p (1 - p) / samples) with p the estimate.
  double standard_error = 0.0;
};

/// Fraction of uniformly switched length-k runs from x0 that end in target.
MonteCarloEstimate monte_carlo_ratio(const Lds& lds, State x0, const StateSet& target,
                                     std::size_t k, std::size_t samples, std::uint64_t seed);

}  // namespace ldstab
