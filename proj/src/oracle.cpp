#include "ldstab/oracle.hpp"

#include <cmath>
#include <future>
#include <string>
#include <vector>

#include "ldstab/reach.hpp"

namespace ldstab {

namespace {

/// Depth-first walk over the signal tree below `state`, `depth` steps left.
/// Each edge is applied once and shared by every signal with that prefix.
void count_leaves(const Lds& lds, State state, std::size_t depth, std::vector<std::uint64_t>& hits) {
  if (depth == 0) {
    ++hits[state - 1];
    return;
  }
  for (const auto& map : lds.maps()) count_leaves(lds, map[state], depth - 1, hits);
}

/// Counts for one initial state: hits[i - 1] signals end in i.
std::vector<std::uint64_t> enumerate_from(const Lds& lds, State start, std::size_t k) {
  std::vector<std::uint64_t> hits(lds.state_count(), 0);
  count_leaves(lds, start, k, hits);
  return hits;
}

/// Same, sharded by the first switching value.
std::vector<std::uint64_t> enumerate_from_sharded(const Lds& lds, State start, std::size_t k,
                                                  unsigned workers) {
  std::vector<std::future<std::vector<std::uint64_t>>> shards;
  std::vector<std::uint64_t> hits(lds.state_count(), 0);
  for (std::size_t j = 1; j <= lds.subnetwork_count(); ++j) {
    const State next = lds.map(j)[start];
    shards.push_back(std::async(std::launch::async, [&lds, next, k] {
      return enumerate_from(lds, next, k - 1);
    }));
    if (shards.size() >= workers || j == lds.subnetwork_count()) {
      for (auto& shard : shards) {
        const auto part = shard.get();
        for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += part[i];
      }
      shards.clear();
    }
  }
  return hits;
}

void check_cap(const Lds& lds, std::size_t k, std::uint64_t cap) {
  const std::uint64_t m = lds.subnetwork_count();
  std::uint64_t patterns = 1;
  for (std::size_t step = 0; step < k; ++step) {
    if (patterns > cap / m) {
      throw CapExceeded(std::to_string(m) + "^" + std::to_string(k) +
                        " switching patterns exceed the cap of " + std::to_string(cap));
    }
    patterns *= m;
  }
}

}  // namespace

CountMatrix enumerate_pattern_counts(const Lds& lds, std::size_t k, const OracleOptions& options) {
  if (k == 0) throw InvalidArgument("pattern length must be >= 1");
  check_cap(lds, k, options.cap);
  const std::size_t n = lds.state_count();
  CountMatrix counts(n);
  for (State start = 1; start <= n; ++start) {
    const auto hits = options.workers > 1 ? enumerate_from_sharded(lds, start, k, options.workers)
                                          : enumerate_from(lds, start, k);
    for (State i = 1; i <= n; ++i) counts.at(i, start) = hits[i - 1];
  }
  return counts;
}

OracleReport verify_counts(const Lds& lds, std::size_t k, const OracleOptions& options) {
  OracleReport report;
  report.k = k;
  report.enumerated = enumerate_pattern_counts(lds, k, options);
  report.power = count_matrix_power(lds, k);
  const std::size_t n = lds.state_count();
  for (State i = 1; i <= n && !report.first_mismatch; ++i) {
    for (State j = 1; j <= n; ++j) {
      if (report.enumerated.at(i, j) != report.power.at(i, j)) {
        report.first_mismatch = std::make_pair(i, j);
        break;
      }
    }
  }
  report.equal = !report.first_mismatch.has_value();
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<double> cumulative(std::span<const Rational> pdv, std::size_t m) {
  if (pdv.size() != m) {
    throw InvalidArgument("distribution has " + std::to_string(pdv.size()) +
                          " entries, expected " + std::to_string(m));
  }
  Rational total = 0;
  std::vector<double> out;
  out.reserve(m);
  for (const Rational& p : pdv) {
    if (p <= 0) throw InvalidArgument("distribution entries must be strictly positive");
    total += p;
    out.push_back(to_double(total));
  }
  if (total != 1) throw InvalidArgument("distribution sums to " + to_fraction_string(total));
  return out;
}

}  // namespace

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t Xorshift64Star::pick(std::span<const double> cumulative) {
  const double u = uniform();
  for (std::size_t j = 0; j < cumulative.size(); ++j) {
    if (u < cumulative[j]) return j + 1;
  }
  return cumulative.size();
}

Trajectory simulate_random(const Lds& lds, State x0, std::span<const Rational> pdv,
                           std::size_t horizon, std::uint64_t seed) {
  lds.check_state(x0);
  const auto cum = cumulative(pdv, lds.subnetwork_count());
  Xorshift64Star rng(seed);
  Trajectory states{x0};
  states.reserve(horizon + 1);
  for (std::size_t t = 0; t < horizon; ++t) states.push_back(lds.step(states.back(), rng.pick(cum)));
  return states;
}

MonteCarloEstimate monte_carlo_ratio(const Lds& lds, State x0, const StateSet& target,
                                     std::size_t k, std::size_t samples, std::uint64_t seed) {
  lds.check_state(x0);
  if (target.universe() != lds.state_count()) {
    throw InvalidArgument("target set is over " + std::to_string(target.universe()) +
                          " states, the system has " + std::to_string(lds.state_count()));
  }
  if (samples == 0) throw InvalidArgument("need at least one sample");
  if (k == 0) throw InvalidArgument("run length must be >= 1");

  const std::size_t m = lds.subnetwork_count();
  std::vector<double> cum(m);
  for (std::size_t j = 0; j < m; ++j) cum[j] = static_cast<double>(j + 1) / static_cast<double>(m);
  cum.back() = 1.0;

  Xorshift64Star rng(seed);
  MonteCarloEstimate out;
  out.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    State x = x0;
    for (std::size_t t = 0; t < k; ++t) x = lds.step(x, rng.pick(cum));
    if (target.contains(x)) ++out.hits;
  }
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.standard_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace ldstab
