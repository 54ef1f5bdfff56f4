#include <doctest.h>

#include <random>

#include "ldstab/errors.hpp"
#include "ldstab/invariant.hpp"
#include "support.hpp"

using namespace ldstab;
using ldstab::testing::fixture;

TEST_CASE("largest invariant subsets of the fixtures") {
  for (const char* name : {"e1", "e2"}) {
    const auto net = fixture(name);
    CHECK(lris(net.lds, *net.target) == StateSet(8, {6, 7, 8}));
  }
  const auto e3 = fixture("e3");
  CHECK(lris(e3.lds, *e3.target) == StateSet(8, {4, 6, 7, 8}));
}

TEST_CASE("robust invariance") {
  const auto e1 = fixture("e1");
  CHECK(is_robustly_invariant(e1.lds, StateSet(8, {6, 7})));
  CHECK_FALSE(is_robustly_invariant(e1.lds, StateSet(8, {3, 4})));
  CHECK(is_robustly_invariant(e1.lds, StateSet(8)));
  CHECK(is_robustly_invariant(e1.lds, StateSet::full(8)));
}

TEST_CASE("iteration agrees with subset enumeration") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 12, 3);
    const auto target = ldstab::testing::random_set(rng, lds.state_count(), 0.7);
    const auto result = lris_iterate(lds, target);
    CHECK(result.set == lris_bruteforce(lds, target));
    CHECK(result.set.is_subset_of(target));
    CHECK(is_robustly_invariant(lds, result.set));
    CHECK(result.rounds <= target.count());
    CHECK(lris(lds, result.set) == result.set);
  }
}

TEST_CASE("largest invariant subset is monotone in the target") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 10, 2);
    const auto big = ldstab::testing::random_set(rng, lds.state_count(), 0.8);
    const auto small = big & ldstab::testing::random_set(rng, lds.state_count(), 0.8);
    CHECK(lris(lds, small).is_subset_of(lris(lds, big)));
  }
}

TEST_CASE("subset enumeration cap") {
  const Lds lds({LogicMatrix::identity(20)});
  CHECK_THROWS_AS(lris_bruteforce(lds, StateSet::full(20)), CapExceeded);
  CHECK(lris_bruteforce(lds, StateSet::full(20), 20) == StateSet::full(20));
}
