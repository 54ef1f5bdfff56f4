#include "ldstab/invariant.hpp"

#include <cstdint>
#include <string>

namespace ldstab {

namespace {

void check_universe(const Lds& lds, const StateSet& set) {
  if (set.universe() != lds.state_count()) {
    throw InvalidArgument("state set is over " + std::to_string(set.universe()) +
                          " states, the system has " + std::to_string(lds.state_count()));
  }
}

bool closed_at(const Lds& lds, const StateSet& set, State x) {
  for (const auto& map : lds.maps()) {
    if (!set.contains(map[x])) return false;
  }
  return true;
}

}  // namespace

bool is_robustly_invariant(const Lds& lds, const StateSet& set) {
  check_universe(lds, set);
  for (State x : set.members()) {
    if (!closed_at(lds, set, x)) return false;
  }
  return true;
}

LrisResult lris_iterate(const Lds& lds, const StateSet& target) {
  check_universe(lds, target);
  LrisResult result{target, 0};
  while (!result.set.empty()) {
    ++result.rounds;
    StateSet next = result.set;
    for (State x : result.set.members()) {
      if (!closed_at(lds, result.set, x)) next.erase(x);
    }
    if (next == result.set) break;
    result.set = std::move(next);
  }
  return result;
}

StateSet lris(const Lds& lds, const StateSet& target) { return lris_iterate(lds, target).set; }

StateSet lris_bruteforce(const Lds& lds, const StateSet& target, std::size_t cap) {
  check_universe(lds, target);
  const auto members = target.members();
  if (members.size() > cap) {
    throw CapExceeded("brute-force LRIS over " + std::to_string(members.size()) +
                      " states exceeds the cap of " + std::to_string(cap));
  }
  if (members.size() >= 64) throw CapExceeded("brute-force LRIS limited to 63 states");

  StateSet uni(lds.state_count());
  const std::uint64_t subsets = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    StateSet candidate(lds.state_count());
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (mask >> b & 1U) candidate.insert(members[b]);
    }
    if (is_robustly_invariant(lds, candidate)) uni = uni | candidate;
  }
  return uni;
}

}  // namespace ldstab
