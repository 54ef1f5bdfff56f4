#pragma once

// Shared fixtures, random instance generators and independent graph
// oracles for the test suites. Nothing here calls the reachability code it
// is used to check.

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ldstab/model.hpp"
#include "ldstab/state_set.hpp"

namespace ldstab::testing {

inline std::string data_path(const std::string& file) {
  return std::string(LDSTAB_DATA_DIR) + "/" + file;
}

inline Network fixture(const std::string& name) { return load_network(data_path(name + ".json")); }

inline Lds random_lds(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                      std::size_t min_n = 1) {
  std::uniform_int_distribution<std::size_t> pick_n(min_n, max_n);
  std::uniform_int_distribution<std::size_t> pick_m(1, max_m);
  const std::size_t n = pick_n(rng);
  const std::size_t m = pick_m(rng);
  std::uniform_int_distribution<std::size_t> pick_state(1, n);
  std::vector<LogicMatrix> maps;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::size_t> cols(n);
    for (auto& c : cols) c = pick_state(rng);
    maps.emplace_back(n, std::move(cols));
  }
  return Lds(std::move(maps));
}

inline StateSet random_set(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution in(p);
  StateSet set(n);
  for (State x = 1; x <= n; ++x) {
    if (in(rng)) set.insert(x);
  }
  return set;
}

inline std::vector<State> successors_of(const Lds& lds, State x) {
  std::vector<State> out;
  for (const auto& map : lds.maps()) out.push_back(map.columns()[x - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// States reachable from `from` in one or more steps, by plain BFS.
inline StateSet bfs_reachable(const Lds& lds, State from) {
  const std::size_t n = lds.state_count();
  StateSet seen(n);
  std::deque<State> queue;
  for (State y : successors_of(lds, from)) {
    if (!seen.contains(y)) {
      seen.insert(y);
      queue.push_back(y);
    }
  }
  while (!queue.empty()) {
    const State x = queue.front();
    queue.pop_front();
    for (State y : successors_of(lds, x)) {
      if (!seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

/// States on a directed cycle: members of a nontrivial strongly connected
/// component, or carrying a self-loop (Tarjan).
inline StateSet cycle_states(const Lds& lds) {
  const std::size_t n = lds.state_count();
  std::vector<int> index(n + 1, -1), low(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<State> stack;
  StateSet out(n);
  int counter = 0;

  std::function<void(State)> connect = [&](State v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (State w : successors_of(lds, v)) {
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<State> component;
    State w = 0;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      component.push_back(w);
    } while (w != v);
    const auto succ = successors_of(lds, v);
    const bool self_loop = std::find(succ.begin(), succ.end(), v) != succ.end();
    if (component.size() > 1 || self_loop) {
      for (State s : component) out.insert(s);
    }
  };
  for (State v = 1; v <= n; ++v) {
    if (index[v] < 0) connect(v);
  }
  return out;
}

/// Is some state of `target` entered again by a signal word of length
/// 1..n started at it? Enumerates words explicitly.
inline bool returns_by_enumeration(const Lds& lds, State start) {
  const std::size_t n = lds.state_count();
  std::vector<State> frontier{start};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<State> next;
    for (State x : frontier) {
      for (const auto& map : lds.maps()) next.push_back(map.columns()[x - 1]);
    }
    if (std::find(next.begin(), next.end(), start) != next.end()) return true;
    frontier = std::move(next);
  }
  return false;
}

}  // namespace ldstab::testing
