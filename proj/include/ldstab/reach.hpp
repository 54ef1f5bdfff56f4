#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldstab/model.hpp"
#include "ldstab/numeric.hpp"
#include "ldstab/state_set.hpp"

namespace ldstab {

/// n x n bit matrix, (row, col) 1-based. Bit (i, j) means "i from j".
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n = 0);

  std::size_t dim() const { return n_; }
  bool test(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col);

  /// Rows set in column `col` (the states reachable from `col`).
  StateSet column(std::size_t col) const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  friend BoolMatrix reachability_matrix_bool(const Lds& lds);

  std::size_t words_per_column() const { return (n_ + 63) / 64; }

  std::size_t n_;
  // Column-major: each column is a bitset over target rows.
  std::vector<std::uint64_t> words_;
};

/// Q = L_1 + ... + L_m.
CountMatrix count_matrix(const Lds& lds);

/// Q^k, k >= 1. [Q^k]_{i,j} counts the length-k signals driving j to i.
CountMatrix count_matrix_power(const Lds& lds, std::size_t k);

/// Zero pattern of R = Gamma + ... + Gamma^n, computed as a Boolean
/// closure that stops as soon as it reaches a fixpoint.
BoolMatrix reachability_matrix_bool(const Lds& lds);

/// sum_{k=1}^{max_power} Q^k / m^k exactly; max_power = 0 means n.
RationalMatrix reachability_matrix_weighted(const Lds& lds, std::size_t max_power = 0);

/// States i with [R]_{i,i} > 0.
StateSet self_reachable_set(const Lds& lds);
StateSet self_reachable_set(const BoolMatrix& reach);

/// With k: k-step reachability. Without: reachability in one or more steps.
bool is_reachable(const Lds& lds, State from, State to, std::optional<std::size_t> k = std::nullopt);

struct Edge {
  State from;
  std::size_t subnetwork;
  State to;

  friend bool operator==(const Edge&, const Edge&) = default;
};
using Path = std::vector<Edge>;

/// Shortest path of length >= 1 from `from` to `to`. Breadth-first with
/// successors visited in increasing state order; each edge carries the
/// lowest subnetwork index realising it.
std::optional<Path> find_path(const Lds& lds, State from, State to);

/// True when the path is nonempty, contiguous and every edge is a real
/// transition of `lds`.
bool replays(const Lds& lds, const Path& path);

/// "3 -1-> 4 -2-> 5"
std::string format_path(const Path& path);

/// State transition graph: edge (x, y) for every y = step(x, j), labelled
/// with all such j in increasing order. Ordered by (x, y).
using Stg = std::map<std::pair<State, State>, std::vector<std::size_t>>;
Stg state_transition_graph(const Lds& lds);

struct DotHighlights {
  std::optional<StateSet> target;
  std::optional<StateSet> self_reachable;
  std::optional<StateSet> lris;
};

/// Graphviz rendering of the STG. Output is byte-deterministic.
std::string stg_dot(const Lds& lds, const DotHighlights& highlights = {},
                    const std::string& graph_name = "stg");

}  // namespace ldstab
