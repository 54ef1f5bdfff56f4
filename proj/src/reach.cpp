#include "ldstab/reach.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace ldstab {

BoolMatrix::BoolMatrix(std::size_t n) : n_(n), words_(n * ((n + 63) / 64), 0) {}

bool BoolMatrix::test(std::size_t row, std::size_t col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw InvalidArgument("bit (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside 1.." + std::to_string(n_));
  }
  const std::size_t bit = row - 1;
  return (words_[(col - 1) * words_per_column() + bit / 64] >> (bit % 64)) & 1U;
}

void BoolMatrix::set(std::size_t row, std::size_t col) {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw InvalidArgument("bit (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside 1.." + std::to_string(n_));
  }
  const std::size_t bit = row - 1;
  words_[(col - 1) * words_per_column() + bit / 64] |= std::uint64_t{1} << (bit % 64);
}

StateSet BoolMatrix::column(std::size_t col) const {
  StateSet out(n_);
  for (std::size_t row = 1; row <= n_; ++row) {
    if (test(row, col)) out.insert(row);
  }
  return out;
}

CountMatrix count_matrix(const Lds& lds) {
  const std::size_t n = lds.state_count();
  CountMatrix q(n);
  for (const auto& map : lds.maps()) {
    for (State x = 1; x <= n; ++x) q.at(map[x], x) += 1;
  }
  return q;
}

namespace {

/// Q * P: the mass at row r of each column moves to every image L_j(r).
CountMatrix left_multiply_by_q(const Lds& lds, const CountMatrix& power) {
  const std::size_t n = lds.state_count();
  CountMatrix next(n);
  for (State col = 1; col <= n; ++col) {
    for (State r = 1; r <= n; ++r) {
      const BigInt& mass = power.at(r, col);
      if (mass.is_zero()) continue;
      for (const auto& map : lds.maps()) next.at(map[r], col) += mass;
    }
  }
  return next;
}

}  // namespace

CountMatrix count_matrix_power(const Lds& lds, std::size_t k) {
  if (k == 0) throw InvalidArgument("matrix power needs k >= 1");
  CountMatrix power = count_matrix(lds);
  for (std::size_t step = 1; step < k; ++step) power = left_multiply_by_q(lds, power);
  return power;
}

BoolMatrix reachability_matrix_bool(const Lds& lds) {
  const std::size_t n = lds.state_count();
  BoolMatrix reach(n);
  for (const auto& map : lds.maps()) {
    for (State x = 1; x <= n; ++x) reach.set(map[x], x);
  }

  const std::size_t words = reach.words_per_column();
  auto column = [&](std::size_t col) { return reach.words_.begin() + (col - 1) * words; };

  // Path doubling: col_j |= col_x for every x already in col_j, until nothing
  // changes. The result contains one-step edges and is closed under
  // composition, so it is the >= 1-step closure.
  bool changed = true;
  while (changed) {
    changed = false;
    for (State j = 1; j <= n; ++j) {
      const auto cj = column(j);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = cj[w];
        while (bits != 0) {
          const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits)) + 1;
          bits &= bits - 1;
          if (x == j) continue;
          const auto cx = column(x);
          for (std::size_t v = 0; v < words; ++v) {
            const std::uint64_t merged = cj[v] | cx[v];
            if (merged != cj[v]) {
              cj[v] = merged;
              changed = true;
            }
          }
        }
      }
    }
  }
  return reach;
}

RationalMatrix reachability_matrix_weighted(const Lds& lds, std::size_t max_power) {
  const std::size_t n = lds.state_count();
  const std::size_t powers = max_power == 0 ? n : max_power;
  const BigInt m = lds.subnetwork_count();

  RationalMatrix sum(n);
  CountMatrix power = count_matrix(lds);
  BigInt scale = m;
  for (std::size_t k = 1; k <= powers; ++k) {
    if (k > 1) {
      power = left_multiply_by_q(lds, power);
      scale *= m;
    }
    for (State i = 1; i <= n; ++i) {
      for (State j = 1; j <= n; ++j) {
        if (!power.at(i, j).is_zero()) sum.at(i, j) += Rational(power.at(i, j), scale);
      }
    }
  }
  return sum;
}

StateSet self_reachable_set(const BoolMatrix& reach) {
  StateSet out(reach.dim());
  for (State i = 1; i <= reach.dim(); ++i) {
    if (reach.test(i, i)) out.insert(i);
  }
  return out;
}

StateSet self_reachable_set(const Lds& lds) {
  return self_reachable_set(reachability_matrix_bool(lds));
}

bool is_reachable(const Lds& lds, State from, State to, std::optional<std::size_t> k) {
  lds.check_state(from);
  lds.check_state(to);
  if (!k) return find_path(lds, from, to).has_value();
  if (*k == 0) throw InvalidArgument("step count must be >= 1");

  const std::size_t n = lds.state_count();
  std::vector<bool> frontier(n + 1, false);
  frontier[from] = true;
  for (std::size_t step = 0; step < *k; ++step) {
    std::vector<bool> next(n + 1, false);
    for (State x = 1; x <= n; ++x) {
      if (!frontier[x]) continue;
      for (const auto& map : lds.maps()) next[map[x]] = true;
    }
    frontier = std::move(next);
  }
  return frontier[to];
}

namespace {

/// (successor, lowest subnetwork) pairs in increasing successor order.
std::vector<std::pair<State, std::size_t>> successors(const Lds& lds, State x) {
  std::vector<std::pair<State, std::size_t>> out;
  for (std::size_t j = 1; j <= lds.subnetwork_count(); ++j) {
    const State y = lds.map(j)[x];
    if (std::none_of(out.begin(), out.end(), [y](const auto& e) { return e.first == y; })) {
      out.emplace_back(y, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Path> find_path(const Lds& lds, State from, State to) {
  lds.check_state(from);
  lds.check_state(to);
  const std::size_t n = lds.state_count();

  std::vector<bool> visited(n + 1, false);
  std::vector<Edge> parent(n + 1, Edge{0, 0, 0});
  std::deque<State> queue{from};
  visited[from] = true;

  while (!queue.empty()) {
    const State x = queue.front();
    queue.pop_front();
    for (const auto& [y, j] : successors(lds, x)) {
      if (y == to) {
        Path path{Edge{x, j, y}};
        for (State at = x; at != from; at = parent[at].from) path.push_back(parent[at]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (visited[y]) continue;
      visited[y] = true;
      parent[y] = Edge{x, j, y};
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

bool replays(const Lds& lds, const Path& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Edge& e = path[i];
    if (e.subnetwork < 1 || e.subnetwork > lds.subnetwork_count()) return false;
    if (e.from < 1 || e.from > lds.state_count()) return false;
    if (lds.step(e.from, e.subnetwork) != e.to) return false;
    if (i > 0 && path[i - 1].to != e.from) return false;
  }
  return true;
}

std::string format_path(const Path& path) {
  if (path.empty()) return "";
  std::string out = std::to_string(path.front().from);
  for (const Edge& e : path) {
    out += " -" + std::to_string(e.subnetwork) + "-> " + std::to_string(e.to);
  }
  return out;
}

Stg state_transition_graph(const Lds& lds) {
  Stg stg;
  for (State x = 1; x <= lds.state_count(); ++x) {
    for (std::size_t j = 1; j <= lds.subnetwork_count(); ++j) {
      stg[{x, lds.map(j)[x]}].push_back(j);
    }
  }
  return stg;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string stg_dot(const Lds& lds, const DotHighlights& highlights,
                    const std::string& graph_name) {
  const std::size_t n = lds.state_count();
  for (const auto* set : {&highlights.target, &highlights.self_reachable, &highlights.lris}) {
    if (*set && set->value().universe() != n) {
      throw InvalidArgument("highlight set is over " + std::to_string(set->value().universe()) +
                            " states, the system has " + std::to_string(n));
    }
  }

  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  node [shape=circle];\n";
  if (highlights.target) out << "  // target set: filled green\n";
  if (highlights.self_reachable) out << "  // self-reachable states: red outline\n";
  if (highlights.lris) out << "  // largest robustly invariant subset: double circle\n";

  for (State x = 1; x <= n; ++x) {
    std::vector<std::string> attrs;
    if (highlights.target && highlights.target->contains(x)) {
      attrs.emplace_back("style=filled");
      attrs.emplace_back("fillcolor=\"palegreen\"");
    }
    if (highlights.self_reachable && highlights.self_reachable->contains(x)) {
      attrs.emplace_back("color=\"red\"");
      attrs.emplace_back("penwidth=2");
    }
    if (highlights.lris && highlights.lris->contains(x)) attrs.emplace_back("peripheries=2");

    out << "  " << x;
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }

  for (const auto& [edge, labels] : state_transition_graph(lds)) {
    std::string label;
    for (std::size_t j : labels) label += (label.empty() ? "" : ",") + std::to_string(j);
    out << "  " << edge.first << " -> " << edge.second << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ldstab
