#include <doctest.h>

#include <random>

#include "ldstab/errors.hpp"
#include "ldstab/reach.hpp"
#include "support.hpp"

using namespace ldstab;
using ldstab::testing::fixture;

TEST_CASE("count matrix entries") {
  const auto e1 = fixture("e1");
  const auto q = count_matrix(e1.lds);
  CHECK(q.at(2, 1) == 1);
  CHECK(q.at(5, 1) == 1);
  CHECK(q.at(3, 4) == 2);
  CHECK(q.at(1, 1) == 0);
  const auto q2 = count_matrix_power(e1.lds, 2);
  CHECK(q2.at(3, 1) == 1);
  CHECK(q2.at(5, 1) == 1);
  CHECK(q2.at(8, 1) == 1);
  CHECK(q2.at(6, 1) == 1);
  CHECK_THROWS_AS(count_matrix_power(e1.lds, 0), InvalidArgument);
}

TEST_CASE("columns of Q^k sum to m^k") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 7, 3);
    const std::size_t m = lds.subnetwork_count();
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto qk = count_matrix_power(lds, k);
      BigInt expected = 1;
      for (std::size_t i = 0; i < k; ++i) expected *= m;
      for (State j = 1; j <= lds.state_count(); ++j) CHECK(qk.column_sum(j) == expected);
    }
  }
}

TEST_CASE("reachability pattern agrees with breadth-first search") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 70, 3);
    const auto reach = reachability_matrix_bool(lds);
    for (State j = 1; j <= lds.state_count(); ++j) {
      CHECK(reach.column(j) == ldstab::testing::bfs_reachable(lds, j));
    }
  }
}

TEST_CASE("self-reachable states are the states on cycles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 40, 2);
    CHECK(self_reachable_set(lds) == ldstab::testing::cycle_states(lds));
  }
  CHECK(self_reachable_set(fixture("e1").lds) == StateSet(8, {3, 4, 6, 7}));
  CHECK(self_reachable_set(fixture("e2").lds) == StateSet(8, {6, 7}));
  CHECK(self_reachable_set(fixture("e3").lds) == StateSet(8, {2, 3, 6, 7}));
}

TEST_CASE("powers up to n suffice for reachability") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 6, 2);
    const std::size_t n = lds.state_count();
    const auto upto_n = reachability_matrix_weighted(lds);
    const auto upto_2n = reachability_matrix_weighted(lds, 2 * n);
    for (State i = 1; i <= n; ++i) {
      for (State j = 1; j <= n; ++j) CHECK((upto_n.at(i, j) > 0) == (upto_2n.at(i, j) > 0));
    }
  }
}

TEST_CASE("weighted reachability entries") {
  const auto r = reachability_matrix_weighted(fixture("e1").lds);
  CHECK(r.at(2, 1) == Rational(1, 2));
  CHECK(r.at(1, 1) == 0);
  CHECK(r.at(3, 4) == Rational(15, 8));
  CHECK(r.at(5, 6) == 0);
}

TEST_CASE("k-step and unbounded reachability") {
  const auto e1 = fixture("e1");
  CHECK(is_reachable(e1.lds, 1, 3, 2));
  CHECK_FALSE(is_reachable(e1.lds, 1, 3, 1));
  CHECK(is_reachable(e1.lds, 1, 7));
  CHECK_FALSE(is_reachable(e1.lds, 6, 5));
  CHECK_FALSE(is_reachable(e1.lds, 1, 1));
  CHECK(is_reachable(e1.lds, 3, 3));
}

TEST_CASE("shortest paths") {
  const auto e1 = fixture("e1");
  const auto path = find_path(e1.lds, 1, 4);
  REQUIRE(path);
  CHECK(*path == Path{{1, 1, 2}, {2, 1, 3}, {3, 1, 4}});
  CHECK(format_path(*path) == "1 -1-> 2 -1-> 3 -1-> 4");
  CHECK(replays(e1.lds, *path));
  CHECK_FALSE(find_path(e1.lds, 6, 1));
  const auto loop = find_path(e1.lds, 3, 3);
  REQUIRE(loop);
  CHECK(*loop == Path{{3, 1, 4}, {4, 1, 3}});
  CHECK_FALSE(replays(e1.lds, Path{{1, 2, 2}}));
}

TEST_CASE("paths exist exactly when states are reachable") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto lds = ldstab::testing::random_lds(rng, 12, 3);
    for (State from = 1; from <= lds.state_count(); ++from) {
      const auto reachable = ldstab::testing::bfs_reachable(lds, from);
      for (State to = 1; to <= lds.state_count(); ++to) {
        const auto path = find_path(lds, from, to);
        CHECK(path.has_value() == reachable.contains(to));
        if (path) {
          CHECK(replays(lds, *path));
          CHECK(path->size() <= lds.state_count());
        }
      }
    }
  }
}

TEST_CASE("state transition graph in dot") {
  const auto e2 = fixture("e2");
  const auto graph = state_transition_graph(e2.lds);
  CHECK(graph.at({6, 7}) == std::vector<std::size_t>{1, 2});
  CHECK(graph.at({1, 2}) == std::vector<std::size_t>{1});

  const std::string expected =
      "digraph \"e2\" {\n"
      "  node [shape=circle];\n"
      "  1;\n  2;\n  3;\n  4;\n  5;\n  6;\n  7;\n  8;\n"
      "  1 -> 2 [label=\"1\"];\n"
      "  1 -> 5 [label=\"2\"];\n"
      "  2 -> 3 [label=\"1\"];\n"
      "  2 -> 5 [label=\"2\"];\n"
      "  3 -> 5 [label=\"2\"];\n"
      "  3 -> 6 [label=\"1\"];\n"
      "  4 -> 3 [label=\"1\"];\n"
      "  4 -> 7 [label=\"2\"];\n"
      "  5 -> 6 [label=\"2\"];\n"
      "  5 -> 8 [label=\"1\"];\n"
      "  6 -> 7 [label=\"1,2\"];\n"
      "  7 -> 6 [label=\"1\"];\n"
      "  7 -> 7 [label=\"2\"];\n"
      "  8 -> 6 [label=\"2\"];\n"
      "  8 -> 7 [label=\"1\"];\n"
      "}\n";
  CHECK(stg_dot(e2.lds, {}, "e2") == expected);

  DotHighlights marks;
  marks.target = StateSet(8, {3, 4, 6, 7, 8});
  marks.self_reachable = StateSet(8, {6, 7});
  marks.lris = StateSet(8, {6, 7, 8});
  const auto dot = stg_dot(e2.lds, marks, "e2");
  CHECK(dot.find("  4 [style=filled, fillcolor=\"palegreen\"];\n") != std::string::npos);
  CHECK(dot.find("  6 [style=filled, fillcolor=\"palegreen\", color=\"red\", penwidth=2, "
                 "peripheries=2];\n") != std::string::npos);
  CHECK(dot.find("  5;\n") != std::string::npos);
}
