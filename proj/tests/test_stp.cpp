#include <doctest.h>

#include <random>

#include "ldstab/errors.hpp"
#include "ldstab/stp.hpp"

using namespace ldstab;

namespace {

DenseIntMatrix random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<BigInt> entries(rows * cols);
  for (auto& e : entries) e = value(rng);
  return DenseIntMatrix(rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("kron of a row and a column") {
  const auto a = DenseIntMatrix::from_rows({{1, 2}});
  const auto b = DenseIntMatrix::from_rows({{3}, {4}});
  CHECK(kron(a, b) == DenseIntMatrix::from_rows({{3, 6}, {4, 8}}));
}

TEST_CASE("stp of basis vectors") {
  CHECK(stp(basis_vector(2, 1), basis_vector(2, 1)) == basis_vector(4, 1));
  CHECK(stp(basis_vector(2, 2), basis_vector(2, 1)) == basis_vector(4, 3));
  CHECK(stp(basis_vector(3, 2), basis_vector(2, 2)) == basis_vector(6, 4));
}

TEST_CASE("stp reduces to the ordinary product when dimensions match") {
  const auto a = DenseIntMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = DenseIntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(stp(a, b) == DenseIntMatrix::from_rows({{2, 1}, {4, 3}}));
}

TEST_CASE("stp with a non-matching inner dimension") {
  // [1 2 3 4] x [5; 6] = [1 2] * 5 + [3 4] * 6
  const auto a = DenseIntMatrix::from_rows({{1, 2, 3, 4}});
  const auto b = DenseIntMatrix::from_rows({{5}, {6}});
  CHECK(stp(a, b) == DenseIntMatrix::from_rows({{23, 34}}));
}

TEST_CASE("stp is associative") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_dense(rng, dim(rng), dim(rng));
    const auto b = random_dense(rng, dim(rng), dim(rng));
    const auto c = random_dense(rng, dim(rng), dim(rng));
    CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
  }
}

TEST_CASE("logic matrix times basis vector selects a column") {
  const LogicMatrix l(3, {2, 3, 1});
  for (std::size_t j = 1; j <= 3; ++j) {
    CHECK(stp(l.to_dense(), basis_vector(3, j)) == basis_vector(3, l[j]));
  }
}

TEST_CASE("khatri-rao of logic matrices") {
  const LogicMatrix a(2, {1, 2});
  const LogicMatrix b(2, {1, 1});
  CHECK(khatri_rao(a, b) == LogicMatrix(4, {1, 3}));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> pa(1, 3), pb(1, 4);
    std::vector<std::size_t> ca(5), cb(5);
    for (auto& x : ca) x = pa(rng);
    for (auto& x : cb) x = pb(rng);
    const LogicMatrix la(3, ca), lb(4, cb);
    const auto kr = khatri_rao(la, lb);
    CHECK(kr.to_dense() == khatri_rao(la.to_dense(), lb.to_dense()));
    for (std::size_t j = 1; j <= 5; ++j) {
      const auto column = basis_vector(5, j);
      CHECK(stp(kr.to_dense(), column) ==
            stp(stp(la.to_dense(), column), stp(lb.to_dense(), column)));
    }
  }
}

TEST_CASE("khatri-rao rejects mismatched column counts") {
  CHECK_THROWS_AS(khatri_rao(LogicMatrix(2, {1, 2}), LogicMatrix(2, {1})), InvalidArgument);
}

TEST_CASE("logic matrix validation") {
  CHECK_THROWS_AS(LogicMatrix(2, {1, 3}), InvalidArgument);
  CHECK_THROWS_AS(LogicMatrix(2, {0}), InvalidArgument);
  CHECK_THROWS_AS(LogicMatrix::from_dense(DenseIntMatrix::from_rows({{1, 1}, {1, 0}})),
                  InvalidArgument);
  CHECK(LogicMatrix::from_dense(DenseIntMatrix::from_rows({{0, 1}, {1, 0}})) ==
        LogicMatrix(2, {2, 1}));
}

TEST_CASE("logic value encoding") {
  const LogicValueMap map(3);
  CHECK(map.to_index(2) == 1);
  CHECK(map.to_index(0) == 3);
  CHECK(map.to_value(2) == 1);
  CHECK_THROWS_AS(map.to_index(3), InvalidArgument);
}

TEST_CASE("mixed radix index round trip") {
  const std::vector<std::size_t> domains{2, 3, 2};
  for (std::size_t i = 1; i <= 12; ++i) {
    const auto parts = split_index(domains, i);
    CHECK(product_index(domains, parts) == i);
  }
  const std::vector<std::size_t> first{1, 1, 2};
  CHECK(product_index(domains, first) == 2);
  const std::vector<std::size_t> last{2, 1, 1};
  CHECK(product_index(domains, last) == 7);
}

TEST_CASE("structural matrix of xor") {
  const std::vector<std::size_t> domains{2, 2};
  TruthTable table;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) table[{a, b}] = a ^ b;
  }
  CHECK(structural_matrix(domains, 2, table) == LogicMatrix(2, {2, 1, 1, 2}));
}

TEST_CASE("structural matrix of identity and constant") {
  const std::vector<std::size_t> domains{3};
  TruthTable identity, constant;
  for (std::size_t v = 0; v < 3; ++v) {
    identity[{v}] = v;
    constant[{v}] = 1;
  }
  CHECK(structural_matrix(domains, 3, identity) == LogicMatrix::identity(3));
  CHECK(structural_matrix(domains, 3, constant) == LogicMatrix(3, {2, 2, 2}));
}

TEST_CASE("structural matrix reproduces the table") {
  std::mt19937_64 rng(17);
  const std::vector<std::size_t> domains{2, 3};
  std::uniform_int_distribution<std::size_t> out(0, 2);
  TruthTable table;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 3; ++b) table[{a, b}] = out(rng);
  }
  const auto l = structural_matrix(domains, 3, table);
  const LogicValueMap v2(2), v3(3);
  for (const auto& [args, value] : table) {
    const auto x = stp(basis_vector(2, v2.to_index(args[0])), basis_vector(3, v3.to_index(args[1])));
    CHECK(stp(l.to_dense(), x) == basis_vector(3, v3.to_index(value)));
  }
}

TEST_CASE("structural matrix errors") {
  const std::vector<std::size_t> domains{2};
  TruthTable missing{{{0}, 1}};
  CHECK_THROWS_AS(structural_matrix(domains, 2, missing), InvalidArgument);
  TruthTable out_of_range{{{0}, 2}, {{1}, 0}};
  CHECK_THROWS_AS(structural_matrix(domains, 2, out_of_range), InvalidArgument);
  TruthTable wrong_arity{{{0, 0}, 1}, {{1}, 0}};
  CHECK_THROWS_AS(structural_matrix(domains, 2, wrong_arity), InvalidArgument);
}
