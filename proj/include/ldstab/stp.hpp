#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "ldstab/numeric.hpp"

namespace ldstab {

/// Dense integer matrix, row-major, exact entries. Indices are 1-based.
class DenseIntMatrix {
 public:
  /// rows x cols zero matrix.
  DenseIntMatrix(std::size_t rows, std::size_t cols);
  DenseIntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static DenseIntMatrix identity(std::size_t n);
  /// Convenience for literals in tests and fixtures.
  static DenseIntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t row, std::size_t col);
  const BigInt& at(std::size_t row, std::size_t col) const;

  DenseIntMatrix column(std::size_t col) const;

  friend bool operator==(const DenseIntMatrix&, const DenseIntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

/// Ordinary product; requires a.cols() == b.rows().
DenseIntMatrix multiply(const DenseIntMatrix& a, const DenseIntMatrix& b);

DenseIntMatrix kron(const DenseIntMatrix& a, const DenseIntMatrix& b);

/// Semi-tensor product (A (x) I_{l/n}) (B (x) I_{l/p}), l = lcm(cols(A), rows(B)).
DenseIntMatrix stp(const DenseIntMatrix& a, const DenseIntMatrix& b);

/// Column-wise STP. Throws InvalidArgument when column counts differ.
DenseIntMatrix khatri_rao(const DenseIntMatrix& a, const DenseIntMatrix& b);

/// delta_n^i as an n x 1 column.
DenseIntMatrix basis_vector(std::size_t n, std::size_t i);

/// Matrix whose every column is a canonical basis vector, stored as the
/// list of column indices delta_dim[i_1, ..., i_k].
class LogicMatrix {
 public:
  LogicMatrix(std::size_t dim, std::vector<std::size_t> cols);

  /// Throws InvalidArgument unless every column of `dense` is a basis vector.
  static LogicMatrix from_dense(const DenseIntMatrix& dense);
  static LogicMatrix identity(std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cols_.size(); }

  /// Index of the nonzero row in column j (1-based).
  std::size_t operator[](std::size_t j) const;
  const std::vector<std::size_t>& columns() const { return cols_; }

  DenseIntMatrix to_dense() const;

  friend bool operator==(const LogicMatrix&, const LogicMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> cols_;
};

/// K-R product of logic matrices without densifying: column index
/// (i_a - 1) * b.dim() + i_b.
LogicMatrix khatri_rao(const LogicMatrix& a, const LogicMatrix& b);

/// Vector form of an n-valued logic value: alpha <-> delta_n^{n - alpha}.
class LogicValueMap {
 public:
  explicit LogicValueMap(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t to_index(std::size_t value) const;
  std::size_t to_value(std::size_t index) const;

 private:
  std::size_t n_;
};

/// Index of alpha_1 |x alpha_2 |x ... |x alpha_k for the given per-node
/// basis indices (mixed radix, first factor most significant).
std::size_t product_index(std::span<const std::size_t> domains, std::span<const std::size_t> indices);
/// Inverse of product_index.
std::vector<std::size_t> split_index(std::span<const std::size_t> domains, std::size_t index);

/// Argument tuple (logic values) -> logic value.
using TruthTable = std::map<std::vector<std::size_t>, std::size_t>;

/// L_f with f(a_1..a_k) = L_f |x a_1 |x ... |x a_k in vector form.
/// Throws InvalidArgument on a missing tuple or an out-of-domain value.
LogicMatrix structural_matrix(std::span<const std::size_t> domains, std::size_t codomain,
                              const TruthTable& table);

}  // namespace ldstab
