#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ldstab/errors.hpp"

namespace ldstab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 1-based state index, as in the basis vector notation delta_n^i.
using State = std::size_t;

/// Square n x n matrix with 1-based (row, column) access.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dim() const { return n_; }

  T& at(std::size_t row, std::size_t col) { return entries_[offset(row, col)]; }
  const T& at(std::size_t row, std::size_t col) const { return entries_[offset(row, col)]; }

  T column_sum(std::size_t col) const {
    T sum{};
    for (std::size_t row = 1; row <= n_; ++row) sum += at(row, col);
    return sum;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t offset(std::size_t row, std::size_t col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) {
      throw InvalidArgument("matrix index (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside 1.." + std::to_string(n_));
    }
    return (row - 1) * n_ + (col - 1);
  }

  std::size_t n_ = 0;
  std::vector<T> entries_;
};

/// [Q^k]: counts of switching patterns, never overflows.
using CountMatrix = SquareMatrix<BigInt>;
using RationalMatrix = SquareMatrix<Rational>;
/// Column-stochastic exact matrix (columns sum to one).
using StochasticMatrix = RationalMatrix;

/// Always "p/q"; integers keep the denominator ("1/1").
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ldstab
