#include "ldstab/stp.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace ldstab {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

DenseIntMatrix::DenseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

DenseIntMatrix::DenseIntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw InvalidArgument("expected " + std::to_string(rows * cols) + " entries for a " +
                          dims(rows, cols) + " matrix, got " + std::to_string(entries_.size()));
  }
}

DenseIntMatrix DenseIntMatrix::identity(std::size_t n) {
  DenseIntMatrix id(n, n);
  for (std::size_t i = 1; i <= n; ++i) id.at(i, i) = 1;
  return id;
}

DenseIntMatrix DenseIntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<BigInt> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged matrix literal");
    for (long long v : row) entries.emplace_back(v);
  }
  return DenseIntMatrix(r, c, std::move(entries));
}

BigInt& DenseIntMatrix::at(std::size_t row, std::size_t col) {
  return const_cast<BigInt&>(std::as_const(*this).at(row, col));
}

const BigInt& DenseIntMatrix::at(std::size_t row, std::size_t col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) {
    throw InvalidArgument("index (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside " + dims(rows_, cols_) + " matrix");
  }
  return entries_[(row - 1) * cols_ + (col - 1)];
}

DenseIntMatrix DenseIntMatrix::column(std::size_t col) const {
  DenseIntMatrix out(rows_, 1);
  for (std::size_t i = 1; i <= rows_; ++i) out.at(i, 1) = at(i, col);
  return out;
}

DenseIntMatrix multiply(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("cannot multiply " + dims(a.rows(), a.cols()) + " by " +
                          dims(b.rows(), b.cols()));
  }
  DenseIntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t r = 1; r <= a.cols(); ++r) {
      const BigInt& lhs = a.at(i, r);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 1; j <= b.cols(); ++j) out.at(i, j) += lhs * b.at(r, j);
    }
  }
  return out;
}

DenseIntMatrix kron(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  DenseIntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 1; ia <= a.rows(); ++ia) {
    for (std::size_t ja = 1; ja <= a.cols(); ++ja) {
      const BigInt& scale = a.at(ia, ja);
      if (scale.is_zero()) continue;
      for (std::size_t ib = 1; ib <= b.rows(); ++ib) {
        for (std::size_t jb = 1; jb <= b.cols(); ++jb) {
          out.at((ia - 1) * b.rows() + ib, (ja - 1) * b.cols() + jb) = scale * b.at(ib, jb);
        }
      }
    }
  }
  return out;
}

DenseIntMatrix stp(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  if (n == p) return multiply(a, b);
  const std::size_t l = std::lcm(n, p);
  return multiply(kron(a, DenseIntMatrix::identity(l / n)),
                  kron(b, DenseIntMatrix::identity(l / p)));
}

DenseIntMatrix khatri_rao(const DenseIntMatrix& a, const DenseIntMatrix& b) {
  if (a.cols() != b.cols()) {
    throw InvalidArgument("Khatri-Rao product needs equal column counts, got " +
                          std::to_string(a.cols()) + " and " + std::to_string(b.cols()));
  }
  DenseIntMatrix out(a.rows() * b.rows(), a.cols());
  for (std::size_t j = 1; j <= a.cols(); ++j) {
    const DenseIntMatrix col = stp(a.column(j), b.column(j));
    for (std::size_t i = 1; i <= col.rows(); ++i) out.at(i, j) = col.at(i, 1);
  }
  return out;
}

DenseIntMatrix basis_vector(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw InvalidArgument("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  DenseIntMatrix v(n, 1);
  v.at(i, 1) = 1;
  return v;
}

LogicMatrix::LogicMatrix(std::size_t dim, std::vector<std::size_t> cols)
    : dim_(dim), cols_(std::move(cols)) {
  if (dim_ == 0) throw InvalidArgument("logic matrix dimension must be positive");
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j] < 1 || cols_[j] > dim_) {
      throw InvalidArgument("column " + std::to_string(j + 1) + " has index " +
                            std::to_string(cols_[j]) + " outside 1.." + std::to_string(dim_));
    }
  }
}

LogicMatrix LogicMatrix::from_dense(const DenseIntMatrix& dense) {
  std::vector<std::size_t> cols;
  cols.reserve(dense.cols());
  for (std::size_t j = 1; j <= dense.cols(); ++j) {
    std::size_t hit = 0;
    for (std::size_t i = 1; i <= dense.rows(); ++i) {
      const BigInt& v = dense.at(i, j);
      if (v.is_zero()) continue;
      if (v != 1 || hit != 0) {
        throw InvalidArgument("column " + std::to_string(j) + " is not a basis vector");
      }
      hit = i;
    }
    if (hit == 0) throw InvalidArgument("column " + std::to_string(j) + " is zero");
    cols.push_back(hit);
  }
  return LogicMatrix(dense.rows(), std::move(cols));
}

LogicMatrix LogicMatrix::identity(std::size_t n) {
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), std::size_t{1});
  return LogicMatrix(n, std::move(cols));
}

std::size_t LogicMatrix::operator[](std::size_t j) const {
  if (j < 1 || j > cols_.size()) {
    throw InvalidArgument("column " + std::to_string(j) + " outside 1.." +
                          std::to_string(cols_.size()));
  }
  return cols_[j - 1];
}

DenseIntMatrix LogicMatrix::to_dense() const {
  DenseIntMatrix dense(dim_, cols_.size());
  for (std::size_t j = 1; j <= cols_.size(); ++j) dense.at(cols_[j - 1], j) = 1;
  return dense;
}

LogicMatrix khatri_rao(const LogicMatrix& a, const LogicMatrix& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("Khatri-Rao product needs equal column counts, got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  std::vector<std::size_t> cols(a.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    cols[j] = (a.columns()[j] - 1) * b.dim() + b.columns()[j];
  }
  return LogicMatrix(a.dim() * b.dim(), std::move(cols));
}

LogicValueMap::LogicValueMap(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidArgument("logic domain must be nonempty");
}

std::size_t LogicValueMap::to_index(std::size_t value) const {
  if (value >= n_) {
    throw InvalidArgument("logic value " + std::to_string(value) + " outside 0.." +
                          std::to_string(n_ - 1));
  }
  return n_ - value;
}

std::size_t LogicValueMap::to_value(std::size_t index) const {
  if (index < 1 || index > n_) {
    throw InvalidArgument("basis index " + std::to_string(index) + " outside 1.." +
                          std::to_string(n_));
  }
  return n_ - index;
}

std::size_t product_index(std::span<const std::size_t> domains,
                          std::span<const std::size_t> indices) {
  if (domains.size() != indices.size()) {
    throw InvalidArgument("expected " + std::to_string(domains.size()) + " indices, got " +
                          std::to_string(indices.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < domains.size(); ++i) {
    if (indices[i] < 1 || indices[i] > domains[i]) {
      throw InvalidArgument("factor " + std::to_string(i + 1) + " index " +
                            std::to_string(indices[i]) + " outside 1.." +
                            std::to_string(domains[i]));
    }
    index = index * domains[i] + (indices[i] - 1);
  }
  return index + 1;
}

std::vector<std::size_t> split_index(std::span<const std::size_t> domains, std::size_t index) {
  std::size_t total = 1;
  for (std::size_t d : domains) total *= d;
  if (index < 1 || index > total) {
    throw InvalidArgument("product index " + std::to_string(index) + " outside 1.." +
                          std::to_string(total));
  }
  std::vector<std::size_t> indices(domains.size());
  std::size_t rest = index - 1;
  for (std::size_t i = domains.size(); i-- > 0;) {
    indices[i] = rest % domains[i] + 1;
    rest /= domains[i];
  }
  return indices;
}

LogicMatrix structural_matrix(std::span<const std::size_t> domains, std::size_t codomain,
                              const TruthTable& table) {
  if (domains.empty()) throw InvalidArgument("a logic function needs at least one argument");
  std::size_t total = 1;
  for (std::size_t d : domains) {
    if (d == 0) throw InvalidArgument("argument domain must be nonempty");
    total *= d;
  }
  const LogicValueMap out_map(codomain);

  for (const auto& [args, value] : table) {
    if (args.size() != domains.size()) {
      throw InvalidArgument("truth table row has " + std::to_string(args.size()) +
                            " arguments, expected " + std::to_string(domains.size()));
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] >= domains[i]) {
        throw InvalidArgument("argument " + std::to_string(i + 1) + " value " +
                              std::to_string(args[i]) + " outside its domain");
      }
    }
    if (value >= codomain) {
      throw InvalidArgument("function value " + std::to_string(value) + " outside 0.." +
                            std::to_string(codomain - 1));
    }
  }

  std::vector<std::size_t> cols(total);
  std::vector<std::size_t> args(domains.size());
  for (std::size_t col = 1; col <= total; ++col) {
    const auto indices = split_index(domains, col);
    for (std::size_t i = 0; i < domains.size(); ++i) args[i] = domains[i] - indices[i];
    const auto it = table.find(args);
    if (it == table.end()) {
      std::string tuple;
      for (std::size_t v : args) tuple += (tuple.empty() ? "" : ",") + std::to_string(v);
      throw InvalidArgument("truth table has no entry for (" + tuple + ")");
    }
    cols[col - 1] = out_map.to_index(it->second);
  }
  return LogicMatrix(codomain, std::move(cols));
}

}  // namespace ldstab
