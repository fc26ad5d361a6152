#pragma once

// Small dense exact linear algebra: the bridge between presented matrices
// and finite computations (minors, kernels, ranks).

#include "sl2cat/integer.hpp"

#include <cstddef>
#include <ostream>
#include <vector>

namespace sl2cat {

template <typename Scalar>
class Dense {
 public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Dense(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Dense&) const = default;

  static Dense identity(std::size_t n) {
    Dense out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <typename Scalar>
Dense<Scalar>::Dense(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    for (const auto& v : r) data_.push_back(v);
  }
}

using DenseMatrix = Dense<Integer>;
using RationalMatrix = Dense<Rational>;

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

RationalMatrix to_rational(const DenseMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const DenseMatrix& m);

/// det of the leading k x k blocks, k = 1..n.
std::vector<Integer> leading_principal_minors(const DenseMatrix& m);

/// Rank over Q.
std::size_t rank(RationalMatrix m);

/// Basis of the right kernel over Q, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

/// Clears denominators and divides by the content; the first nonzero entry
/// keeps its sign.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace sl2cat
