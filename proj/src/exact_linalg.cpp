#include "sl2cat/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sl2cat {

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dense product: shape mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RationalMatrix to_rational(const DenseMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

namespace {

// Fraction-free elimination with row swaps.
Integer bareiss(DenseMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

Integer determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  return bareiss(m);
}

std::vector<Integer> leading_principal_minors(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("minors: matrix not square");
  std::vector<Integer> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    DenseMatrix block(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) block(i, j) = m(i, j);
    }
    out.push_back(bareiss(std::move(block)));
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer x = boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q));
    g = boost::multiprecision::gcd(g, x);
    out.push_back(std::move(x));
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace sl2cat
