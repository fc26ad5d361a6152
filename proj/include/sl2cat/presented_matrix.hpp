#pragma once

// Countably indexed integer matrices given by a finite head plus a banded
// Toeplitz tail, and eventually-affine vectors they act on.
//
// Nat index: entry (i,j) comes from the head when min(i,j) < N and equals
// T(j-i) otherwise. Int index: pure Toeplitz. Finite(n): dense n x n head.

#include "sl2cat/exact_linalg.hpp"
#include "sl2cat/fusion.hpp"
#include "sl2cat/integer.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2cat {

using Index = long;

struct IndexSet {
  enum class Kind { Finite, Nat, Int };
  Kind kind = Kind::Nat;
  std::size_t n = 0;  // Finite only

  static IndexSet finite(std::size_t n);
  static IndexSet nat() { return {Kind::Nat, 0}; }
  static IndexSet integers() { return {Kind::Int, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const IndexSet&) const = default;
};

std::string to_string(const IndexSet& s);

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IncompatibleIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a product cannot be presented as head + affine tail.
class NotEventuallyAffine : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PresentedMatrix {
 public:
  using Entries = std::map<std::pair<Index, Index>, Integer>;
  using Diagonals = std::map<Index, Integer>;

  PresentedMatrix() = default;

  /// Builds and normalizes. Throws std::invalid_argument on entries outside
  /// the head region or the Int/Finite shape rules.
  PresentedMatrix(IndexSet index, std::size_t head_size, Entries head, Diagonals diagonals);

  static PresentedMatrix zero(IndexSet index);
  static PresentedMatrix identity(IndexSet index);
  static PresentedMatrix from_dense(const DenseMatrix& m);
  static PresentedMatrix toeplitz(IndexSet index, Diagonals diagonals);

  /// Presents a Nat-indexed matrix from a finite window whose row
  /// `window.rows() - band - 1` is already generic. Throws if the window is
  /// inconsistent with the fitted presentation.
  static PresentedMatrix fit_nat(const DenseMatrix& window, std::size_t band);

  const IndexSet& index() const { return index_; }
  std::size_t head_size() const { return head_size_; }
  const Entries& head() const { return head_; }
  const Diagonals& diagonals() const { return diagonals_; }
  std::size_t band() const;
  /// 1 + largest coordinate used by a head entry (0 for an empty head).
  std::size_t reach() const;
  Integer tail(Index d) const;

  Integer entry(Index i, Index j) const;

  /// Same matrix with the head enlarged to exactly k (k >= head_size); not normalized.
  PresentedMatrix with_head_size(std::size_t k) const;

  bool operator==(const PresentedMatrix&) const = default;

 private:
  void normalize();
  void check_index(Index i) const;

  IndexSet index_;
  std::size_t head_size_ = 0;
  Entries head_;
  Diagonals diagonals_;
};

PresentedMatrix operator*(const PresentedMatrix& a, const PresentedMatrix& b);
PresentedMatrix operator+(const PresentedMatrix& a, const PresentedMatrix& b);
PresentedMatrix operator-(const PresentedMatrix& a, const PresentedMatrix& b);
PresentedMatrix scale(const PresentedMatrix& a, const Integer& c);

/// Horner evaluation p(M).
PresentedMatrix poly_eval(const UltrasphericalPoly& p, const PresentedMatrix& m);

/// Top-left n x n corner (Nat), window starting at -floor(n/2) (Int), or the
/// corner clamped to the matrix size (Finite).
DenseMatrix truncate(const PresentedMatrix& m, std::size_t n);
/// First index of the window used by truncate.
Index truncate_origin(const PresentedMatrix& m, std::size_t n);

PresentedMatrix transpose(const PresentedMatrix& m);
bool is_symmetric(const PresentedMatrix& m);
bool is_nonnegative(const PresentedMatrix& m);

/// Nat: v_i = head[i] for i < N, a*i + b beyond. Int: constant b. Finite: head.
class PresentedVector {
 public:
  PresentedVector() = default;
  PresentedVector(IndexSet index, std::vector<Integer> head, Integer a, Integer b);

  static PresentedVector constant(IndexSet index, Integer c);

  const IndexSet& index() const { return index_; }
  const std::vector<Integer>& head() const { return head_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  Integer at(Index i) const;
  bool is_zero() const;
  /// True when every entry is > 0.
  bool is_positive() const;
  /// Entries at indices [from, from + n).
  std::vector<Integer> window(Index from, std::size_t n) const;

  bool operator==(const PresentedVector&) const = default;

 private:
  void normalize();

  IndexSet index_;
  std::vector<Integer> head_;
  Integer a_ = 0;
  Integer b_ = 0;
};

/// M v with the tail certified by the generic-row identity.
PresentedVector apply(const PresentedMatrix& m, const PresentedVector& v);

PresentedVector operator+(const PresentedVector& x, const PresentedVector& y);
PresentedVector scale(const PresentedVector& v, const Integer& c);

std::string to_string(const PresentedVector& v);

}  // namespace sl2cat
