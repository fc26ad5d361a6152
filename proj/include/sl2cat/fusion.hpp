#pragma once

// Grothendieck ring of finite-dimensional sl2-modules, in the simple basis
// [L(i)] and in the polynomial basis Z[x] with [L(i)] <-> R_i(x).

#include "sl2cat/integer.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace sl2cat {

using SimpleIndex = std::size_t;

/// Integer polynomial in x, coefficient k of x^k; no trailing zeros.
class UltrasphericalPoly {
 public:
  UltrasphericalPoly() = default;
  explicit UltrasphericalPoly(std::vector<Integer> coeffs);

  static UltrasphericalPoly monomial(std::size_t k, Integer c = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  bool is_zero() const { return coeffs_.empty(); }

  Integer evaluate(const Integer& x) const;

  UltrasphericalPoly operator+(const UltrasphericalPoly& o) const;
  UltrasphericalPoly operator-(const UltrasphericalPoly& o) const;
  UltrasphericalPoly operator*(const UltrasphericalPoly& o) const;
  UltrasphericalPoly scaled(const Integer& c) const;
  bool operator==(const UltrasphericalPoly&) const = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Finitely supported virtual class sum c_i [L(i)]. Zero coefficients are never stored.
class FusionElement {
 public:
  FusionElement() = default;

  static FusionElement simple(SimpleIndex m, Integer mult = 1);

  const std::map<SimpleIndex, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(SimpleIndex m) const;
  void add(SimpleIndex m, const Integer& c);
  bool is_zero() const { return coeffs_.empty(); }
  bool is_nonnegative() const;

  FusionElement operator+(const FusionElement& o) const;
  FusionElement operator-(const FusionElement& o) const;
  bool operator==(const FusionElement&) const = default;

 private:
  std::map<SimpleIndex, Integer> coeffs_;
};

/// R_0 = 1, R_1 = x, R_i = x R_{i-1} - R_{i-2}.
UltrasphericalPoly r_poly(std::size_t i);

/// All of R_0..R_n.
std::vector<UltrasphericalPoly> r_polys_upto(std::size_t n);

/// Clebsch-Gordan, extended bilinearly.
FusionElement tensor(const FusionElement& a, const FusionElement& b);

FusionElement poly_to_fusion(const UltrasphericalPoly& p);
UltrasphericalPoly fusion_to_poly(const FusionElement& a);

Integer dim(const FusionElement& a);

/// "2*L(1)+L(3)"; "0" for the zero class.
std::string to_string(const FusionElement& a);
/// "x^3-2*x"; "0" for the zero polynomial.
std::string to_string(const UltrasphericalPoly& p);

std::ostream& operator<<(std::ostream& os, const FusionElement& a);
std::ostream& operator<<(std::ostream& os, const UltrasphericalPoly& p);

/// Accepts sums of terms "[c*]L(k)" with optional signs; throws std::invalid_argument.
FusionElement parse_fusion(const std::string& text);
/// Accepts sums of terms "[c*]x^k", "[c*]x", "c"; throws std::invalid_argument.
UltrasphericalPoly parse_poly(const std::string& text);

}  // namespace sl2cat
