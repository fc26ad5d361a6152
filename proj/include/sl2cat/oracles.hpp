#pragma once

// Independent oracles: the Verma-basis Grothendieck group of sl2 category O,
// b-modules N(mu) and Q(lambda, i), and Jordan types of L(1) (x) M(n, lambda).

#include "sl2cat/integer.hpp"
#include "sl2cat/matrix_json.hpp"
#include "sl2cat/presented_matrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2cat {

/// Highest weight -> multiplicity of [Delta(lambda)]. Weights are exact
/// rationals; non-integral ones live in a semisimple block.
class OClassVector {
 public:
  using Map = std::map<Rational, Integer>;
  OClassVector() = default;
  explicit OClassVector(Map m);
  static OClassVector verma(const Rational& lambda, Integer mult = 1);

  const Map& entries() const { return entries_; }
  Integer coeff(const Rational& lambda) const;
  void add(const Rational& lambda, const Integer& c);
  OClassVector operator+(const OClassVector& o) const;
  OClassVector operator-(const OClassVector& o) const;
  OClassVector scaled(const Integer& c) const;
  bool operator==(const OClassVector&) const = default;

 private:
  Map entries_;
};

std::string to_string(const OClassVector& v);

struct NamedOObject {
  enum class Tag { L, P, Delta };
  Tag tag = Tag::Delta;
  Rational lambda;

  bool operator==(const NamedOObject&) const = default;
};

class IllegalObject : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInCatalog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L(lambda) with lambda <= -1 or non-integral; P(lambda) with lambda <= -1
/// or non-integral (P(-1) = L(-1)); Delta anything. Throws IllegalObject.
void check_legal(const NamedOObject& o);
OClassVector class_of(const NamedOObject& o);

/// "L(-3)", "P(-2)", "Delta(1/3)". `p_minus_one` prints L(-1) as P(-1).
std::string to_string(const NamedOObject& o, bool p_minus_one = false);
/// Parses "L(..)", "P(..)", "Delta(..)" or "D(..)" with a rational argument;
/// P(-1) is returned as L(-1). Throws std::invalid_argument.
NamedOObject parse_o_object(const std::string& text);

/// [L(n) (x) Delta(lambda)] = sum_k [Delta(lambda + n - 2k)], linearly.
OClassVector tensor_in_O(std::size_t n, const OClassVector& v);

/// Splits a class over {L(mu): mu <= -1} u {P(lambda): lambda <= -2} and
/// non-integral L. Canonical: P(-1) comes back as L(-1). Sorted by weight,
/// highest first. Throws NotInCatalog on a negative residual.
std::vector<std::pair<NamedOObject, Integer>> decompose_in_N(const OClassVector& v);

enum class Realization { AinfTilting, CinfProjInj, AinfInfGeneric, N5Borel, N6Borel };
std::string to_string(Realization r);
std::vector<Realization> all_realizations();
/// Catalog fixture each realization must reproduce.
std::string catalog_name(Realization r);
/// [L(1)] of the realization, from the oracle rules alone.
PresentedMatrix derive_catalog_matrix(Realization r);

/// Summands of Res L(1) (x) N(mu) as offsets (mu + 1, mu - 1), checked by
/// greedy lowest-weight subtraction on characters truncated at `check_depth`.
/// Throws std::logic_error on a mismatch.
std::pair<Index, Index> borel_tensor_N(Index mu, std::size_t check_depth = 20);

/// Indices k of the summands Q(lambda, k) of F_1 Q(lambda, i), character-checked.
std::vector<std::size_t> borel_tensor_Q(std::size_t i);

/// Composition factors of Q(lambda, k) as offsets from lambda: -k, -k+2, .., k.
std::vector<Index> q_composition(std::size_t k);
Index q_top(std::size_t k);
Index q_socle(std::size_t k);
/// Upper bound on dim Hom(Q(lambda, i), Q(lambda, j)) from the top/socle argument.
int q_hom_bound(std::size_t i, std::size_t j);

struct JordanBlock {
  std::size_t size;
  Rational eigenvalue;
  bool operator==(const JordanBlock&) const = default;
};
using JordanPartition = std::vector<JordanBlock>;

/// Jordan type of e acting on L(1) (x) M(n, lambda), M(n, lambda) one n x n
/// Jordan cell. Blocks sorted by size, largest first.
JordanPartition jordan_kronecker_oracle(std::size_t n, const Rational& lambda);
std::string to_string(const JordanPartition& p);

}  // namespace sl2cat
