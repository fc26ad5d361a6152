#pragma once

// Restriction characters of modules over Lie algebras projecting onto sl2,
// constrained by L(1) (x) X = sum of Y. A character is k -> [X : L(k)],
// eventually affine on residue classes modulo 1, 2 or 4.

#include "sl2cat/matrix_json.hpp"
#include "sl2cat/presented_matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cat {

class SlCharacter {
 public:
  SlCharacter() : SlCharacter(1, {PresentedVector::constant(IndexSet::nat(), 0)}) {}
  /// classes[r](m) = [X : L(r + modulus * m)].
  SlCharacter(std::size_t modulus, std::vector<PresentedVector> classes);

  /// mult * (L(start) + L(start + step) + ...), step in {1, 2, 4}.
  static SlCharacter arithmetic(std::size_t start, std::size_t step, Integer mult = 1);
  /// Fits values[0..n) with a modulus in {1, 2, 4} whose classes each end in
  /// at least three affine points, earliest generic start first; nullopt if none.
  static std::optional<SlCharacter> fit(const std::vector<Integer>& values);

  std::size_t modulus() const { return modulus_; }
  const std::vector<PresentedVector>& classes() const { return classes_; }
  Integer at(std::size_t k) const;
  /// Beyond this index every class is affine.
  std::size_t generic_start() const;
  bool is_nonnegative() const;
  bool operator==(const SlCharacter&) const = default;

 private:
  std::size_t modulus_;
  std::vector<PresentedVector> classes_;
};

/// "L(0) + L(4) + L(8) + ..." style preview.
std::string to_string(const SlCharacter& c);
Json character_to_json(const SlCharacter& c);

struct TensorRelation {
  std::string lhs;
  std::vector<std::pair<std::string, Integer>> rhs;
};

std::string to_string(const TensorRelation& r);

struct RestrictionSystem {
  std::string name;
  std::vector<std::string> modules;
  std::map<std::string, SlCharacter> fixed;
  std::vector<TensorRelation> relations;
  /// [module : L(k)] = value.
  struct Normalization {
    std::string module;
    std::size_t k;
    Integer value;
  };
  std::vector<Normalization> normalizations;
};

class UnknownSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Built-in systems "takiff", "schrodinger", "dinf". `assume_restrictions`
/// only affects "dinf": V(n) = L(n) + L(n+2) + ... and [V'(j) : L(j)] = 1.
RestrictionSystem builtin_system(const std::string& name, std::size_t truncation, bool assume_restrictions = false);
std::vector<std::string> builtin_system_names();

struct RestrictionSolution {
  enum class Status { Unique, Underdetermined, Infeasible };
  Status status = Status::Infeasible;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t free_dims = 0;
  /// Infeasible: an equation that reduced to 0 = c.
  std::string failed_relation;
  /// Unique only: every module, fixed or solved.
  std::map<std::string, SlCharacter> characters;
  bool nonnegative_integral = false;
  /// Every relation checked at all indices k through the affine tails.
  bool certified = false;
};

std::string to_string(RestrictionSolution::Status s);

/// Throws std::invalid_argument when truncation < 4.
RestrictionSolution restriction_consistency_solve(const RestrictionSystem& s, std::size_t truncation);

/// Exact check of L(1) (x) X = sum Y for all k, through the affine tails.
bool check_relation(const TensorRelation& r, const std::map<std::string, SlCharacter>& chars);

Json solution_to_json(const RestrictionSystem& s, const RestrictionSolution& sol);

}  // namespace sl2cat
