#pragma once

// Generalized Cartan matrices, their diagrams and Dynkin classification.
//
// Conventions: the diagram adjacency Q has Q(i,j) = number of oriented edges
// i -> j and Q(i,i) = number of loops at i, so that C = 2 Id - Q.

#include "sl2cat/presented_matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cat {

enum class Family {
  // classical
  A, B, C, D, E6, E7, E8, F4, G2,
  // affine
  AffA, AffA11, AffA12, AffB, AffBC, AffC, AffBD, AffD, AffCD, AffE6, AffE7, AffE8,
  AffF41, AffF42, AffG21, AffG22, AffL, AffBL, AffCL, AffDL,
  // infinite
  Ainf, AinfInf, Binf, Cinf, Dinf, Tinf,
};

enum class Kind { Classical, Affine, Infinite };

struct DynkinType {
  Family family = Family::A;
  /// Classical: number of vertices. Affine: index n (n + 1 vertices for the
  /// families with a rank). Unused for fixed-size and infinite families.
  std::size_t rank = 0;

  Kind kind() const;
  bool has_rank() const;
  bool operator==(const DynkinType&) const = default;
};

/// "A_3", "E8", "~A_4", "~G21", "A_inf", "A_inf^inf", ...
std::string to_string(const DynkinType& t);
/// Inverse of to_string; nullopt on unknown names or illegal ranks.
std::optional<DynkinType> parse_dynkin_type(const std::string& text);

/// Smallest legal rank of a ranked family.
std::size_t min_rank(Family f);
bool is_legal(const DynkinType& t);

std::vector<Family> classical_families();
std::vector<Family> affine_families();
std::vector<Family> infinite_families();

class AxiomViolation : public std::invalid_argument {
 public:
  AxiomViolation(std::string axiom, Index i, Index j);
  const std::string& axiom() const { return axiom_; }
  Index i() const { return i_; }
  Index j() const { return j_; }

 private:
  std::string axiom_;
  Index i_, j_;
};

class NotConnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GCM {
  PresentedMatrix matrix;
};

struct DiagramGraph {
  PresentedMatrix adjacency;
};

/// Checks the three axioms exactly; throws AxiomViolation with a witness.
GCM validate_gcm(const PresentedMatrix& m);

DiagramGraph graph_of(const GCM& c);
/// Throws AxiomViolation when the adjacency is not that of a GCM.
GCM gcm_of(const DiagramGraph& g);

DiagramGraph diagram_template(const DynkinType& t);

/// Connectivity of the underlying undirected graph (loops ignored).
bool is_connected(const PresentedMatrix& adjacency);

std::size_t coxeter_number(const DynkinType& t);
bool check_coxeter_annihilation(const DynkinType& t);

std::optional<PresentedVector> find_positive_null_vector(const GCM& c);

struct FiniteClassification {
  bool positive_definite = false;
  std::vector<Integer> minors;
  /// Set when positive definite and isomorphic to a classical template.
  std::optional<DynkinType> type;
};

/// Throws NotConnected.
FiniteClassification classify_finite(const GCM& c);

struct Classification {
  enum class Result { Classical, Affine, Infinite, Unrecognized };
  Result result = Result::Unrecognized;
  std::optional<DynkinType> type;
  std::vector<Integer> minors;
  std::optional<PresentedVector> null_vector;
  std::string note;
};

std::string to_string(Classification::Result r);

/// Throws NotConnected.
Classification classify(const GCM& c);

/// Finds a vertex bijection p with a(i,j) = b(p(i),p(j)); `fixed` pairs are
/// forced. Both matrices must be square of the same size.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const DenseMatrix& a, const DenseMatrix& b,
    const std::vector<std::pair<std::size_t, std::size_t>>& fixed = {});

/// DOT rendering; infinite presentations are cut to `window` vertices with a
/// dashed continuation node.
std::string to_dot(const PresentedMatrix& adjacency, const std::string& name, std::size_t window = 0);

}  // namespace sl2cat
