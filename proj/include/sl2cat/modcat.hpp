#pragma once

// Module categories over finite-dimensional sl2-modules at the level of
// Grothendieck groups: action matrices [F_i] = R_i([F_1]), categorifiability,
// transitivity and Dynkin type.

#include "sl2cat/dynkin.hpp"
#include "sl2cat/matrix_json.hpp"
#include "sl2cat/presented_matrix.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cat {

enum class Basis { Projectives, Simples };

std::string to_string(Basis b);

class ModuleCategoryModel {
 public:
  /// Throws std::invalid_argument when f1 has a negative entry.
  ModuleCategoryModel(std::string name, Basis basis, PresentedMatrix f1, std::string provenance = {},
                      std::optional<DynkinType> expected_type = {});

  const std::string& name() const { return name_; }
  Basis basis() const { return basis_; }
  const PresentedMatrix& f1() const { return f1_; }
  const std::string& provenance() const { return provenance_; }
  const std::optional<DynkinType>& expected_type() const { return expected_; }

  /// [F_i], memoized. Safe to call concurrently.
  PresentedMatrix action(std::size_t i) const;

 private:
  struct Cache;
  std::string name_;
  Basis basis_;
  PresentedMatrix f1_;
  std::string provenance_;
  std::optional<DynkinType> expected_;
  std::shared_ptr<Cache> cache_;
};

PresentedMatrix derive_action(const ModuleCategoryModel& m, std::size_t i);

/// {"name", "basis", "provenance", "expected_type"?, "f1"}.
ModuleCategoryModel model_from_json(const Json& j);
Json model_to_json(const ModuleCategoryModel& m);

class UnknownModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Catalog names in sorted order.
std::vector<std::string> catalog_names();
/// Throws UnknownModel.
ModuleCategoryModel catalog(const std::string& name);
/// Raw fixture text as shipped.
const std::string& catalog_source(const std::string& name);

struct CategorifiabilityReport {
  struct Failure {
    std::size_t i;
    Index row;
    Index col;
    Integer value;
  };
  bool ok = true;
  std::size_t upto = 0;
  std::optional<Failure> failure;
};

constexpr std::size_t kDefaultCategorifiabilityDepth = 12;

CategorifiabilityReport check_categorifiability(const ModuleCategoryModel& m,
                                                std::size_t upto = kDefaultCategorifiabilityDepth);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

/// Edge i -> j when some [F_k] has (j,i) entry nonzero. Exact (the full
/// closure) for finite models; for infinite ones only generator edges inside
/// a window are listed.
struct ActionGraph {
  Index origin = 0;
  std::size_t size = 0;
  bool exact = false;
  std::vector<std::pair<Index, Index>> edges;
};

ActionGraph action_graph(const ModuleCategoryModel& m);

struct TransitivityReport {
  Tri verdict = Tri::Unknown;
  std::string reason;
};

TransitivityReport is_transitive(const ModuleCategoryModel& m);

class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads f1 as the adjacency of a diagram and classifies C = 2 Id - f1.
/// Throws PreconditionFailed unless transitive and categorifiable to the
/// default depth.
Classification classify_type(const ModuleCategoryModel& m);

/// Transposes f1; throws std::invalid_argument on the wrong basis.
ModuleCategoryModel to_simples_basis(const ModuleCategoryModel& m);
ModuleCategoryModel to_projectives_basis(const ModuleCategoryModel& m);

/// Symmetry of f1, necessary for a semisimple realization.
bool semisimplicity_symmetry_check(const ModuleCategoryModel& m);

}  // namespace sl2cat
