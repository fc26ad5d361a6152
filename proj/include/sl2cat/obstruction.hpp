#pragma once

// Exhaustive top/socle feasibility for a window of F_k(S_j), the simple
// objects S_j being those of the abelianization. Unknowns are the top and
// socle multisets of each F_k(S_j); constraints are self-adjunction of F_k
// and the splittings F_b F_a = sum F_m applied where F_a(S_j) is simple.

#include "sl2cat/matrix_json.hpp"
#include "sl2cat/modcat.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cat {

using Multiset = std::map<Index, int>;

class DepthTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ObstructionOptions {
  std::size_t depth_cap = 5;
  /// Modules longer than this are left unconstrained.
  int max_length = 4;
  /// dim End(S_i); 1 unless overridden.
  std::map<Index, int> schur_dims;
};

struct ModuleUnknown {
  std::size_t functor = 0;
  Index object = 0;
  Multiset composition;
  bool wildcard = false;
  /// Set in a witness.
  Multiset top;
  Multiset socle;
};

struct ConstraintRecord {
  std::string kind;  // "adjunction" or "hom"
  std::string identity;
  long lhs = 0;
  long rhs = 0;
  long violations = 0;
};

struct ObstructionReport {
  enum class Status { Sat, Unsat, Unknown };
  std::string model;
  std::size_t depth = 0;
  Index origin = 0;
  Status status = Status::Unknown;
  std::vector<ModuleUnknown> modules;  // witness when Sat or Unknown
  std::size_t constraints = 0;
  std::size_t skipped = 0;
  /// Unsat only: identities that cut off the deepest partial assignments,
  /// in order of first violation.
  std::vector<ConstraintRecord> trace;
};

std::string to_string(ObstructionReport::Status s);

/// Throws DepthTooLarge above options.depth_cap and std::invalid_argument for
/// depth 0 or a negative composition multiplicity.
ObstructionReport socle_top_feasibility(const ModuleCategoryModel& m, std::size_t depth,
                                        const ObstructionOptions& options = {});

Json report_to_json(const ObstructionReport& r);

}  // namespace sl2cat
