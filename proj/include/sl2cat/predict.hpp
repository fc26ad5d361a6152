#pragma once

// Case dispatch for the type of add(C . M), M a simple sl2-module with
// Casimir eigenvalue (lambda + 1)^2, and for the A-module categories over
// subalgebras a of sl2.

#include "sl2cat/dynkin.hpp"
#include "sl2cat/integer.hpp"
#include "sl2cat/matrix_json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sl2cat {

enum class LambdaClass { NonHalfInteger, HalfIntegerNotInteger, NonnegInteger, NegativeInteger };

std::string to_string(LambdaClass c);
/// "non-half-integer", "half-integer-not-integer", "nonneg-integer", "negative-integer".
std::optional<LambdaClass> parse_lambda_class(const std::string& text);
LambdaClass classify_lambda(const Rational& lambda);

struct TypePrediction {
  /// "a".."e" for the simple-module dispatch; "a", "b", "dim-0", "dim-2",
  /// "dim-3" for the subalgebra dispatch.
  std::string case_label;
  /// Empty for the trivial category.
  std::optional<DynkinType> type;
  /// Case (e): sub and quotient of the short exact sequence.
  std::optional<std::pair<DynkinType, DynkinType>> extension;
  bool simple_transitive = true;
  std::string note;
};

class MissingFlag : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `special_fixed` (some special projective functor fixes M) must be given
/// exactly in the half-integer-not-integer class.
TypePrediction predict_simple_module(LambdaClass c, std::optional<bool> special_fixed = {});

/// `g_semisimple` must be given exactly when dim_a == 1.
TypePrediction subalgebra_type(int dim_a, std::optional<bool> g_semisimple = {});

Json prediction_to_json(const TypePrediction& p);
std::string describe(const TypePrediction& p);

}  // namespace sl2cat
