#include "sl2cat/predict.hpp"

namespace sl2cat {

namespace {

const DynkinType kAinf{Family::Ainf, 0};
const DynkinType kAinfInf{Family::AinfInf, 0};
const DynkinType kCinf{Family::Cinf, 0};
const DynkinType kTinf{Family::Tinf, 0};

}  // namespace

std::string to_string(LambdaClass c) {
  switch (c) {
    case LambdaClass::NonHalfInteger: return "non-half-integer";
    case LambdaClass::HalfIntegerNotInteger: return "half-integer-not-integer";
    case LambdaClass::NonnegInteger: return "nonneg-integer";
    case LambdaClass::NegativeInteger: return "negative-integer";
  }
  return "?";
}

std::optional<LambdaClass> parse_lambda_class(const std::string& text) {
  for (auto c : {LambdaClass::NonHalfInteger, LambdaClass::HalfIntegerNotInteger, LambdaClass::NonnegInteger,
                 LambdaClass::NegativeInteger}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

LambdaClass classify_lambda(const Rational& lambda) {
  const Integer den = denominator(lambda);
  if (den == 1) return numerator(lambda) >= 0 ? LambdaClass::NonnegInteger : LambdaClass::NegativeInteger;
  if (den == 2) return LambdaClass::HalfIntegerNotInteger;
  return LambdaClass::NonHalfInteger;
}

TypePrediction predict_simple_module(LambdaClass c, std::optional<bool> special_fixed) {
  const bool needs_flag = c == LambdaClass::HalfIntegerNotInteger;
  if (needs_flag && !special_fixed) throw MissingFlag("class " + to_string(c) + " needs special_fixed");
  if (!needs_flag && special_fixed) throw MissingFlag("special_fixed only applies to half-integer-not-integer");
  TypePrediction p;
  switch (c) {
    case LambdaClass::NonHalfInteger:
      p.case_label = "a";
      p.type = kAinfInf;
      break;
    case LambdaClass::HalfIntegerNotInteger:
      p.case_label = *special_fixed ? "b" : "c";
      p.type = *special_fixed ? kTinf : kAinfInf;
      break;
    case LambdaClass::NonnegInteger:
      p.case_label = "d";
      p.type = kAinf;
      break;
    case LambdaClass::NegativeInteger:
      p.case_label = "e";
      p.simple_transitive = false;
      p.extension = std::make_pair(kCinf, kAinf);
      p.note = "short exact sequence with simple transitive sub and quotient";
      break;
  }
  return p;
}

TypePrediction subalgebra_type(int dim_a, std::optional<bool> g_semisimple) {
  if (dim_a < 0 || dim_a > 3) throw std::invalid_argument("dim_a must be 0, 1, 2 or 3");
  if (dim_a == 1 && !g_semisimple) throw MissingFlag("dim_a = 1 needs g_semisimple");
  if (dim_a != 1 && g_semisimple) throw MissingFlag("g_semisimple only applies to dim_a = 1");
  TypePrediction p;
  switch (dim_a) {
    case 0:
      p.case_label = "dim-0";
      p.note = "a = 0 acts by zero";
      break;
    case 1:
      if (*g_semisimple) {
        p.case_label = "b";
        p.type = kAinfInf;
      } else {
        p.case_label = "a";
        p.type = kAinf;
        p.simple_transitive = false;
        p.note = "simple transitive quotient by the radical";
      }
      break;
    case 2:
      p.case_label = "dim-2";
      p.type = kAinf;
      p.note = "semisimple";
      break;
    case 3:
      p.case_label = "dim-3";
      p.type = kAinf;
      p.note = "left regular";
      break;
  }
  return p;
}

Json prediction_to_json(const TypePrediction& p) {
  Json j;
  j["case"] = p.case_label;
  j["type"] = p.type ? Json(to_string(*p.type)) : Json(nullptr);
  if (p.extension) {
    j["extension"] = {{"sub", to_string(p.extension->first)}, {"quotient", to_string(p.extension->second)}};
  }
  j["simple_transitive"] = p.simple_transitive;
  if (!p.note.empty()) j["note"] = p.note;
  return j;
}

std::string describe(const TypePrediction& p) {
  std::string s = "case (" + p.case_label + "): ";
  if (p.extension) {
    s += "extension 0 -> " + to_string(p.extension->first) + " -> add(C.M) -> " + to_string(p.extension->second) +
         " -> 0";
  } else if (p.type) {
    s += (p.simple_transitive ? "simple transitive of type " : "transitive of type ") + to_string(*p.type);
  } else {
    s += "trivial";
  }
  if (!p.note.empty() && !p.extension) s += " (" + p.note + ")";
  return s;
}

}  // namespace sl2cat
