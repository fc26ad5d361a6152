#include "cli.hpp"

#include "sl2cat/dynkin.hpp"
#include "sl2cat/matrix_json.hpp"
#include "sl2cat/modcat.hpp"
#include "sl2cat/obstruction.hpp"
#include "sl2cat/oracles.hpp"
#include "sl2cat/predict.hpp"
#include "sl2cat/restriction.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace sl2cat::cli {

namespace {

struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw Exit{code, message}; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(kUsage, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(kValidation, path + ": invalid JSON: " + e.what());
  }
}

ModuleCategoryModel resolve_model(const std::string& arg) {
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return catalog(arg);
  if (std::filesystem::exists(arg)) {
    try {
      return model_from_json(read_json_file(arg));
    } catch (const Json::exception& e) {
      fail(kValidation, arg + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      fail(kValidation, arg + ": " + e.what());
    }
  }
  std::string list;
  for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
  fail(kUsage, "unknown model '" + arg + "' (catalog: " + list + ")");
}

std::string window_rows(const PresentedMatrix& m, std::size_t n) {
  const DenseMatrix d = truncate(m, n);
  std::ostringstream os;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < d.cols(); ++j) os << (j ? " " : "") << d(i, j);
    if (!m.index().is_finite()) os << " ...";
    os << "\n";
  }
  if (!m.index().is_finite()) os << "  ...\n";
  return os.str();
}

std::string multiset_text(const Multiset& m) {
  if (m.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : m) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "S_" + std::to_string(i);
  }
  return s;
}

// classify --------------------------------------------------------------

struct ClassifyOptions {
  std::string gcm;
  bool certificate = false;
};

int do_classify(const ClassifyOptions& o, bool json, std::ostream& out) {
  const Json input = read_json_file(o.gcm);
  PresentedMatrix m;
  try {
    m = matrix_from_json(input);
  } catch (const std::exception& e) {
    fail(kValidation, o.gcm + ": " + e.what());
  }
  GCM c;
  try {
    c = validate_gcm(m);
  } catch (const AxiomViolation& e) {
    fail(kValidation, "not a generalized Cartan matrix: " + std::string(e.what()));
  }
  Classification cl;
  try {
    cl = classify(c);
  } catch (const NotConnected& e) {
    fail(kValidation, e.what());
  }
  const PresentedMatrix q = graph_of(c).adjacency;
  std::optional<std::size_t> h;
  bool annihilated = false;
  if (cl.result == Classification::Result::Classical && cl.type) {
    h = coxeter_number(*cl.type);
    annihilated = poly_eval(r_poly(*h - 1), q) == PresentedMatrix::zero(q.index());
  }
  bool null_ok = false;
  if (cl.null_vector) null_ok = apply(c.matrix, *cl.null_vector).is_zero() && cl.null_vector->is_positive();
  const bool cert_ok = (!h || annihilated) && (!cl.null_vector || null_ok);
  const int rc = o.certificate && !cert_ok ? kMismatch : kOk;

  if (json) {
    Json j;
    j["result"] = to_string(cl.result);
    j["type"] = cl.type ? Json(to_string(*cl.type)) : Json(nullptr);
    if (h) j["coxeter_number"] = *h;
    if (!cl.note.empty()) j["note"] = cl.note;
    if (o.certificate) {
      Json cert = Json::object();
      if (!cl.minors.empty()) {
        Json minors = Json::array();
        for (const auto& v : cl.minors) minors.push_back(integer_to_json(v));
        cert["leading_principal_minors"] = std::move(minors);
      }
      if (h) cert["coxeter_annihilation"] = annihilated;
      if (cl.null_vector) {
        cert["null_vector"] = vector_to_json(*cl.null_vector);
        cert["null_vector_verified"] = null_ok;
      }
      j["certificate"] = std::move(cert);
    }
    out << j.dump(2) << "\n";
    return rc;
  }
  out << to_string(cl.result);
  if (cl.type) out << " " << to_string(*cl.type);
  if (h) out << " (h=" << *h << ")";
  if (!cl.note.empty()) out << ": " << cl.note;
  out << "\n";
  if (o.certificate) {
    if (!cl.minors.empty()) {
      out << "leading principal minors:";
      for (const auto& v : cl.minors) out << " " << v;
      out << "\n";
    }
    if (h) out << "R_" << *h - 1 << "(Q) = 0: " << (annihilated ? "verified" : "FAILED") << "\n";
    if (cl.null_vector) {
      out << "null vector: " << to_string(*cl.null_vector) << "\n";
      out << "C v = 0: " << (null_ok ? "verified" : "FAILED") << "\n";
    }
  }
  return rc;
}

// derive ----------------------------------------------------------------

struct DeriveOptions {
  std::string model;
  std::size_t upto = 2;
  std::string basis;
  std::size_t window = 6;
};

int do_derive(const DeriveOptions& o, bool json, std::ostream& out) {
  ModuleCategoryModel m = resolve_model(o.model);
  if (o.basis == "simples" && m.basis() == Basis::Projectives) m = to_simples_basis(m);
  if (o.basis == "projectives" && m.basis() == Basis::Simples) m = to_projectives_basis(m);
  if (json) {
    Json j;
    j["model"] = m.name();
    j["basis"] = to_string(m.basis());
    Json acts = Json::array();
    for (std::size_t i = 0; i <= o.upto; ++i) acts.push_back({{"i", i}, {"matrix", matrix_to_json(m.action(i))}});
    j["actions"] = std::move(acts);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "model " << m.name() << ", basis " << to_string(m.basis()) << "\n";
  for (std::size_t i = 0; i <= o.upto; ++i) {
    const auto f = m.action(i);
    out << "[F_" << i << "] " << matrix_to_json(f).dump() << "\n";
    if (f.index().kind == IndexSet::Kind::Int) out << "  (window from " << truncate_origin(f, o.window) << ")\n";
    out << window_rows(f, o.window);
  }
  return kOk;
}

// transitive ------------------------------------------------------------

int do_transitive(const std::string& model, bool json, std::ostream& out) {
  const auto m = resolve_model(model);
  const auto t = is_transitive(m);
  if (json) {
    out << Json({{"model", m.name()}, {"transitive", to_string(t.verdict)}, {"reason", t.reason}}).dump(2) << "\n";
  } else {
    out << m.name() << ": transitive " << to_string(t.verdict) << " (" << t.reason << ")\n";
  }
  return kOk;
}

// verify-catalog --------------------------------------------------------

struct FixtureCheck {
  Json json;
  bool ok = true;
  std::string line;
};

FixtureCheck check_fixture(const ModuleCategoryModel& m) {
  FixtureCheck r;
  const std::string& name = m.name();
  Json& j = r.json;
  j["name"] = name;
  j["basis"] = to_string(m.basis());
  j["expected_type"] = m.expected_type() ? Json(to_string(*m.expected_type())) : Json(nullptr);

  const auto cat = check_categorifiability(m);
  j["categorifiable_upto"] = cat.upto;
  j["categorifiable"] = cat.ok;
  const auto tr = is_transitive(m);
  j["transitive"] = to_string(tr.verdict);
  j["symmetric"] = semisimplicity_symmetry_check(m);

  bool compatible = true;
  for (std::size_t a = 0; a <= 6 && compatible; ++a) {
    for (std::size_t b = 0; b <= 6 && compatible; ++b) {
      PresentedMatrix sum = PresentedMatrix::zero(m.f1().index());
      const auto cg = tensor(FusionElement::simple(a), FusionElement::simple(b));
      for (const auto& [k, c] : cg.coeffs()) sum = sum + scale(m.action(k), c);
      compatible = m.action(a) * m.action(b) == sum;
    }
  }
  j["tensor_compatible_upto"] = 6;
  j["tensor_compatible"] = compatible;

  std::string got = "-";
  try {
    const auto cl = classify_type(m);
    j["classification"] = to_string(cl.result);
    got = cl.type ? to_string(*cl.type) : "none";
    j["type"] = cl.type ? Json(got) : Json(nullptr);
    j["null_vector"] = cl.null_vector ? vector_to_json(*cl.null_vector) : Json(nullptr);
    r.ok = r.ok && cl.type && m.expected_type() && *cl.type == *m.expected_type();
  } catch (const PreconditionFailed& e) {
    j["classification"] = "precondition failed";
    j["type"] = nullptr;
    j["error"] = e.what();
    r.ok = false;
  }

  Json reals = Json::array();
  std::string real_names;
  for (auto rz : all_realizations()) {
    if (catalog_name(rz) != name) continue;
    const bool match = derive_catalog_matrix(rz) == m.f1();
    reals.push_back({{"realization", to_string(rz)}, {"match", match}});
    real_names += (real_names.empty() ? "" : ", ") + to_string(rz) + (match ? "" : " MISMATCH");
    r.ok = r.ok && match;
  }
  j["realizations"] = std::move(reals);

  const auto obs = socle_top_feasibility(m, 2);
  const bool b_type = m.expected_type() && m.expected_type()->family == Family::Binf;
  const auto want = b_type ? ObstructionReport::Status::Unsat : ObstructionReport::Status::Sat;
  j["obstruction_depth2"] = to_string(obs.status);
  j["obstruction_expected"] = to_string(want);
  if (!obs.trace.empty()) j["obstruction_first_violated"] = obs.trace.front().identity;

  r.ok = r.ok && cat.ok && tr.verdict == Tri::Yes && compatible && obs.status == want;
  j["ok"] = r.ok;

  std::ostringstream line;
  line << name << ": type " << got << ", transitive " << to_string(tr.verdict) << ", obstruction "
       << to_string(obs.status);
  if (!real_names.empty()) line << ", derived by " << real_names;
  line << (r.ok ? "  ok" : "  MISMATCH");
  r.line = line.str();
  return r;
}

int do_verify_catalog(const std::vector<std::string>& files, bool json, std::ostream& out) {
  std::vector<ModuleCategoryModel> models;
  for (const auto& f : files) {
    if (!std::filesystem::exists(f)) fail(kUsage, "cannot read " + f);
    models.push_back(resolve_model(f));
  }
  if (files.empty()) {
    for (const auto& name : catalog_names()) models.push_back(catalog(name));
  }
  Json fixtures = Json::array();
  bool ok = true;
  std::vector<std::string> lines;
  for (const auto& m : models) {
    auto c = check_fixture(m);
    ok = ok && c.ok;
    lines.push_back(c.line);
    fixtures.push_back(std::move(c.json));
  }
  // tensor table for L(1) (x) P(lambda)
  bool table = true;
  for (long l = -12; l <= -1; ++l) {
    const auto d = decompose_in_N(tensor_in_O(1, class_of({l == -1 ? NamedOObject::Tag::L : NamedOObject::Tag::P, l})));
    std::vector<std::pair<NamedOObject, Integer>> want;
    auto p = [](long x) {
      return x == -1 ? NamedOObject{NamedOObject::Tag::L, -1} : NamedOObject{NamedOObject::Tag::P, x};
    };
    if (l == -1) want = {{p(-2), 1}};
    else if (l == -2) want = {{p(-1), 2}, {p(-3), 1}};
    else want = {{p(l + 1), 1}, {p(l - 1), 1}};
    table = table && d == want;
  }
  ok = ok && table;
  if (json) {
    Json j;
    j["fixtures"] = std::move(fixtures);
    j["projective_tensor_table"] = {{"lambda_from", -12}, {"lambda_to", -1}, {"match", table}};
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
    out << "L(1) x P(lambda) table, -12 <= lambda <= -1: " << (table ? "ok" : "MISMATCH") << "\n";
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kMismatch;
}

// obstruction -----------------------------------------------------------

struct ObstructionCli {
  std::string model;
  std::size_t depth = 2;
  std::vector<std::string> schur;
  int max_length = 4;
  std::size_t depth_cap = 5;
};

int do_obstruction(const ObstructionCli& o, bool json, std::ostream& out) {
  const auto m = resolve_model(o.model);
  ObstructionOptions opt;
  opt.max_length = o.max_length;
  opt.depth_cap = o.depth_cap;
  static const std::regex pair_re(R"((-?\d+)=(\d+))");
  for (const auto& s : o.schur) {
    std::smatch mt;
    if (!std::regex_match(s, mt, pair_re) || std::stoi(mt[2]) < 1) fail(kUsage, "--schur-dim expects I=D with D >= 1, got " + s);
    opt.schur_dims[std::stol(mt[1])] = std::stoi(mt[2]);
  }
  ObstructionReport r;
  try {
    r = socle_top_feasibility(m, o.depth, opt);
  } catch (const DepthTooLarge& e) {
    fail(kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kValidation, e.what());
  }
  if (json) {
    out << report_to_json(r).dump(2) << "\n";
    return kOk;
  }
  out << r.model << " depth " << r.depth << ": " << to_string(r.status) << " (" << r.constraints << " constraints, "
      << r.skipped << " skipped)\n";
  if (r.status == ObstructionReport::Status::Unsat) {
    const auto& f = r.trace.front();
    out << "first violated: " << f.identity << "  (" << f.lhs << " != " << f.rhs << ")\n";
    out << "trace:\n";
    for (const auto& t : r.trace) {
      out << "  " << t.kind << "  " << t.identity << "  (" << t.lhs << " != " << t.rhs << ", " << t.violations
          << (t.violations == 1 ? " time" : " times") << ")\n";
    }
  } else {
    out << "witness:\n";
    for (const auto& mod : r.modules) {
      if (mod.functor == 0) continue;
      out << "  F_" << mod.functor << " S_" << mod.object << ": " << multiset_text(mod.composition);
      if (mod.wildcard) out << "; unconstrained\n";
      else out << "; top " << multiset_text(mod.top) << "; socle " << multiset_text(mod.socle) << "\n";
    }
  }
  return kOk;
}

// decompose and oracles -------------------------------------------------

std::pair<std::size_t, NamedOObject> parse_tensor(const std::string& text) {
  static const std::regex re(R"(\s*L\s*\(\s*(\d+)\s*\)\s*(?:x|X|\*|\(x\)|⊗)\s*(.+))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(kUsage, "expected \"L(n) x OBJECT\", got \"" + text + "\"");
  try {
    return {std::stoul(m[1]), parse_o_object(m[2])};
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
}

Json class_json(const OClassVector& v) {
  Json j = Json::object();
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) {
    j["Delta(" + to_string(it->first) + ")"] = integer_to_json(it->second);
  }
  return j;
}

Json summands_json(const std::vector<std::pair<NamedOObject, Integer>>& d) {
  Json a = Json::array();
  for (const auto& [o, c] : d) a.push_back({{"object", to_string(o)}, {"multiplicity", integer_to_json(c)}});
  return a;
}

void print_summands(const std::vector<std::pair<NamedOObject, Integer>>& d, std::ostream& out) {
  std::string s;
  bool p_minus_one = false;
  for (const auto& [o, c] : d) {
    p_minus_one = p_minus_one || (o.tag == NamedOObject::Tag::L && o.lambda == -1);
    for (Integer t = 0; t < c; ++t) s += (s.empty() ? "" : " + ") + to_string(o, true);
  }
  out << (s.empty() ? "0" : s) << "\n";
  if (p_minus_one) out << "note: P(-1) = L(-1)\n";
}

OClassVector checked_class(const NamedOObject& o) {
  try {
    return class_of(o);
  } catch (const IllegalObject& e) {
    fail(kValidation, e.what());
  }
}

int do_decompose(const std::string& text, bool json, std::ostream& out) {
  const auto [n, obj] = parse_tensor(text);
  const auto cls = tensor_in_O(n, checked_class(obj));
  std::vector<std::pair<NamedOObject, Integer>> d;
  try {
    d = decompose_in_N(cls);
  } catch (const NotInCatalog& e) {
    fail(kValidation, std::string("not in the additive closure of L and P: ") + e.what());
  }
  if (json) {
    out << Json({{"tensor", text}, {"class", class_json(cls)}, {"summands", summands_json(d)}}).dump(2) << "\n";
  } else {
    print_summands(d, out);
  }
  return kOk;
}

int do_o_tensor(std::size_t n, const std::string& object, bool json, std::ostream& out) {
  NamedOObject obj;
  try {
    obj = parse_o_object(object);
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
  const auto cls = tensor_in_O(n, checked_class(obj));
  std::optional<std::vector<std::pair<NamedOObject, Integer>>> d;
  std::string why;
  try {
    d = decompose_in_N(cls);
  } catch (const NotInCatalog& e) {
    why = e.what();
  }
  if (json) {
    Json j{{"n", n}, {"object", to_string(obj)}, {"class", class_json(cls)}};
    j["summands"] = d ? summands_json(*d) : Json(nullptr);
    if (!d) j["reason"] = why;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "[L(" << n << ") x " << to_string(obj, true) << "] = " << to_string(cls) << "\n";
  if (d) {
    out << "in N: ";
    print_summands(*d, out);
  } else {
    out << "in N: not expressible (" << why << ")\n";
  }
  return kOk;
}

int do_jordan(std::size_t n, const std::string& lambda_text, bool json, std::ostream& out) {
  const auto lambda = parse_rational(lambda_text);
  if (!lambda) fail(kUsage, "--lambda expects a rational p or p/q, got " + lambda_text);
  if (n == 0) fail(kUsage, "--n must be positive");
  const auto p = jordan_kronecker_oracle(n, *lambda);
  if (json) {
    Json blocks = Json::array();
    for (const auto& b : p) blocks.push_back({{"size", b.size}, {"eigenvalue", to_string(b.eigenvalue)}});
    out << Json({{"n", n}, {"lambda", to_string(*lambda)}, {"partition", blocks}}).dump(2) << "\n";
  } else {
    out << to_string(p) << "\n";
  }
  return kOk;
}

int do_restrictions(const std::string& system, std::size_t truncation, bool assume, bool json, std::ostream& out) {
  RestrictionSystem s;
  try {
    s = builtin_system(system, truncation, assume);
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
  const auto sol = restriction_consistency_solve(s, truncation);
  const bool bad = sol.status == RestrictionSolution::Status::Infeasible ||
                   (sol.status == RestrictionSolution::Status::Unique && !sol.certified);
  if (json) {
    out << solution_to_json(s, sol).dump(2) << "\n";
    return bad ? kMismatch : kOk;
  }
  out << "system " << s.name << ", truncation " << truncation << ": " << to_string(sol.status) << " ("
      << sol.unknowns << " unknowns, " << sol.equations << " equations)\n";
  switch (sol.status) {
    case RestrictionSolution::Status::Infeasible:
      out << "inconsistent: " << sol.failed_relation << "\n";
      break;
    case RestrictionSolution::Status::Underdetermined:
      out << "free dimensions: " << sol.free_dims << "\n";
      break;
    case RestrictionSolution::Status::Unique: {
      out << "relations hold for every L(k): " << (sol.certified ? "yes" : "no") << "\n";
      std::size_t fixed = 0;
      for (const auto& m : s.modules) {
        if (s.fixed.count(m)) {
          ++fixed;
          continue;
        }
        out << m << " = " << to_string(sol.characters.at(m)) << "\n";
      }
      if (fixed) out << fixed << " characters fixed by assumption\n";
      break;
    }
  }
  return bad ? kMismatch : kOk;
}

// render ------------------------------------------------------------------

int do_render(const std::string& model, const std::string& path, std::size_t window, bool json, std::ostream& out) {
  const auto m = resolve_model(model);
  const std::string dot = to_dot(m.f1(), m.name(), window);
  if (path == "-") {
    out << dot;
    return kOk;
  }
  std::ofstream f(path);
  if (!f) fail(kUsage, "cannot write " + path);
  f << dot;
  if (json) out << Json({{"model", m.name()}, {"dot", path}}).dump(2) << "\n";
  else out << "wrote " << path << "\n";
  return kOk;
}

// predict -----------------------------------------------------------------

struct PredictOptions {
  std::string theorem;
  std::string case_name;
  std::string lambda;
  std::string special_fixed;
  int dim = -1;
  std::string g;
};

std::optional<bool> yes_no(const std::string& flag, const std::string& v) {
  if (v.empty()) return std::nullopt;
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  fail(kUsage, flag + " expects yes or no, got " + v);
}

int do_predict(const PredictOptions& o, bool json, std::ostream& out) {
  TypePrediction p;
  Json input;
  try {
    if (o.theorem == "10.1") {
      if (o.dim >= 0 || !o.g.empty()) fail(kUsage, "--dim and --g belong to --theorem 10.2");
      if (o.case_name.empty() == o.lambda.empty()) fail(kUsage, "give exactly one of --case and --lambda");
      LambdaClass c;
      auto sf = yes_no("--special-fixed", o.special_fixed);
      if (!o.case_name.empty()) {
        // a..e name the outcome rows; b and c carry the special-fixed answer
        static const std::map<std::string, std::pair<LambdaClass, std::optional<bool>>> letters = {
            {"a", {LambdaClass::NonHalfInteger, {}}},
            {"b", {LambdaClass::HalfIntegerNotInteger, true}},
            {"c", {LambdaClass::HalfIntegerNotInteger, false}},
            {"d", {LambdaClass::NonnegInteger, {}}},
            {"e", {LambdaClass::NegativeInteger, {}}},
        };
        if (auto it = letters.find(o.case_name); it != letters.end()) {
          if (sf && it->second.second && sf != it->second.second) {
            fail(kUsage, "--special-fixed contradicts case " + o.case_name);
          }
          if (!sf) sf = it->second.second;
          c = it->second.first;
        } else {
          const auto parsed = parse_lambda_class(o.case_name);
          if (!parsed) {
            fail(kUsage, "unknown case '" + o.case_name +
                             "' (a..e, non-half-integer, half-integer-not-integer, nonneg-integer, negative-integer)");
          }
          c = *parsed;
        }
      } else {
        const auto l = parse_rational(o.lambda);
        if (!l) fail(kUsage, "--lambda expects a rational, got " + o.lambda);
        c = classify_lambda(*l);
        input["lambda"] = to_string(*l);
      }
      input["class"] = to_string(c);
      if (sf) input["special_fixed"] = *sf;
      p = predict_simple_module(c, sf);
    } else if (o.theorem == "10.2") {
      if (!o.case_name.empty() || !o.lambda.empty() || !o.special_fixed.empty()) {
        fail(kUsage, "--case, --lambda and --special-fixed belong to --theorem 10.1");
      }
      if (o.dim < 0) fail(kUsage, "--theorem 10.2 needs --dim");
      std::optional<bool> ss;
      if (o.g == "semisimple") ss = true;
      else if (o.g == "nilpotent") ss = false;
      else if (!o.g.empty()) fail(kUsage, "--g expects nilpotent or semisimple");
      input["dim"] = o.dim;
      if (ss) input["g"] = o.g;
      p = subalgebra_type(o.dim, ss);
    } else {
      fail(kUsage, "--theorem expects 10.1 or 10.2");
    }
  } catch (const MissingFlag& e) {
    fail(kUsage, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
  if (json) {
    Json j{{"theorem", o.theorem}, {"input", input}};
    j["prediction"] = prediction_to_json(p);
    out << j.dump(2) << "\n";
  } else {
    out << describe(p) << "\n";
  }
  return kOk;
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool any = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) quote = 0;
      else cur += ch;
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      any = true;
    } else if (ch == ' ' || ch == '\t') {
      if (any || !cur.empty()) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
    }
  }
  if (quote) throw std::invalid_argument("unterminated quote");
  if (any || !cur.empty()) out.push_back(cur);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck-level module categories over sl2-mod", "sl2cat"};
  app.require_subcommand(1, 1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");
  app.fallthrough();

  ClassifyOptions co;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a generalized Cartan matrix");
  classify_cmd->add_option("--gcm", co.gcm, "Matrix JSON file")->required();
  classify_cmd->add_flag("--certificate", co.certificate, "Print minors, null vector and Coxeter check");

  DeriveOptions dopt;
  auto* derive_cmd = app.add_subcommand("derive", "Print [F_i] = R_i([F_1])");
  derive_cmd->add_option("--model", dopt.model, "Catalog name or model JSON file")->required();
  derive_cmd->add_option("--upto", dopt.upto, "Largest i")->required();
  derive_cmd->add_option("--basis", dopt.basis, "projectives or simples")
      ->check(CLI::IsMember({"projectives", "simples"}));
  derive_cmd->add_option("--window", dopt.window, "Rows shown per matrix")->capture_default_str();

  std::string trans_model;
  auto* trans_cmd = app.add_subcommand("transitive", "Decide transitivity");
  trans_cmd->add_option("--model", trans_model, "Catalog name or model JSON file")->required();

  std::vector<std::string> fixture_files;
  auto* verify_cmd = app.add_subcommand("verify-catalog", "Re-derive and cross-check every catalog fixture");
  verify_cmd->add_option("--fixture", fixture_files, "Check model files instead of the catalog (repeatable)");

  ObstructionCli oo;
  auto* obs_cmd = app.add_subcommand("obstruction", "Top/socle feasibility search");
  obs_cmd->add_option("--model", oo.model, "Catalog name or model JSON file")->required();
  obs_cmd->add_option("--depth", oo.depth, "Window size")->required();
  obs_cmd->add_option("--schur-dim", oo.schur, "Override dim End(S_I) as I=D (repeatable)");
  obs_cmd->add_option("--max-length", oo.max_length, "Longest module searched")->capture_default_str();
  obs_cmd->add_option("--depth-cap", oo.depth_cap, "Largest accepted depth")->capture_default_str();

  std::string tensor_text;
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose L(n) x X over L(lambda), P(lambda)");
  dec_cmd->add_option("--tensor", tensor_text, "For example \"L(1) x P(-2)\"")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Independent oracles");
  oracle_cmd->require_subcommand(1, 1);
  oracle_cmd->fallthrough();
  std::size_t jn = 0;
  std::string jl = "0";
  auto* jordan_cmd = oracle_cmd->add_subcommand("jordan", "Jordan type of L(1) x M(n, lambda)");
  jordan_cmd->add_option("--n", jn, "Jordan cell size")->required();
  jordan_cmd->add_option("--lambda", jl, "Eigenvalue, rational")->capture_default_str();
  std::size_t on = 1;
  std::string oobj;
  auto* otensor_cmd = oracle_cmd->add_subcommand("o-tensor", "L(n) x X in the Verma basis");
  otensor_cmd->add_option("--n", on, "Finite-dimensional factor L(n)")->capture_default_str();
  otensor_cmd->add_option("--object", oobj, "L(..), P(..) or Delta(..)")->required();
  std::string rsys;
  std::size_t rtrunc = 20;
  bool rassume = false;
  auto* restr_cmd = oracle_cmd->add_subcommand("restrictions", "Restriction character consistency");
  restr_cmd->add_option("--system", rsys, "takiff, schrodinger or dinf")->required();
  restr_cmd->add_option("--truncation", rtrunc, "Largest sl2 index")->capture_default_str();
  restr_cmd->add_flag("--assume-restrictions", rassume, "dinf: fix V(n) = L(n) + L(n+2) + ...");

  std::string rmodel, rdot;
  std::size_t rwindow = 0;
  auto* render_cmd = app.add_subcommand("render", "Write the diagram of [F_1] as DOT");
  render_cmd->add_option("--model", rmodel, "Catalog name or model JSON file")->required();
  render_cmd->add_option("--dot", rdot, "Output file, - for stdout")->required();
  render_cmd->add_option("--window", rwindow, "Vertices shown for infinite models");

  PredictOptions po;
  auto* predict_cmd = app.add_subcommand("predict", "Type predictions by case");
  predict_cmd->add_option("--theorem", po.theorem, "10.1 (simple modules) or 10.2 (subalgebras)")->required();
  predict_cmd->add_option("--case", po.case_name, "Class of lambda");
  predict_cmd->add_option("--lambda", po.lambda, "Highest weight lambda, rational");
  predict_cmd->add_option("--special-fixed", po.special_fixed, "yes or no");
  predict_cmd->add_option("--dim", po.dim, "dim of a");
  predict_cmd->add_option("--g", po.g, "nilpotent or semisimple");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') continue;
    bool known = false;
    for (auto* sub : app.get_subcommands({})) known = known || sub->get_name() == a;
    if (!known) {
      err << "error: unknown verb '" << a << "'\n" << "usage: see sl2cat --help\n";
      return kUsage;
    }
    break;
  }

  std::vector<std::string> argv_store{"sl2cat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) {
      for (auto* leaf : sub->get_subcommands()) sub = leaf;
      err << "usage: see sl2cat " << sub->get_name() << " --help\n";
    }
    return kUsage;
  }

  try {
    if (*classify_cmd) return do_classify(co, json, out);
    if (*derive_cmd) return do_derive(dopt, json, out);
    if (*trans_cmd) return do_transitive(trans_model, json, out);
    if (*verify_cmd) return do_verify_catalog(fixture_files, json, out);
    if (*obs_cmd) return do_obstruction(oo, json, out);
    if (*dec_cmd) return do_decompose(tensor_text, json, out);
    if (*jordan_cmd) return do_jordan(jn, jl, json, out);
    if (*otensor_cmd) return do_o_tensor(on, oobj, json, out);
    if (*restr_cmd) return do_restrictions(rsys, rtrunc, rassume, json, out);
    if (*render_cmd) return do_render(rmodel, rdot, rwindow, json, out);
    if (*predict_cmd) return do_predict(po, json, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}

}  // namespace sl2cat::cli
