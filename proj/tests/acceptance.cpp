// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "cli.hpp"
#include "sl2cat/dynkin.hpp"
#include "sl2cat/fusion.hpp"
#include "sl2cat/matrix_json.hpp"
#include "sl2cat/modcat.hpp"
#include "sl2cat/obstruction.hpp"
#include "sl2cat/oracles.hpp"
#include "sl2cat/predict.hpp"
#include "sl2cat/restriction.hpp"
#include "weight_oracle.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace sl2cat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

std::size_t coxeter_table(const DynkinType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 12;
    case Family::G2: return 6;
    default: return 0;
  }
}

std::vector<DynkinType> ranked_upto(const std::vector<Family>& families, std::size_t max_rank) {
  std::vector<DynkinType> out;
  for (Family f : families) {
    DynkinType t{f, min_rank(f)};
    if (!t.has_rank()) {
      out.push_back(t);
      continue;
    }
    for (std::size_t n = min_rank(f); n <= max_rank; ++n) out.push_back({f, n});
  }
  return out;
}

bool is_zero(const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

DenseMatrix minus(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

// R_0..R_k evaluated at a dense matrix by the three-term recurrence.
std::vector<DenseMatrix> dense_r_values(const DenseMatrix& q, std::size_t k) {
  std::vector<DenseMatrix> r{DenseMatrix::identity(q.rows()), q};
  while (r.size() <= k) r.push_back(minus(q * r.back(), r[r.size() - 2]));
  return r;
}

Outcome fusion_criterion() {
  Outcome o;
  for (SimpleIndex m = 0; m <= 40; ++m) {
    for (SimpleIndex n = 0; n <= 40; ++n) {
      const auto got = tensor(FusionElement::simple(m), FusionElement::simple(n));
      const auto want = testing::weight_oracle_tensor(m, n);
      o.require(got == want, "L(" + std::to_string(m) + ") x L(" + std::to_string(n) + ")");
      o.require(dim(got) == Integer((m + 1) * (n + 1)), "dimension");
    }
  }
  return o;
}

Outcome coxeter_criterion() {
  Outcome o;
  for (const auto& t : ranked_upto(classical_families(), 8)) {
    const std::size_t h = coxeter_table(t);
    o.require(coxeter_number(t) == h, to_string(t) + " Coxeter number");
    o.require(check_coxeter_annihilation(t), to_string(t) + " library check");
    const auto q = diagram_template(t).adjacency;
    const auto r = dense_r_values(truncate(q, q.index().n), h - 1);
    o.require(is_zero(r[h - 1]), to_string(t) + ": R_{h-1}(Q) != 0");
    o.require(!is_zero(r[h - 2]), to_string(t) + ": R_{h-2}(Q) == 0");
  }
  return o;
}

Outcome affine_criterion() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& t : ranked_upto(affine_families(), 8)) {
    const auto g = gcm_of(diagram_template(t));
    const auto cl = classify(g);
    o.require(cl.result == Classification::Result::Affine && cl.type == t, to_string(t) + " classification");
    if (!cl.null_vector) {
      o.require(false, to_string(t) + " no null vector");
      continue;
    }
    const auto& v = cl.null_vector->head();
    const DenseMatrix c = truncate(g.matrix, v.size());
    Integer gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      o.require(v[i] > 0, to_string(t) + " not strictly positive");
      gcd = boost::multiprecision::gcd(gcd, v[i]);
      Integer row = 0;
      for (std::size_t j = 0; j < v.size(); ++j) row += c(i, j) * v[j];
      o.require(row == 0, to_string(t) + " C v != 0");
    }
    o.require(gcd == 1, to_string(t) + " not primitive");
    ++count;
  }
  const auto a12 = classify(gcm_of(diagram_template({Family::AffA12, 1})));
  o.require(a12.null_vector && a12.null_vector->head() == std::vector<Integer>{1, 1}, "~A12 -> (1,1)");
  o.detail = o.pass ? std::to_string(count) + " templates" : o.detail;
  return o;
}

Outcome infinite_criterion() {
  Outcome o;
  const std::vector<std::pair<Family, std::function<Integer(Index)>>> cases = {
      {Family::Ainf, [](Index i) { return Integer(i + 1); }},
      {Family::AinfInf, [](Index) { return Integer(1); }},
      {Family::Binf, [](Index i) { return Integer(i == 0 ? 1 : 2); }},
      {Family::Cinf, [](Index) { return Integer(1); }},
      {Family::Dinf, [](Index i) { return Integer(i < 2 ? 1 : 2); }},
      {Family::Tinf, [](Index) { return Integer(1); }},
  };
  for (const auto& [f, want] : cases) {
    const DynkinType t{f, 0};
    const auto g = gcm_of(diagram_template(t));
    const auto cl = classify(g);
    o.require(cl.result == Classification::Result::Infinite && cl.type == t, to_string(t) + " classification");
    if (!cl.null_vector) {
      o.require(false, to_string(t) + " no null vector");
      continue;
    }
    o.require(apply(g.matrix, *cl.null_vector).is_zero(), to_string(t) + " symbolic C v != 0");
    const std::size_t n = 30;
    const Index origin = truncate_origin(g.matrix, n);
    const DenseMatrix c = truncate(g.matrix, n);
    const std::size_t band = std::max<std::size_t>(g.matrix.band(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Index x = origin + static_cast<Index>(i);
      o.require(cl.null_vector->at(x) == want(x), to_string(t) + " null vector entry " + std::to_string(x));
      if (i + band >= n || (g.matrix.index().kind == IndexSet::Kind::Int && i < band)) continue;
      Integer row = 0;
      for (std::size_t j = 0; j < n; ++j) row += c(i, j) * want(origin + static_cast<Index>(j));
      o.require(row == 0, to_string(t) + " window row " + std::to_string(x));
    }
  }
  return o;
}

Outcome catalog_criterion() {
  Outcome o;
  std::set<std::string> derived;
  for (auto r : all_realizations()) {
    const auto name = catalog_name(r);
    o.require(derive_catalog_matrix(r) == catalog(name).f1(), to_string(r) + " != fixture " + name);
    derived.insert(name);
  }
  for (const char* name : {"Ainf", "AinfInf", "Cinf"}) o.require(derived.count(name) == 1, std::string(name) + " not derived");
  const std::map<std::string, Family> want = {
      {"Ainf", Family::Ainf}, {"AinfInf", Family::AinfInf}, {"BinfDual", Family::Binf},
      {"Cinf", Family::Cinf}, {"Dinf", Family::Dinf},       {"Tinf", Family::Tinf},
  };
  for (const auto& [name, family] : want) {
    const auto cl = classify_type(catalog(name));
    o.require(cl.type == DynkinType{family, 0}, name + " classify_type");
  }
  return o;
}

Outcome projective_table_criterion() {
  Outcome o;
  auto p = [](long l) { return "P(" + std::to_string(l) + ")"; };
  for (long l = -12; l <= -1; ++l) {
    std::map<std::string, Integer> want;
    if (l == -1) {
      want[p(-2)] = 1;
    } else if (l == -2) {
      want[p(-1)] = 2;
      want[p(-3)] = 1;
    } else {
      want[p(l - 1)] += 1;
      want[p(l + 1)] += 1;
    }
    const NamedOObject obj{l == -1 ? NamedOObject::Tag::L : NamedOObject::Tag::P, Rational(l)};
    std::map<std::string, Integer> got;
    for (const auto& [x, c] : decompose_in_N(tensor_in_O(1, class_of(obj)))) got[to_string(x, true)] += c;
    o.require(got == want, "lambda = " + std::to_string(l));
  }
  return o;
}

Outcome obstruction_criterion() {
  Outcome o;
  const auto b = socle_top_feasibility(catalog("BinfDual"), 2);
  o.require(b.status == ObstructionReport::Status::Unsat, "BinfDual not UNSAT");
  o.require(!b.trace.empty() && b.trace.front().kind == "hom", "trace does not start with a Hom identity");
  if (!b.trace.empty()) {
    // [soc F_1 S_x : S_y] = sum over F_1 F_1 = F_0 + F_2
    const auto& id = b.trace.front().identity;
    o.require(id.find("[soc F_1 ") == 0 || id.find("[top F_1 ") == 0, "unexpected identity " + id);
    o.require(id.find("F_0") != std::string::npos && id.find("F_2") != std::string::npos, "identity " + id);
    o.require(b.trace.front().lhs != b.trace.front().rhs, "violated identity holds");
    o.detail = id;
  }
  for (const auto& name : catalog_names()) {
    const auto m = catalog(name);
    if (!semisimplicity_symmetry_check(m)) continue;
    const auto r = socle_top_feasibility(m, 2);
    o.require(r.status == ObstructionReport::Status::Sat, name + " not SAT");
    for (const auto& u : r.modules) {
      o.require(u.top == u.composition && u.socle == u.composition, name + " witness not semisimple");
    }
  }
  return o;
}

Outcome simples_multiplicity_criterion() {
  Outcome o;
  const auto m = to_simples_basis(catalog("Ainf"));
  for (std::size_t i = 0; i <= 10; ++i) {
    const DenseMatrix a = truncate(m.action(i), 24);
    for (std::size_t j = 0; j <= 10; ++j) {
      const std::size_t lo = i > j ? i - j : j - i;
      for (std::size_t k = 0; k < 24; ++k) {
        const bool in = k >= lo && k <= i + j && (k - lo) % 2 == 0;
        o.require(a(k, j) == (in ? 1 : 0),
                  "[F_" + std::to_string(i) + " N_" + std::to_string(j) + " : N_" + std::to_string(k) + "]");
      }
    }
  }
  return o;
}

Outcome jordan_criterion() {
  Outcome o;
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 17);
  std::size_t runs = 0;
  for (std::size_t n = 2; n <= 50; ++n) {
    for (int k = 0; k < 5; ++k) {
      const Rational lambda(num(rng), den(rng));
      const JordanPartition want = {{n + 1, lambda}, {n - 1, lambda}};
      const auto got = jordan_kronecker_oracle(n, lambda);
      o.require(got == want, "n = " + std::to_string(n) + ", lambda = " + lambda.str() + ": " + to_string(got));
      ++runs;
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " cases";
  return o;
}

Outcome restriction_criterion() {
  Outcome o;
  for (const char* name : {"takiff", "schrodinger"}) {
    const auto sys = builtin_system(name, 20);
    const auto sol = restriction_consistency_solve(sys, 20);
    o.require(sol.status == RestrictionSolution::Status::Unique && sol.certified && sol.nonnegative_integral,
              std::string(name) + " does not verify");
  }
  const auto sys = builtin_system("dinf", 20, true);
  const auto sol = restriction_consistency_solve(sys, 20);
  o.require(sol.status == RestrictionSolution::Status::Unique && sol.certified && sol.nonnegative_integral,
            "dinf has no unique certified solution");
  if (sol.status == RestrictionSolution::Status::Unique) {
    for (long k = 0; k < 40; ++k) {
      o.require(sol.characters.at("V'(0)").at(k) == (k % 4 == 0 ? 1 : 0), "V'(0) at " + std::to_string(k));
      o.require(sol.characters.at("V'(2)").at(k) == (k % 4 == 2 ? 1 : 0), "V'(2) at " + std::to_string(k));
    }
  }
  return o;
}

Outcome dispatch_criterion() {
  Outcome o;
  const DynkinType ainf{Family::Ainf, 0}, ainfinf{Family::AinfInf, 0}, tinf{Family::Tinf, 0}, cinf{Family::Cinf, 0};
  struct Row {
    LambdaClass c;
    std::optional<bool> special;
    std::string label;
    std::optional<DynkinType> type;
    bool simple_transitive;
  };
  const std::vector<Row> rows = {
      {LambdaClass::NonHalfInteger, {}, "a", ainfinf, true},
      {LambdaClass::HalfIntegerNotInteger, true, "b", tinf, true},
      {LambdaClass::HalfIntegerNotInteger, false, "c", ainfinf, true},
      {LambdaClass::NonnegInteger, {}, "d", ainf, true},
      {LambdaClass::NegativeInteger, {}, "e", {}, false},
  };
  for (const auto& r : rows) {
    const auto p = predict_simple_module(r.c, r.special);
    o.require(p.case_label == r.label && p.type == r.type && p.simple_transitive == r.simple_transitive,
              "case " + r.label);
  }
  const auto e = predict_simple_module(LambdaClass::NegativeInteger);
  o.require(e.extension && e.extension->first == cinf && e.extension->second == ainf, "case e extension");
  for (auto c : {LambdaClass::NonHalfInteger, LambdaClass::NonnegInteger, LambdaClass::NegativeInteger}) {
    bool threw = false;
    try {
      predict_simple_module(c, true);
    } catch (const MissingFlag&) {
      threw = true;
    }
    o.require(threw, "extraneous special-fixed accepted");
  }
  bool threw = false;
  try {
    predict_simple_module(LambdaClass::HalfIntegerNotInteger);
  } catch (const MissingFlag&) {
    threw = true;
  }
  o.require(threw, "missing special-fixed accepted");
  o.require(classify_lambda(Rational(1, 3)) == LambdaClass::NonHalfInteger, "lambda 1/3");
  o.require(classify_lambda(Rational(-5, 2)) == LambdaClass::HalfIntegerNotInteger, "lambda -5/2");
  o.require(classify_lambda(Rational(4)) == LambdaClass::NonnegInteger, "lambda 4");
  o.require(classify_lambda(Rational(-1)) == LambdaClass::NegativeInteger, "lambda -1");

  const auto nil = subalgebra_type(1, false);
  o.require(nil.type == ainf && !nil.simple_transitive, "nilpotent g");
  const auto ss = subalgebra_type(1, true);
  o.require(ss.type == ainfinf && ss.simple_transitive, "semisimple g");
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome verify_catalog_criterion() {
  Outcome o;
  std::ostringstream out1, out2, err;
  const int rc1 = cli::run({"--json", "verify-catalog"}, out1, err);
  const int rc2 = cli::run({"--json", "verify-catalog"}, out2, err);
  o.require(rc1 == 0 && rc2 == 0, "exit status " + std::to_string(rc1));
  o.require(out1.str() == out2.str(), "output differs between runs");
  const std::string golden = slurp(std::string(SL2CAT_SOURCE_DIR) + "/tests/golden/verify_catalog.json");
  o.require(!golden.empty() && Json::parse(out1.str()) == Json::parse(golden), "differs from golden file");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fusion matches the weight oracle for m, n <= 40", fusion_criterion},
      {"Coxeter annihilation for classical diagrams", coxeter_criterion},
      {"affine null vectors at rank <= 8", affine_criterion},
      {"infinite templates and their null vectors", infinite_criterion},
      {"catalog fixtures from oracles and their types", catalog_criterion},
      {"L(1) x P(lambda) for -12 <= lambda <= -1", projective_table_criterion},
      {"B_inf obstruction and semisimple witnesses", obstruction_criterion},
      {"A_inf multiplicities in the simples basis", simples_multiplicity_criterion},
      {"Jordan type of L(1) x M(n, lambda)", jordan_criterion},
      {"restriction consistency at truncation 20", restriction_criterion},
      {"type dispatch tables", dispatch_criterion},
      {"verify-catalog exit status and golden stability", verify_catalog_criterion},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  return all ? 0 : 1;
}
