#include "doctest.h"
#include "sl2cat/fusion.hpp"
#include "sl2cat/modcat.hpp"
#include "sl2cat/oracles.hpp"

#include <random>

using namespace sl2cat;

namespace {

using Decomp = std::vector<std::pair<NamedOObject, Integer>>;

NamedOObject L(long l) { return {NamedOObject::Tag::L, l}; }
NamedOObject P(long l) { return l == -1 ? L(-1) : NamedOObject{NamedOObject::Tag::P, l}; }

// L(1) (x) P(lambda), three-case table
Decomp expected_p_tensor(long l) {
  if (l == -1) return {{P(-2), 1}};
  if (l == -2) return {{P(-1), 2}, {P(-3), 1}};
  return {{P(l + 1), 1}, {P(l - 1), 1}};
}

OClassVector random_class(std::mt19937& rng) {
  std::uniform_int_distribution<int> w(-8, 8), c(-3, 3), n(1, 4);
  OClassVector v;
  for (int t = n(rng); t > 0; --t) v.add(Rational(w(rng)), c(rng));
  return v;
}

}  // namespace

TEST_CASE("tensor_in_O examples") {
  CHECK(tensor_in_O(1, OClassVector::verma(-1)) == OClassVector({{0, 1}, {-2, 1}}));
  const OClassVector v({{3, 2}, {Rational(1, 3), -1}});
  CHECK(tensor_in_O(0, v) == v);
  CHECK(tensor_in_O(1, class_of(P(-2))) == OClassVector({{-1, 2}, {-3, 1}, {1, 1}}));
}

TEST_CASE("decompose_in_N examples") {
  CHECK(decompose_in_N(tensor_in_O(1, class_of(L(-1)))) == Decomp{{P(-2), 1}});
  CHECK(decompose_in_N(tensor_in_O(1, class_of(P(-2)))) == Decomp{{L(-1), 2}, {P(-3), 1}});
  CHECK(decompose_in_N(tensor_in_O(1, class_of(L(-3)))) == Decomp{{L(-2), 1}, {L(-4), 1}});
  CHECK_THROWS_AS(decompose_in_N(OClassVector::verma(0).scaled(-1)), NotInCatalog);
  CHECK_THROWS_AS(decompose_in_N(OClassVector::verma(-3).scaled(-1)), NotInCatalog);
  CHECK_THROWS_AS(class_of(L(0)), IllegalObject);
  CHECK_THROWS_AS(class_of(NamedOObject{NamedOObject::Tag::P, 2}), IllegalObject);
}

TEST_CASE("L(1) (x) P(lambda) reproduces the three-case table for -12 <= lambda <= -1") {
  for (long l = -12; l <= -1; ++l) {
    CHECK_MESSAGE(decompose_in_N(tensor_in_O(1, class_of(P(l)))) == expected_p_tensor(l), "lambda=" << l);
  }
}

TEST_CASE("object parsing and printing") {
  CHECK(parse_o_object("P(-1)") == L(-1));
  CHECK(parse_o_object(" P( -2 ) ") == P(-2));
  CHECK(parse_o_object("L(1/3)").lambda == Rational(1, 3));
  CHECK(parse_o_object("Delta(4)").tag == NamedOObject::Tag::Delta);
  CHECK(to_string(L(-1), true) == "P(-1)");
  CHECK(to_string(L(-1)) == "L(-1)");
  CHECK_THROWS_AS(parse_o_object("Q(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_o_object("L(x)"), std::invalid_argument);
}

TEST_CASE("property: tensor_in_O is compatible with Clebsch-Gordan") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto v = random_class(rng);
    for (std::size_t m = 0; m <= 6; ++m) {
      for (std::size_t n = 0; n <= 6; ++n) {
        OClassVector rhs;
        const auto cg = tensor(FusionElement::simple(m), FusionElement::simple(n));
        for (const auto& [k, c] : cg.coeffs()) {
          rhs = rhs + tensor_in_O(k, v).scaled(c);
        }
        CHECK(tensor_in_O(m, tensor_in_O(n, v)) == rhs);
      }
    }
  }
}

TEST_CASE("realizations reproduce the catalog fixtures") {
  for (auto r : all_realizations()) {
    CHECK_MESSAGE(derive_catalog_matrix(r) == catalog(catalog_name(r)).f1(), to_string(r));
  }
  const auto n6 = derive_catalog_matrix(Realization::N6Borel);
  CHECK(is_symmetric(n6));
  CHECK(n6.band() == 1);
}

TEST_CASE("Borel rules") {
  for (Index mu = -5; mu <= 5; ++mu) CHECK(borel_tensor_N(mu) == std::pair<Index, Index>{mu + 1, mu - 1});
  CHECK(borel_tensor_Q(0) == std::vector<std::size_t>{1});
  for (std::size_t i = 1; i <= 15; ++i) CHECK(borel_tensor_Q(i) == std::vector<std::size_t>{i - 1, i + 1});
}

TEST_CASE("Q(lambda, i) uniserial bookkeeping") {
  for (std::size_t i = 0; i <= 15; ++i) {
    const auto ci = q_composition(i);
    CHECK(ci.size() == i + 1);
    CHECK(ci.front() == q_top(i));
    CHECK(ci.back() == q_socle(i));
    for (std::size_t j = 0; j <= 15; ++j) {
      const auto cj = q_composition(j);
      if (i > j) CHECK(std::count(cj.begin(), cj.end(), -static_cast<Index>(i)) == 0);
      if (i < j) CHECK(std::count(ci.begin(), ci.end(), static_cast<Index>(j)) == 0);
      CHECK(q_hom_bound(i, j) == (i == j ? 1 : 0));
    }
  }
}

namespace {

// Dense exact ranks of (A - lambda)^k
JordanPartition dense_jordan(std::size_t n, const Rational& lambda) {
  const std::size_t d = 2 * n;
  RationalMatrix nil(d, d);
  for (std::size_t b = 0; b < n; ++b) {
    nil(b, n + b) += 1;
    if (b + 1 < n) {
      nil(b, b + 1) += 1;
      nil(n + b, n + b + 1) += 1;
    }
  }
  (void)lambda;
  std::vector<std::size_t> r{d};
  RationalMatrix p = nil;
  while (r.back()) {
    r.push_back(rank(p));
    RationalMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (p(i, k) != 0)
          for (std::size_t j = 0; j < d; ++j) q(i, j) += p(i, k) * nil(k, j);
    p = q;
  }
  JordanPartition out;
  for (std::size_t k = r.size() - 1; k >= 1; --k) {
    const std::size_t ge = r[k - 1] - r[k], gt = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (std::size_t t = ge - gt; t > 0; --t) out.push_back({k, lambda});
  }
  return out;
}

}  // namespace

TEST_CASE("Jordan oracle") {
  CHECK(jordan_kronecker_oracle(1, 7) == JordanPartition{{2, 7}});
  CHECK(jordan_kronecker_oracle(3, 0) == JordanPartition{{4, 0}, {2, 0}});
  CHECK(jordan_kronecker_oracle(10, 5) == JordanPartition{{11, 5}, {9, 5}});
  for (std::size_t n = 1; n <= 8; ++n) CHECK(jordan_kronecker_oracle(n, Rational(2, 3)) == dense_jordan(n, Rational(2, 3)));
  CHECK(to_string(jordan_kronecker_oracle(3, Rational(-1, 2))) == "{(4, -1/2), (2, -1/2)}");
}

TEST_CASE("property: Jordan oracle gives (n+1) + (n-1)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (int t = 0; t < 5; ++t) {
    const Rational l(num(rng), den(rng));
    for (std::size_t n = 2; n <= 50; n += 6) {
      CHECK(jordan_kronecker_oracle(n, l) == JordanPartition{{n + 1, l}, {n - 1, l}});
    }
  }
}
