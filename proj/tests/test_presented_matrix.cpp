#include "doctest.h"
#include "sl2cat/matrix_json.hpp"
#include "sl2cat/presented_matrix.hpp"

#include <random>

using namespace sl2cat;

namespace {

PresentedMatrix a_inf() { return PresentedMatrix::toeplitz(IndexSet::nat(), {{-1, 1}, {1, 1}}); }

PresentedMatrix c_inf() {
  return PresentedMatrix(IndexSet::nat(), 1, {{{0, 1}, 2}, {{1, 0}, 1}}, {{-1, 1}, {1, 1}});
}

PresentedMatrix b_inf_dual() {
  return PresentedMatrix(IndexSet::nat(), 1, {{{0, 1}, 1}, {{1, 0}, 2}}, {{-1, 1}, {1, 1}});
}

PresentedMatrix t_inf() {
  return PresentedMatrix(IndexSet::nat(), 1, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}}, {{-1, 1}, {1, 1}});
}

PresentedMatrix d_inf() {
  return PresentedMatrix(IndexSet::nat(), 3,
                         {{{0, 2}, 1}, {{1, 2}, 1}, {{2, 0}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 2}, 1}},
                         {{-1, 1}, {1, 1}});
}

// Random Nat matrix with small head and band.
PresentedMatrix random_nat(std::mt19937& rng) {
  std::uniform_int_distribution<int> small(0, 4), val(-3, 3), band(0, 3);
  const std::size_t n = small(rng);
  const Index w = band(rng);
  PresentedMatrix::Entries head;
  for (int t = 0; t < 6 && n > 0; ++t) {
    Index i = std::uniform_int_distribution<Index>(0, n - 1)(rng);
    Index j = std::uniform_int_distribution<Index>(0, n + 3)(rng);
    if (rng() % 2) std::swap(i, j);
    head[{i, j}] = val(rng);
  }
  PresentedMatrix::Diagonals diag;
  for (Index d = -w; d <= w; ++d) diag[d] = val(rng);
  return PresentedMatrix(IndexSet::nat(), n, head, diag);
}

DenseMatrix corner(const DenseMatrix& m, std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("entry examples") {
  CHECK(a_inf().entry(0, 1) == 1);
  CHECK(a_inf().entry(0, 0) == 0);
  CHECK(c_inf().entry(0, 1) == 2);
  CHECK(c_inf().entry(1, 0) == 1);
  CHECK_THROWS_AS(PresentedMatrix::identity(IndexSet::finite(2)).entry(2, 0), IndexError);
  CHECK_THROWS_AS(a_inf().entry(-1, 0), IndexError);
}

TEST_CASE("normalization shrinks redundant heads") {
  auto d = d_inf();
  CHECK(d.head_size() == 1);
  CHECK(d.entry(2, 1) == 1);
  CHECK(d.entry(0, 1) == 0);
  CHECK(d.entry(1, 2) == 1);
  auto padded = a_inf().with_head_size(5);
  CHECK(padded.head_size() == 5);
  CHECK(PresentedMatrix(padded.index(), padded.head_size(), padded.head(), padded.diagonals()) == a_inf());
  CHECK_THROWS_AS(PresentedMatrix(IndexSet::nat(), 1, {{{2, 3}, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PresentedMatrix(IndexSet::integers(), 1, {}, {}), std::invalid_argument);
}

TEST_CASE("multiply examples") {
  CHECK((a_inf() * a_inf()).entry(0, 0) == 1);
  CHECK((c_inf() * c_inf()).entry(0, 0) == 2);
  const auto id = PresentedMatrix::identity(IndexSet::nat());
  CHECK(id * c_inf() == c_inf());
  CHECK(c_inf() * id == c_inf());
  CHECK_THROWS_AS(a_inf() * PresentedMatrix::identity(IndexSet::integers()), IncompatibleIndex);
}

TEST_CASE("poly_eval examples") {
  const auto f2 = poly_eval(r_poly(2), a_inf());
  const auto f3 = poly_eval(r_poly(3), a_inf());
  for (Index j = 0; j < 8; ++j) {
    CHECK(f2.entry(0, j) == (j == 2 ? 1 : 0));
    CHECK(f3.entry(0, j) == (j == 3 ? 1 : 0));
  }
  CHECK(poly_eval(r_poly(0), d_inf()) == PresentedMatrix::identity(IndexSet::nat()));
}

TEST_CASE("truncate examples") {
  CHECK(truncate(a_inf(), 3) == DenseMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(truncate(PresentedMatrix::zero(IndexSet::nat()), 2) == DenseMatrix{{0, 0}, {0, 0}});
  CHECK(truncate(b_inf_dual(), 2) == DenseMatrix{{0, 1}, {2, 0}});
  CHECK(truncate(PresentedMatrix::identity(IndexSet::finite(2)), 5).rows() == 2);
}

TEST_CASE("symmetry and transpose") {
  CHECK_FALSE(is_symmetric(c_inf()));
  CHECK(is_symmetric(a_inf()));
  CHECK(is_symmetric(d_inf()));
  CHECK(is_symmetric(t_inf()));
  CHECK(transpose(c_inf()) == b_inf_dual());
  CHECK(is_nonnegative(c_inf()));
  CHECK_FALSE(is_nonnegative(poly_eval(r_poly(3), PresentedMatrix::from_dense(DenseMatrix{{1}}))));
}

TEST_CASE("apply examples") {
  const auto counting = PresentedVector(IndexSet::nat(), {}, 1, 1);
  const auto r = apply(a_inf(), counting);
  CHECK(r == PresentedVector(IndexSet::nat(), {}, 2, 2));
  CHECK(apply(PresentedMatrix::identity(IndexSet::nat()), counting) == counting);
  const auto ones = PresentedVector::constant(IndexSet::nat(), 1);
  CHECK(apply(t_inf(), ones) == PresentedVector::constant(IndexSet::nat(), 2));
  CHECK(apply(a_inf(), ones) == PresentedVector(IndexSet::nat(), {1}, 0, 2));
}

TEST_CASE("property: truncated products match dense products") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 120; ++trial) {
    const auto a = random_nat(rng), b = random_nat(rng);
    const auto c = a * b;
    const std::size_t n = 1 + rng() % 64;
    const std::size_t big = n + a.band() + b.band() + a.reach() + b.reach();
    REQUIRE(truncate(c, n) == corner(truncate(a, big) * truncate(b, big), n));
  }
}

TEST_CASE("property: sums and transposes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_nat(rng), b = random_nat(rng);
    const std::size_t n = 12;
    const auto s = a + b;
    const auto da = truncate(a, n), db = truncate(b, n), ds = truncate(s, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) REQUIRE(ds(i, j) == da(i, j) + db(i, j));
    REQUIRE((a - a) == PresentedMatrix::zero(IndexSet::nat()));
    REQUIRE(transpose(transpose(a)) == a);
    REQUIRE(is_symmetric(a) == (a == transpose(a)));
    REQUIRE(is_symmetric(a + transpose(a)));
  }
}

TEST_CASE("property: Chebyshev recursion holds for evaluated matrices") {
  for (const auto& m : {a_inf(), c_inf(), b_inf_dual(), t_inf(), d_inf(),
                        PresentedMatrix::toeplitz(IndexSet::integers(), {{-1, 1}, {1, 1}})}) {
    for (std::size_t i = 2; i <= 8; ++i) {
      REQUIRE(poly_eval(r_poly(i), m) == m * poly_eval(r_poly(i - 1), m) - poly_eval(r_poly(i - 2), m));
    }
  }
}

TEST_CASE("property: apply agrees with truncated dense products") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_nat(rng);
    std::vector<Integer> head(rng() % 4);
    for (auto& x : head) x = val(rng);
    const PresentedVector v(IndexSet::nat(), head, val(rng), val(rng));
    const auto u = apply(m, v);
    const std::size_t n = 20, big = n + m.band() + m.reach() + 1;
    const auto dm = truncate(m, big);
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < big; ++j) s += dm(i, j) * v.at(static_cast<Index>(j));
      REQUIRE(u.at(static_cast<Index>(i)) == s);
    }
  }
}

TEST_CASE("int-indexed arithmetic") {
  const auto a = PresentedMatrix::toeplitz(IndexSet::integers(), {{-1, 1}, {1, 1}});
  const auto sq = a * a;
  CHECK(sq.entry(-5, -5) == 2);
  CHECK(sq.entry(3, 5) == 1);
  CHECK(truncate(a, 3) == DenseMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(truncate_origin(a, 5) == -2);
  const auto ones = PresentedVector::constant(IndexSet::integers(), 1);
  CHECK(apply(a, ones) == PresentedVector::constant(IndexSet::integers(), 2));
  CHECK_THROWS_AS(PresentedVector(IndexSet::integers(), {}, 1, 0), std::invalid_argument);
}

TEST_CASE("finite matrices") {
  const auto g2 = PresentedMatrix::from_dense(DenseMatrix{{0, 1}, {3, 0}});
  CHECK(g2 * g2 == PresentedMatrix::from_dense(DenseMatrix{{3, 0}, {0, 3}}));
  CHECK(transpose(g2).entry(0, 1) == 3);
  const PresentedVector v(IndexSet::finite(2), {1, 1}, 0, 0);
  CHECK(apply(g2, v) == PresentedVector(IndexSet::finite(2), {1, 3}, 0, 0));
}

TEST_CASE("fit_nat recovers presentations") {
  for (const auto& m : {a_inf(), c_inf(), d_inf(), t_inf(), poly_eval(r_poly(3), d_inf())}) {
    const std::size_t w = m.band();
    const std::size_t k = m.reach() + m.head_size() + 3 * w + 4;
    CHECK(PresentedMatrix::fit_nat(truncate(m, k), w) == m);
  }
  DenseMatrix bad{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 5, 0}};
  CHECK_THROWS_AS(PresentedMatrix::fit_nat(bad, 1), NotEventuallyAffine);
}

TEST_CASE("json round trip") {
  for (const auto& m : {a_inf(), c_inf(), d_inf(), t_inf(), b_inf_dual(), poly_eval(r_poly(5), d_inf()),
                        PresentedMatrix::toeplitz(IndexSet::integers(), {{-1, 1}, {1, 1}}),
                        PresentedMatrix::from_dense(DenseMatrix{{2, -1}, {-3, 2}})}) {
    const Json j = matrix_to_json(m);
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_to_json(matrix_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
  const Json c = Json::parse(R"({"index":"nat","head":{"size":1,"entries":[[0,1,2],[1,0,1]]},
                                  "tail":{"band":1,"diagonals":{"-1":1,"1":1}}})");
  CHECK(matrix_from_json(c) == c_inf());
  CHECK(matrix_to_json(c_inf()).dump() ==
        R"({"index":"nat","head":{"size":1,"entries":[[0,1,2],[1,0,1]]},"tail":{"band":1,"diagonals":{"-1":1,"1":1}}})");
  const PresentedVector v(IndexSet::nat(), {1}, 0, 2);
  CHECK(vector_from_json(vector_to_json(v)) == v);
  const Integer huge = Integer("123456789012345678901234567890");
  CHECK(integer_from_json(integer_to_json(huge)) == huge);
  CHECK(integer_to_json(huge).is_string());
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"index":"weird"})")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"index":"nat","tail":{"band":1,"diagonals":{"2":1}}})")),
                  std::invalid_argument);
}
