#include "doctest.h"
#include "sl2cat/obstruction.hpp"

using namespace sl2cat;

namespace {

const ModuleUnknown& module_at(const ObstructionReport& r, std::size_t k, Index j) {
  for (const auto& m : r.modules) {
    if (m.functor == k && m.object == j) return m;
  }
  throw std::logic_error("no module");
}

}  // namespace

TEST_CASE("B_inf in the dual basis is infeasible") {
  for (std::size_t depth : {2, 3}) {
    const auto r = socle_top_feasibility(catalog("BinfDual"), depth);
    CHECK(r.status == ObstructionReport::Status::Unsat);
    REQUIRE_FALSE(r.trace.empty());
    CHECK(r.trace.front().kind == "hom");
  }
  CHECK(socle_top_feasibility(catalog("BinfDual"), 2).skipped == 0);
  const auto r = socle_top_feasibility(catalog("BinfDual"), 2);
  CHECK(r.trace.front().identity == "[soc F_1 S_0 : S_1] = [soc F_0 S_0 : S_0] + [soc F_2 S_0 : S_0]");
  CHECK(r.trace.front().lhs == 1);
  CHECK(r.trace.front().rhs == 2);
  const auto j = report_to_json(r);
  CHECK(j["status"] == "UNSAT");
  CHECK(j["first_violated"] == r.trace.front().identity);
}

TEST_CASE("symmetric fixtures admit the semisimple witness") {
  for (const char* name : {"Ainf", "AinfInf", "Dinf", "Tinf"}) {
    for (std::size_t depth : {2, 3}) {
      const auto r = socle_top_feasibility(catalog(name), depth);
      if (depth == 2) CHECK_MESSAGE(r.status == ObstructionReport::Status::Sat, name);
      CHECK_MESSAGE(r.status != ObstructionReport::Status::Unsat, name << " depth " << depth);
      CHECK((r.status == ObstructionReport::Status::Sat) == (r.skipped == 0));
      for (const auto& m : r.modules) {
        if (m.wildcard) continue;
        CHECK(m.top == m.composition);
        CHECK(m.socle == m.composition);
      }
    }
  }
}

TEST_CASE("C_inf is feasible with a non-semisimple witness") {
  const auto r = socle_top_feasibility(catalog("Cinf"), 2);
  REQUIRE(r.status == ObstructionReport::Status::Sat);
  const auto& f1s0 = module_at(r, 1, 0);
  CHECK(f1s0.composition == Multiset{{1, 2}});
  CHECK(f1s0.top == Multiset{{1, 1}});
  CHECK(f1s0.socle == Multiset{{1, 1}});
  const auto& f1s1 = module_at(r, 1, 1);
  CHECK(f1s1.composition == Multiset{{0, 1}, {2, 1}});
}

TEST_CASE("transposing the C_inf presentation gives B_inf data") {
  const auto c = catalog("Cinf");
  const auto b = catalog("BinfDual");
  CHECK(transpose(c.f1()) == b.f1());
}

TEST_CASE("depth cap, depth zero and Schur override") {
  CHECK_THROWS_AS(socle_top_feasibility(catalog("Ainf"), 9), DepthTooLarge);
  CHECK_THROWS_AS(socle_top_feasibility(catalog("Ainf"), 0), std::invalid_argument);
  ObstructionOptions o;
  o.schur_dims = {{1, 2}};
  const auto r = socle_top_feasibility(catalog("BinfDual"), 2, o);
  CHECK(r.status == ObstructionReport::Status::Sat);
}

TEST_CASE("long modules become wildcards and weaken SAT to Unknown") {
  ObstructionOptions o;
  o.max_length = 1;
  const auto r = socle_top_feasibility(catalog("Ainf"), 3, o);
  CHECK(r.skipped > 0);
  CHECK(r.status == ObstructionReport::Status::Unknown);
}

TEST_CASE("finite model") {
  const ModuleCategoryModel m("k2", Basis::Projectives, PresentedMatrix::from_dense(DenseMatrix{{0, 2}, {2, 0}}));
  CHECK(socle_top_feasibility(m, 2).status == ObstructionReport::Status::Sat);
  CHECK_THROWS_AS(socle_top_feasibility(m, 3), std::invalid_argument);
}
