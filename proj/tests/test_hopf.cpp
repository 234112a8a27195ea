#include "bihom/catalog.hpp"
#include "bihom/hopf.hpp"
#include "doctest.h"

using namespace bihom;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

bool all_pass(const CheckReport& r) { return r.passed() && !r.entries.empty(); }

// Klein four-group with elements e, a, b, ab indexed as bit pairs.
HopfAlgebra klein() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return group_algebra(t, 0, {"e", "a", "b", "ab"});
}

// R = ½(e⊗e + e⊗a + b⊗e − b⊗a): the super R-matrix of Z2 with its legs
// placed in two different Z2 factors.
RMatrix klein_r() {
  Matrix c(4, 4);
  c(0, 0) = c(0, 1) = c(2, 0) = S("1/2");
  c(2, 1) = S("-1/2");
  return {c};
}

}  // namespace

TEST_CASE("group algebra of Z2") {
  HopfAlgebra h = cyclic_group_algebra(2);
  CHECK(h.basis == std::vector<std::string>{"e", "g"});
  CHECK(h.multiply(basis_vector(2, 1), basis_vector(2, 1)) == basis_vector(2, 0));
  CHECK(all_pass(check_hopf_axioms(h)));
  CHECK(all_pass(check_hopf_consequences(h)));
  CHECK(is_cocommutative(h));
}

TEST_CASE("trivial and Z4 group algebras") {
  HopfAlgebra one = group_algebra({{0}}, 0, {"e"});
  CHECK(one.dim() == 1);
  CHECK(all_pass(check_hopf_axioms(one)));
  HopfAlgebra z4 = cyclic_group_algebra(4);
  CHECK(z4.dim() == 4);
  CHECK(all_pass(check_hopf_axioms(z4)));
  CHECK(all_pass(check_hopf_consequences(z4)));
  CHECK(is_cocommutative(z4));
  // S(g) = g3
  CHECK(z4.antipode.column(1) == basis_vector(4, 3));
}

TEST_CASE("zero antipode fails the antipode law at e") {
  HopfAlgebra h = cyclic_group_algebra(2);
  h.antipode = Matrix(2, 2);
  CheckReport r = check_hopf_axioms(h);
  CHECK_FALSE(r.passed());
  const ReportEntry* e = r.find("antipode");
  REQUIRE(e);
  CHECK(e->status == Status::fail);
  REQUIRE(e->witness);
  CHECK(e->witness->tuple == std::vector<std::string>{"S⊗id", "e"});
  CHECK(e->witness->residual == std::vector<std::pair<std::string, Scalar>>{{"e", S("-1")}});
  CHECK(r.find("associativity")->status == Status::pass);
}

TEST_CASE("group table validation") {
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, 0, {}), NotAGroup);
  CHECK_THROWS_AS(group_algebra({{0, 2}, {1, 0}}, 0, {}), NotAGroup);
  CHECK_THROWS_AS(group_algebra({{1, 0}, {0, 1}}, 0, {}), NotAGroup);
  try {
    group_algebra({{0, 1}, {1, 1}}, 0, {});
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(std::string(e.what()).find("element 1 has no inverse") != std::string::npos);
  }
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 0}}, 0, {"e", "e"}), NotAGroup);
}

TEST_CASE("super R-matrix on kZ2 is triangular") {
  HopfAlgebra h = cyclic_group_algebra(2);
  RMatrix r = z2_super_rmatrix();
  CHECK(all_pass(check_quasitriangular(h, r)));
  CHECK(all_pass(check_r_normalization(h, r)));
  CHECK(is_triangular(h, r));
  CHECK(inverse(h, r).coefficients == r.coefficients);
}

TEST_CASE("trivial R-matrix") {
  for (std::size_t n : {1u, 2u, 4u}) {
    HopfAlgebra h = cyclic_group_algebra(n);
    RMatrix r = RMatrix::trivial(h);
    CHECK(all_pass(check_quasitriangular(h, r)));
    CHECK(is_triangular(h, r));
  }
}

TEST_CASE("R = e⊗g fails QT1") {
  HopfAlgebra h = cyclic_group_algebra(2);
  Matrix c(2, 2);
  c(0, 1) = Scalar(1);
  CheckReport r = check_quasitriangular(h, {c});
  const ReportEntry* qt1 = r.find("qt1");
  REQUIRE(qt1);
  CHECK(qt1->status == Status::fail);
  REQUIRE(qt1->witness);
  CHECK(qt1->witness->residual ==
        std::vector<std::pair<std::string, Scalar>>{{"e⊗e⊗e", S("-1")}, {"e⊗e⊗g", S("1")}});
}

TEST_CASE("non-invertible R is refused") {
  HopfAlgebra h = cyclic_group_algebra(2);
  CHECK_THROWS_AS(inverse(h, {Matrix(2, 2)}), NotInvertible);
  CHECK_THROWS_AS(check_quasitriangular(h, {Matrix(2, 2)}), NotInvertible);
}

TEST_CASE("quasitriangular but not triangular on the Klein four-group") {
  HopfAlgebra h = klein();
  RMatrix r = klein_r();
  CHECK(all_pass(check_hopf_axioms(h)));
  CHECK(all_pass(check_quasitriangular(h, r)));
  CHECK(all_pass(check_r_normalization(h, r)));
  CHECK_FALSE(is_triangular(h, r));
  CHECK(inverse(h, r).coefficients == r.coefficients);
  CHECK_FALSE(r.coefficients == r.flipped().coefficients);
}
