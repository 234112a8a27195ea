#include "bihom/bihom.hpp"
#include "bihom/catalog.hpp"
#include "doctest.h"
#include "support/bridge.hpp"

using namespace bihom;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Matrix diag(std::initializer_list<const char*> entries) {
  Vector d;
  for (const char* e : entries) d.push_back(S(e));
  return Matrix::diagonal(d);
}

Vector vec(std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries) v.push_back(S(e));
  return v;
}

struct Named {
  std::string file, object;
};

const std::vector<Named> associative_objects = {{"trivial-hopf", "k"},
                                                 {"trivial-hopf", "upper-triangular"},
                                                 {"kZ2", "clifford"},
                                                 {"bihom-2d", "A"},
                                                 {"heisenberg", "matrix-units"}};

}  // namespace

TEST_CASE("2-dim algebra over kZ2 is BiHom-associative in b") {
  AlgebraFile f = catalog_entry("bihom-2d");
  CheckReport r = check_bihom_associative(f.algebra("A"));
  CHECK(r.passed());
  for (const auto& e : r.entries) CHECK_MESSAGE(e.status == Status::pass, e.id);
  CHECK(r.entries.size() == 9);
}

TEST_CASE("associative algebras with identity maps are BiHom-associative") {
  AlgebraFile f = catalog_entry("trivial-hopf");
  CHECK(check_bihom_associative(f.algebra("upper-triangular")).passed());
  CHECK(check_bihom_associative(f.algebra("k")).passed());
}

TEST_CASE("alpha fixing x2 breaks BiHom-associativity") {
  AlgebraFile f = catalog_entry("bihom-2d");
  BiHomAlgebra a = f.algebra("A");
  a.alpha = Matrix::identity(2);
  CheckReport r = check_bihom_associative(a);
  CHECK_FALSE(r.passed());
  const ReportEntry* e = r.find("bihom-associativity");
  REQUIRE(e);
  CHECK(e->status == Status::fail);
  REQUIRE(e->witness);
  CHECK(e->witness->tuple == std::vector<std::string>{"x2", "x1", "x1"});
  CHECK(e->witness->residual == std::vector<std::pair<std::string, Scalar>>{{"x2", S("-2")}});
  CHECK(r.find("unit-right")->status == Status::fail);
  CHECK(r.find("maps-commute")->status == Status::pass);
}

TEST_CASE("unit and multiplicativity entries are skipped when not declared") {
  AlgebraFile f = catalog_entry("heisenberg");
  BiHomAlgebra a = f.algebra("matrix-units");
  a.multiplicative = false;
  CheckReport r = check_bihom_associative(a);
  CHECK(r.passed());
  CHECK(r.find("unit-left")->status == Status::skipped);
  CHECK(r.find("alpha-multiplicative")->status == Status::skipped);
}

TEST_CASE("commutator bracket of the 2-dim algebra vanishes") {
  AlgebraFile f = catalog_entry("bihom-2d");
  BiHomLie l = commutator_bracket(f.algebra("A"), f.rmatrix);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(is_zero(l.bracket.on_basis(i, j)));
  CheckReport r = check_generalized_bihom_lie(l);
  CHECK(r.passed());
  for (const auto& e : r.entries) CHECK_MESSAGE(e.status == Status::pass, e.id);

  Informational diff = diff_bracket_table(l, *f.object("A").reference_bracket, "reference-table");
  REQUIRE(diff.rows.size() == 2);
  CHECK(diff.rows[0].entry == "[x1,x2]");
  CHECK(diff.rows[0].computed == "0");
  CHECK(diff.rows[0].reference == "2*b*x2");
  CHECK_FALSE(diff.rows[0].matches);
  CHECK(diff.rows[1].reference == "b*x1 - x2");
  CHECK(diff.message == "2 bracket entries differ from the reference table");
}

TEST_CASE("commutator bracket of matrix units is the Heisenberg bracket") {
  AlgebraFile f = catalog_entry("heisenberg");
  BiHomLie l = commutator_bracket(f.algebra("matrix-units"), f.rmatrix);
  CHECK(l.bracket == f.object("heisenberg").table);
  CHECK(check_generalized_bihom_lie(l).passed());
  CHECK(check_generalized_bihom_lie(f.lie("heisenberg")).passed());
}

TEST_CASE("commutator bracket on the Clifford algebra") {
  AlgebraFile f = catalog_entry("kZ2");
  BiHomLie l = commutator_bracket(f.algebra("clifford"), f.rmatrix);
  // [u,u] = u² + u² = 2
  CHECK(l.bracket.on_basis(1, 1) == vec({"2", "0"}));
  CHECK(is_zero(l.bracket.on_basis(0, 1)));
  CHECK(check_generalized_bihom_lie(l).passed());
}

TEST_CASE("commutator bracket satisfies the Lie axioms on every catalog algebra") {
  for (const auto& [file, object] : associative_objects) {
    AlgebraFile f = catalog_entry(file);
    BiHomLie l = commutator_bracket(f.algebra(object), f.rmatrix);
    CHECK_MESSAGE(check_generalized_bihom_lie(l).passed(), std::string(file + "/" + object));
  }
}

TEST_CASE("commutator construction refusals") {
  AlgebraFile f = catalog_entry("bihom-2d");
  CHECK_THROWS_AS(commutator_bracket(f.substituted({{"b", 0}}).algebra("A"), f.rmatrix), NotBijective);
  Matrix not_triangular(2, 2);
  not_triangular(0, 1) = Scalar(1);
  CHECK_THROWS_AS(commutator_bracket(f.algebra("A"), {not_triangular}), NotTriangular);
  BiHomAlgebra broken = f.algebra("A");
  broken.alpha = Matrix::identity(2);
  CHECK_THROWS_AS(commutator_bracket(broken, f.rmatrix), PreconditionFailed);
}

TEST_CASE("substituting b keeps the 2-dim algebra valid") {
  AlgebraFile f = catalog_entry("bihom-2d");
  for (long b : {1L, 3L, -2L}) {
    AlgebraFile g = f.substituted({{"b", b}});
    CHECK(g.parameters.empty());
    CHECK(check_bihom_associative(g.algebra("A")).passed());
    CHECK(check_generalized_bihom_lie(commutator_bracket(g.algebra("A"), g.rmatrix)).passed());
  }
}

TEST_CASE("twisted Heisenberg bracket") {
  AlgebraFile f = catalog_entry("heisenberg");
  const ObjectSpec& o = f.object("heisenberg");
  BiHomLie t = twist_bracket(f.lie("heisenberg"), o.twist->first, o.twist->second);
  CHECK(t.bracket.on_basis(0, 1) == vec({"0", "0", "l1*l2p"}));
  CHECK(t.bracket.on_basis(1, 0) == vec({"0", "0", "l1p*l2"}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!((i == 0 && j == 1) || (i == 1 && j == 0))) CHECK(is_zero(t.bracket.on_basis(i, j)));
  CheckReport r = check_generalized_bihom_lie(t);
  CHECK(r.passed());
  for (const auto& e : r.entries) CHECK_MESSAGE(e.status == Status::pass, e.id);
  CHECK(t.bracket == catalog_entry("heisenberg-twisted").object("heisenberg-twisted").table);
}

TEST_CASE("twisting with identity maps and with numeric maps") {
  AlgebraFile f = catalog_entry("heisenberg");
  BiHomLie l = f.lie("heisenberg");
  CHECK(twist_bracket(l, Matrix::identity(3), Matrix::identity(3)).bracket == l.bracket);
  BiHomLie t = twist_bracket(l, diag({"2", "1", "2"}), Matrix::identity(3));
  CHECK(t.bracket.on_basis(0, 1) == vec({"0", "0", "2"}));
  CHECK(t.bracket.on_basis(1, 0) == vec({"0", "0", "1"}));
  CHECK(check_generalized_bihom_lie(t).passed());
}

TEST_CASE("twist refusals") {
  AlgebraFile f = catalog_entry("heisenberg");
  BiHomLie l = f.lie("heisenberg");
  CHECK_THROWS_AS(twist_bracket(l, diag({"2", "1", "1"}), Matrix::identity(3)), NotEndomorphism);
  Matrix mixing = Matrix::identity(3);
  mixing(2, 0) = Scalar(1);
  CHECK_THROWS_AS(twist_bracket(l, Matrix::identity(3), mixing), NotEndomorphism);
  BiHomLie twisted = catalog_entry("heisenberg-twisted").lie("heisenberg-twisted");
  CHECK_THROWS_AS(twist_bracket(twisted, Matrix::identity(3), Matrix::identity(3)), PreconditionFailed);
}

TEST_CASE("Hom degeneration: beta equal to alpha") {
  AlgebraFile f = catalog_entry("heisenberg");
  BiHomLie l = f.lie("heisenberg");
  Matrix alpha = f.object("heisenberg").twist->first;
  BiHomLie hom = twist_bracket(l, alpha, alpha);
  CHECK(hom.bracket.on_basis(0, 1) == vec({"0", "0", "l1*l2"}));
  CheckReport bihom_suite = check_generalized_bihom_lie(hom);
  CheckReport hom_suite = check_generalized_hom_lie(hom);
  CHECK(bihom_suite.passed());
  CHECK(hom_suite.passed());
  CHECK_THROWS_AS(check_generalized_hom_lie(catalog_entry("heisenberg-twisted").lie("heisenberg-twisted")),
                  PreconditionFailed);
}

TEST_CASE("Hom and BiHom suites agree when alpha equals beta") {
  // Verdicts on valid and broken brackets with α = β.
  AlgebraFile f = catalog_entry("heisenberg");
  Matrix alpha = diag({"2", "3", "6"});
  BiHomLie good = twist_bracket(f.lie("heisenberg"), alpha, alpha);
  BiHomLie bad = good;
  bad.bracket(0, 1, 2) = Scalar(1);
  BiHomLie worse = good;
  worse.bracket(0, 0, 1) = Scalar(1);
  for (const BiHomLie* l : {&good, &bad, &worse})
    CHECK(check_generalized_bihom_lie(*l).passed() == check_generalized_hom_lie(*l).passed());
  CHECK(check_generalized_bihom_lie(good).passed());
  CHECK_FALSE(check_generalized_bihom_lie(bad).passed());
}

TEST_CASE("cross-product bracket is a Lie algebra and a broken one is not") {
  AlgebraFile f = catalog_entry("cross-product");
  BiHomLie l = f.lie("so3");
  CHECK(check_generalized_bihom_lie(l).passed());
  l.bracket(0, 1, 2) = Scalar(2);
  CheckReport r = check_generalized_bihom_lie(l);
  CHECK(r.find("braided-skew-symmetry")->status == Status::fail);
}

TEST_CASE("degeneration to the classical commutator on random algebras") {
  auto algebras = classical::random_associative(20240601, 20);
  for (const auto& t : algebras) {
    REQUIRE(classical::is_associative(t));
    BiHomLie l = commutator_bracket(bridge::degenerate(t), bridge::trivial_r());
    CHECK(l.bracket == bridge::to_tensor(classical::commutator(t)));
    CHECK(check_generalized_bihom_lie(l).passed() == classical::is_lie(classical::commutator(t)));

    // A perturbed bracket: both checkers must reach the same verdict.
    classical::Table p = classical::commutator(t);
    p.at(0, 1, 2) += 1;
    BiHomLie lp = l;
    lp.bracket = bridge::to_tensor(p);
    CHECK(check_generalized_bihom_lie(lp).passed() == classical::is_lie(p));
  }
}

TEST_CASE("Leibniz identities of the commutator bracket") {
  for (const auto& [file, object] : associative_objects) {
    AlgebraFile f = catalog_entry(file);
    CheckReport r = check_leibniz_identities(f.algebra(object), f.rmatrix);
    CHECK_MESSAGE(r.passed(), std::string(file + "/" + object));
    CHECK(r.entries.size() == 2);
  }
  for (const auto& t : classical::random_associative(99, 5))
    CHECK(check_leibniz_identities(bridge::degenerate(t), bridge::trivial_r()).passed());
}
