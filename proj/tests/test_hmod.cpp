#include "bihom/catalog.hpp"
#include "bihom/hmod.hpp"
#include "doctest.h"

using namespace bihom;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Matrix diag(std::initializer_list<const char*> entries) {
  Vector d;
  for (const char* e : entries) d.push_back(S(e));
  return Matrix::diagonal(d);
}

std::shared_ptr<const HopfAlgebra> z2() { return std::make_shared<const HopfAlgebra>(cyclic_group_algebra(2)); }

HModule z2_module(std::vector<std::string> basis, Matrix g) {
  const std::size_t n = basis.size();
  return HModule{z2(), std::move(basis), {Matrix::identity(n), std::move(g)}};
}

// Column of τ for the basis pair (i, j) of M ⊗ N, as a vector on N ⊗ M.
Vector tau_on(const Matrix& tau, std::size_t i, std::size_t j, std::size_t dim_n) {
  return tau.column(i * dim_n + j);
}

Vector pair(std::size_t dim_a, std::size_t a, std::size_t dim_b, std::size_t b) {
  return kron(basis_vector(dim_a, a), basis_vector(dim_b, b));
}

std::shared_ptr<const HopfAlgebra> klein() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return std::make_shared<const HopfAlgebra>(group_algebra(t, 0, {"e", "a", "b", "ab"}));
}

RMatrix klein_r() {
  Matrix c(4, 4);
  c(0, 0) = c(0, 1) = c(2, 0) = S("1/2");
  c(2, 1) = S("-1/2");
  return {c};
}

// A module over the Klein group with a, b acting by the given signs.
HModule klein_module(std::shared_ptr<const HopfAlgebra> h, std::vector<std::string> basis, Matrix a, Matrix b) {
  const std::size_t n = basis.size();
  Matrix ab = a * b;
  return HModule{std::move(h), std::move(basis), {Matrix::identity(n), std::move(a), std::move(b), std::move(ab)}};
}

void check_hexagons(const HModule& m, const HModule& n, const HModule& p, const RMatrix& r) {
  Matrix id_m = Matrix::identity(m.dim()), id_n = Matrix::identity(n.dim()), id_p = Matrix::identity(p.dim());
  Matrix lhs1 = braiding(m, tensor_module(n, p), r);
  Matrix rhs1 = kron(id_n, braiding(m, p, r)) * kron(braiding(m, n, r), id_p);
  CHECK(lhs1 == rhs1);
  Matrix lhs2 = braiding(tensor_module(m, n), p, r);
  Matrix rhs2 = kron(braiding(m, p, r), id_n) * kron(id_m, braiding(n, p, r));
  CHECK(lhs2 == rhs2);
}

void check_tau_h_linear(const HModule& m, const HModule& n, const RMatrix& r) {
  Matrix tau = braiding(m, n, r);
  HModule mn = tensor_module(m, n), nm = tensor_module(n, m);
  for (std::size_t i = 0; i < m.hopf->dim(); ++i) CHECK(tau * mn.action[i] == nm.action[i] * tau);
}

}  // namespace

TEST_CASE("module axioms") {
  CHECK(check_module(z2_module({"x1", "x2"}, diag({"1", "-1"}))).passed());
  CHECK(check_module(z2_module({"x1", "x2", "x3"}, diag({"-1", "1", "1"}))).passed());
  CHECK(check_module(z2_module({"x1", "x2", "x3"}, diag({"-1", "-1", "1"}))).passed());
  CheckReport bad = check_module(z2_module({"x1", "x2"}, diag({"2", "1"})));
  CHECK_FALSE(bad.passed());
  const ReportEntry* law = bad.find("module-law");
  REQUIRE(law);
  CHECK(law->status == Status::fail);
  CHECK(law->witness->tuple == std::vector<std::string>{"g", "g", "x1"});
  CHECK(bad.find("unit-acts-as-identity")->status == Status::pass);
  CHECK_THROWS_AS(check_module(HModule{z2(), {"x"}, {Matrix::identity(1)}}), DimensionMismatch);
}

TEST_CASE("braiding of the 2-dim graded module") {
  HModule m = z2_module({"x1", "x2"}, diag({"1", "-1"}));
  Matrix tau = braiding(m, m, z2_super_rmatrix());
  CHECK(tau_on(tau, 1, 1, 2) == S("-1") * pair(2, 1, 2, 1));
  CHECK(tau_on(tau, 0, 0, 2) == pair(2, 0, 2, 0));
  CHECK(tau_on(tau, 0, 1, 2) == pair(2, 1, 2, 0));
  CHECK(tau_on(tau, 1, 0, 2) == pair(2, 0, 2, 1));
  CHECK(check_braiding_symmetry(m, z2_super_rmatrix()));
}

TEST_CASE("trivial R gives the plain flip") {
  HModule m = z2_module({"x1", "x2", "x3"}, diag({"-1", "-1", "1"}));
  Matrix c(2, 2);
  c(0, 0) = Scalar(1);
  CHECK(braiding(m, m, {c}) == flip_matrix(3, 3));
  CHECK(check_braiding_symmetry(m, {c}));
  HModule n = z2_module({"y1", "y2"}, diag({"1", "-1"}));
  CHECK(braiding(m, n, {c}) == flip_matrix(3, 2));
}

TEST_CASE("braiding of the Heisenberg module") {
  HModule m = z2_module({"x1", "x2", "x3"}, diag({"-1", "-1", "1"}));
  Matrix tau = braiding(m, m, z2_super_rmatrix());
  CHECK(tau_on(tau, 0, 1, 3) == S("-1") * pair(3, 1, 3, 0));
  CHECK(tau_on(tau, 1, 1, 3) == S("-1") * pair(3, 1, 3, 1));
  CHECK(tau_on(tau, 2, 2, 3) == pair(3, 2, 3, 2));
  CHECK(tau_on(tau, 0, 2, 3) == pair(3, 2, 3, 0));
  CHECK(check_braiding_symmetry(m, z2_super_rmatrix()));
}

TEST_CASE("Heisenberg with g fixing x2 disagrees with the expected braiding") {
  // g·x1 = -x1, g·x2 = x2: a valid module, but τ(x1⊗x2) = x2⊗x1 and the
  // Heisenberg bracket [x1,x2] = [x2,x1] = x3 is not H-linear.
  HModule m = z2_module({"x1", "x2", "x3"}, diag({"-1", "1", "1"}));
  CHECK(check_module(m).passed());
  Matrix tau = braiding(m, m, z2_super_rmatrix());
  CHECK(tau_on(tau, 0, 1, 3) == pair(3, 1, 3, 0));
  StructureTensor bracket(3);
  bracket(0, 1, 2) = bracket(1, 0, 2) = Scalar(1);
  ReportEntry e = check_h_linear_product(m, bracket, "bracket-module-map", "");
  CHECK(e.status == Status::fail);
  CHECK(e.witness->tuple == std::vector<std::string>{"g", "x1", "x2"});
}

TEST_CASE("braiding is H-linear and satisfies the hexagons") {
  RMatrix r = z2_super_rmatrix();
  HModule a = z2_module({"x1", "x2"}, diag({"1", "-1"}));
  HModule b = z2_module({"x1", "x2", "x3"}, diag({"-1", "-1", "1"}));
  HModule c = z2_module({"y"}, diag({"-1"}));
  for (const HModule* m : {&a, &b, &c})
    for (const HModule* n : {&a, &b, &c}) check_tau_h_linear(*m, *n, r);
  check_hexagons(a, b, c, r);
  check_hexagons(b, a, a, r);
  check_hexagons(c, c, b, r);
}

TEST_CASE("non-triangular braiding: hexagons hold, symmetry does not") {
  auto h = klein();
  RMatrix r = klein_r();
  HModule m = klein_module(h, {"u1", "u2"}, diag({"1", "-1"}), diag({"-1", "-1"}));
  HModule n = klein_module(h, {"v1", "v2"}, diag({"-1", "1"}), diag({"1", "-1"}));
  check_tau_h_linear(m, n, r);
  check_tau_h_linear(n, m, r);
  check_hexagons(m, n, m, r);
  check_hexagons(n, n, m, r);
  CHECK_FALSE(braiding(n, m, r) * braiding(m, n, r) == Matrix::identity(4));
}

TEST_CASE("module maps") {
  HModule m = z2_module({"x1", "x2"}, diag({"1", "-1"}));
  Matrix alpha = diag({"1", "-1"}), beta = diag({"1", "b"});
  CHECK(is_module_map(alpha, m, m));
  CHECK(is_module_map(beta, m, m));
  CHECK(is_module_map(alpha * beta, m, m));
  Matrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = Scalar(1);
  CHECK_FALSE(is_module_map(swap, m, m));
  ReportEntry e = check_module_map(swap, m, m, "swap", "");
  CHECK(e.witness->tuple == std::vector<std::string>{"g", "x1"});
}

TEST_CASE("module algebras") {
  AlgebraFile f = catalog_entry("bihom-2d");
  const ObjectSpec& a = f.object("A");
  CHECK(check_module_algebra(f.module(a), a.table).passed());

  AlgebraFile heis = catalog_entry("heisenberg");
  const ObjectSpec& mu = heis.object("matrix-units");
  CHECK(check_module_algebra(heis.module(mu), mu.table).passed());

  // g·x1 = -x1, g·x2 = x2 breaks g·(x1x1) = (g·x1)(g·x1).
  HModule perturbed = z2_module({"x1", "x2"}, diag({"-1", "1"}));
  CHECK(check_module(perturbed).passed());
  CheckReport r = check_module_algebra(perturbed, a.table);
  CHECK_FALSE(r.passed());
  const ReportEntry* e = r.find("module-algebra");
  REQUIRE(e->witness);
  CHECK(e->witness->tuple == std::vector<std::string>{"g", "x1", "x1"});
  CHECK(e->witness->residual == std::vector<std::pair<std::string, Scalar>>{{"x1", S("-2")}});
}

TEST_CASE("H-commutativity") {
  AlgebraFile k = catalog_entry("trivial-hopf");
  const ObjectSpec& one = k.object("k");
  CHECK(is_H_commutative(k.module(one), one.table, k.rmatrix));

  AlgebraFile z = catalog_entry("kZ2");
  const ObjectSpec& cl = z.object("clifford");
  Matrix c(2, 2);
  c(0, 0) = Scalar(1);
  CHECK(is_H_commutative(z.module(cl), cl.table, {c}));

  AlgebraFile f = catalog_entry("bihom-2d");
  const ObjectSpec& a = f.object("A");
  CHECK_FALSE(is_H_commutative(f.module(a), a.table, f.rmatrix));
}
