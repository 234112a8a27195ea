#include "bihom/catalog.hpp"

#include <functional>

namespace bihom {

namespace {

Matrix diag(std::initializer_list<const char*> entries) {
  Vector d;
  for (const char* e : entries) d.push_back(Scalar::parse(e));
  return Matrix::diagonal(d);
}

struct Triple {
  std::size_t i, j, k;
  const char* value;
};

StructureTensor table(std::size_t n, std::initializer_list<Triple> triples) {
  StructureTensor t(n);
  for (const auto& [i, j, k, v] : triples) t(i, j, k) = Scalar::parse(v);
  return t;
}

GroupTable trivial_group() { return GroupTable{{"e"}, 0, {{0}}}; }
GroupTable z2_group() { return GroupTable{{"e", "g"}, 0, {{0, 1}, {1, 0}}}; }

AlgebraFile over_group(std::string name, std::string description, GroupTable g, RMatrix r) {
  AlgebraFile f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.hopf = std::make_shared<const HopfAlgebra>(group_algebra(g.table, g.identity, g.elements));
  f.group = std::move(g);
  f.rmatrix = std::move(r);
  return f;
}

ObjectSpec object(std::string name, ObjectKind kind, std::vector<std::string> basis, std::vector<Matrix> action,
                  StructureTensor t) {
  ObjectSpec o;
  o.name = std::move(name);
  o.kind = kind;
  const std::size_t n = basis.size();
  o.basis = std::move(basis);
  o.action = std::move(action);
  o.table = std::move(t);
  o.alpha = Matrix::identity(n);
  o.beta = Matrix::identity(n);
  return o;
}

RMatrix one_tensor_one(std::size_t hopf_dim) {
  Matrix c(hopf_dim, hopf_dim);
  c(0, 0) = Scalar(1);
  return {c};
}

AlgebraFile trivial_hopf() {
  AlgebraFile f = over_group("trivial-hopf", "the ground field as a Hopf algebra, with two associative algebras",
                             trivial_group(), one_tensor_one(1));
  ObjectSpec k = object("k", ObjectKind::associative, {"x"}, {diag({"1"})}, table(1, {{0, 0, 0, "1"}}));
  k.unit = Vector{Scalar(1)};
  f.objects.push_back(std::move(k));
  // e11, e12, e22 in the upper triangular 2x2 matrices.
  ObjectSpec u = object("upper-triangular", ObjectKind::associative, {"e11", "e12", "e22"}, {diag({"1", "1", "1"})},
                        table(3, {{0, 0, 0, "1"}, {0, 1, 1, "1"}, {1, 2, 1, "1"}, {2, 2, 2, "1"}}));
  u.unit = Vector{Scalar(1), Scalar(0), Scalar(1)};
  f.objects.push_back(std::move(u));
  return f;
}

AlgebraFile kz2() {
  AlgebraFile f = over_group("kZ2", "group algebra of Z2 with its super R-matrix, acting on the Clifford algebra k[u]/(u^2 - 1)",
                             z2_group(), z2_super_rmatrix());
  ObjectSpec c = object("clifford", ObjectKind::associative, {"one", "u"}, {diag({"1", "1"}), diag({"1", "-1"})},
                        table(2, {{0, 0, 0, "1"}, {0, 1, 1, "1"}, {1, 0, 1, "1"}, {1, 1, 0, "1"}}));
  c.unit = Vector{Scalar(1), Scalar(0)};
  f.objects.push_back(std::move(c));
  return f;
}

AlgebraFile bihom_2d() {
  AlgebraFile f = over_group("bihom-2d", "two-dimensional BiHom-associative algebra over kZ2 with parameter b",
                             z2_group(), z2_super_rmatrix());
  f.parameters = {"b"};
  ObjectSpec a = object("A", ObjectKind::associative, {"x1", "x2"}, {diag({"1", "1"}), diag({"1", "-1"})},
                        table(2, {{0, 0, 0, "1"}, {0, 1, 1, "b"}, {1, 0, 1, "-1"}}));
  a.alpha = diag({"1", "-1"});
  a.beta = diag({"1", "b"});
  a.unit = Vector{Scalar(1), Scalar(0)};
  a.reference_bracket = table(2, {{0, 1, 1, "2*b"}, {1, 0, 1, "-1"}, {1, 0, 0, "b"}});
  f.objects.push_back(std::move(a));
  return f;
}

std::vector<Matrix> heisenberg_action() { return {diag({"1", "1", "1"}), diag({"-1", "-1", "1"})}; }

AlgebraFile heisenberg() {
  AlgebraFile f = over_group("heisenberg",
                             "Heisenberg algebra over kZ2 as the braided commutator of strictly upper triangular "
                             "3x3 matrices (x1 = E12, x2 = E23, x3 = E13)",
                             z2_group(), z2_super_rmatrix());
  f.parameters = {"l1", "l2", "l1p", "l2p"};
  f.objects.push_back(
      object("matrix-units", ObjectKind::associative, {"x1", "x2", "x3"}, heisenberg_action(), table(3, {{0, 1, 2, "1"}})));
  ObjectSpec l = object("heisenberg", ObjectKind::lie, {"x1", "x2", "x3"}, heisenberg_action(),
                        table(3, {{0, 1, 2, "1"}, {1, 0, 2, "1"}}));
  l.twist = std::pair{diag({"l1", "l2", "l1*l2"}), diag({"l1p", "l2p", "l1p*l2p"})};
  f.objects.push_back(std::move(l));
  return f;
}

AlgebraFile heisenberg_twisted() {
  AlgebraFile f = over_group("heisenberg-twisted", "Heisenberg algebra over kZ2 twisted by diagonal maps",
                             z2_group(), z2_super_rmatrix());
  f.parameters = {"l1", "l2", "l1p", "l2p"};
  ObjectSpec l = object("heisenberg-twisted", ObjectKind::lie, {"x1", "x2", "x3"}, heisenberg_action(),
                        table(3, {{0, 1, 2, "l1*l2p"}, {1, 0, 2, "l1p*l2"}}));
  l.alpha = diag({"l1", "l2", "l1*l2"});
  l.beta = diag({"l1p", "l2p", "l1p*l2p"});
  f.objects.push_back(std::move(l));
  return f;
}

AlgebraFile cross_product() {
  AlgebraFile f = over_group("cross-product", "three-dimensional cross-product Lie algebra over the trivial Hopf algebra",
                             trivial_group(), one_tensor_one(1));
  f.objects.push_back(object("so3", ObjectKind::lie, {"x1", "x2", "x3"}, {diag({"1", "1", "1"})},
                             table(3, {{0, 1, 2, "1"},
                                       {1, 0, 2, "-1"},
                                       {1, 2, 0, "1"},
                                       {2, 1, 0, "-1"},
                                       {2, 0, 1, "1"},
                                       {0, 2, 1, "-1"}})));
  return f;
}

struct Builder {
  CatalogInfo info;
  std::function<AlgebraFile()> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> all = {
      {{"trivial-hopf", {}, "ground field Hopf algebra; 1-dim and upper triangular associative algebras"}, trivial_hopf},
      {{"kZ2", {}, "kZ2 with its super R-matrix acting on a Clifford algebra"}, kz2},
      {{"bihom-2d", {"example24"}, "2-dim BiHom-associative algebra over kZ2 in parameter b"}, bihom_2d},
      {{"heisenberg", {"example25-heisenberg"}, "Heisenberg algebra over kZ2 with twisting maps"}, heisenberg},
      {{"heisenberg-twisted", {"example25-twisted"}, "twisted Heisenberg algebra in l1, l2, l1p, l2p"},
       heisenberg_twisted},
      {{"cross-product", {"cross-product-classical"}, "classical 3-dim cross-product Lie algebra"}, cross_product},
  };
  return all;
}

}  // namespace

RMatrix z2_super_rmatrix() {
  Matrix c(2, 2);
  c(0, 0) = c(0, 1) = c(1, 0) = Scalar::parse("1/2");
  c(1, 1) = Scalar::parse("-1/2");
  return {c};
}

const std::vector<CatalogInfo>& catalog() {
  static const std::vector<CatalogInfo> infos = [] {
    std::vector<CatalogInfo> out;
    for (const auto& b : builders()) out.push_back(b.info);
    return out;
  }();
  return infos;
}

std::string catalog_canonical_name(const std::string& name) {
  for (const auto& b : builders()) {
    if (b.info.name == name) return name;
    for (const auto& a : b.info.aliases)
      if (a == name) return b.info.name;
  }
  return {};
}

AlgebraFile catalog_entry(const std::string& name) {
  const std::string canonical = catalog_canonical_name(name);
  for (const auto& b : builders())
    if (b.info.name == canonical) return b.build();
  throw Error("unknown catalog entry '" + name + "'");
}

}  // namespace bihom
