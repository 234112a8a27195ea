#include <random>

#include "bihom/linalg.hpp"
#include "doctest.h"

using namespace bihom;

namespace {

Scalar S(const char* text) { return Scalar::parse(text); }

Matrix rows(std::initializer_list<std::initializer_list<const char*>> data) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : data) {
    Vector v;
    for (const char* e : r) v.push_back(S(e));
    cols = v.size();
    rs.push_back(v);
  }
  return Matrix::from_rows(rs, cols);
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 10) >= zero_bias) m(i, j) = Scalar(static_cast<long>(rng() % 7) - 3);
  return m;
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n) {
  std::size_t k = rng() % 4;
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_matrix(rng, 1, n, 4).row(0));
  return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("rref examples") {
  auto r = rref(Matrix::identity(2));
  CHECK(r.form == Matrix::identity(2));
  CHECK(r.rank == 2);

  r = rref(rows({{"1", "2"}, {"2", "4"}}));
  CHECK(r.form == rows({{"1", "2"}, {"0", "0"}}));
  CHECK(r.rank == 1);

  r = rref(rows({{"b", "0"}, {"0", "b"}}));
  CHECK(r.form == Matrix::identity(2));
  CHECK(r.rank == 2);
}

TEST_CASE("invert") {
  CHECK(invert(rows({{"1", "0"}, {"0", "-1"}})) == rows({{"1", "0"}, {"0", "-1"}}));
  CHECK(invert(rows({{"1", "0"}, {"0", "b"}})) == rows({{"1", "0"}, {"0", "1/b"}}));
  CHECK_THROWS_AS(invert(Matrix(1, 1)), Singular);
  CHECK_THROWS_AS(invert(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("kernel") {
  CHECK(kernel(Matrix::identity(3)).is_zero());
  CHECK(kernel(Matrix(3, 3)).is_full());
  Subspace k = kernel(rows({{"1", "1", "0"}, {"0", "0", "1"}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vector{S("1"), S("-1"), S("0")}));
}

TEST_CASE("subspace operations") {
  Vector x1{S("1"), S("0"), S("0")}, x2{S("0"), S("1"), S("0")}, x3{S("0"), S("0"), S("1")};
  Subspace v = Subspace::span(3, {x1, x2});
  CHECK(v + Subspace::zero(3) == v);
  CHECK(v.intersect(v) == v);
  CHECK(v.contains(Subspace::span(3, {x1 + x2})));
  CHECK_FALSE(v.contains(x3));
  CHECK(v.intersect(Subspace::span(3, {x2, x3})) == Subspace::span(3, {x2}));
  CHECK(v.intersect(Subspace::span(3, {x3})).is_zero());
  CHECK_THROWS_AS(v + Subspace::zero(2), AmbientMismatch);
  Matrix ann = v.annihilator();
  CHECK(ann.rows() == 1);
  CHECK(is_zero(ann * (x1 + x2)));
  CHECK_FALSE(is_zero(ann * x3));
  CHECK(format_subspace(Subspace::span(3, {x1 + S("2") * x3, x2}), {"x1", "x2", "x3"}) == "span(x1 + 2*x3, x2)");
  CHECK(format_subspace(Subspace::zero(3), {"x1", "x2", "x3"}) == "0");
}

TEST_CASE("symbolic subspaces") {
  Vector a{S("b"), S("1")}, c{S("b^2"), S("b")};
  CHECK(Subspace::span(2, {a, c}).dim() == 1);
  CHECK(Subspace::span(2, {a, c}).contains(Vector{S("1"), S("1/b")}));
}

TEST_CASE("random matrix properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = random_matrix(rng, r, c, 3);
    RrefResult once = rref(m);
    CHECK(rref(once.form).form == once.form);
    Subspace k = kernel(m);
    CHECK(k.dim() == c - once.rank);
    for (const auto& v : k.vectors()) CHECK(is_zero(m * v));
    if (r == c && once.rank == r) {
      Matrix inv = invert(m);
      CHECK(inv * m == Matrix::identity(r));
      CHECK(m * inv == Matrix::identity(r));
    }
  }
}

TEST_CASE("modular law on random subspaces") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3;
    Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
    Subspace c = a.intersect(random_subspace(rng, n));
    CHECK(a.contains(c));
    CHECK(a.intersect(b + c) == a.intersect(b) + c);
    CHECK(a.intersect(b + a.intersect(c)) == a.intersect(b) + a.intersect(c));
    CHECK((a + b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
  }
}
