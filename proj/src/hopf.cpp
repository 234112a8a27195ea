#include "bihom/hopf.hpp"

#include <set>

namespace bihom {

// ---------------------------------------------------------- StructureTensor

Vector StructureTensor::on_basis(std::size_t i, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

Vector StructureTensor::apply(const Vector& a, const Vector& b) const {
  if (a.size() != n_ || b.size() != n_) throw DimensionMismatch("structure tensor argument has wrong length");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!(*this)(i, j, k).is_zero()) out[k] += c * (*this)(i, j, k);
    }
  }
  return out;
}

Vector StructureTensor::slice(std::size_t i) const {
  Vector v(n_ * n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) v[j * n_ + k] = (*this)(i, j, k);
  return v;
}

// ------------------------------------------------------------- HopfAlgebra

void HopfAlgebra::validate_shape() const {
  const std::size_t n = dim();
  if (n == 0) throw DimensionMismatch("Hopf algebra has no basis");
  if (mult.dim() != n) throw DimensionMismatch("multiplication tensor does not match basis");
  if (comult.dim() != n) throw DimensionMismatch("comultiplication tensor does not match basis");
  if (unit.size() != n) throw DimensionMismatch("unit vector does not match basis");
  if (counit.size() != n) throw DimensionMismatch("counit vector does not match basis");
  if (antipode.rows() != n || antipode.cols() != n) throw DimensionMismatch("antipode matrix does not match basis");
}

Vector HopfAlgebra::coproduct(const Vector& a) const {
  const std::size_t n = dim();
  Vector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    if (!a[i].is_zero()) axpy(out, a[i], comult.slice(i));
  return out;
}

Scalar HopfAlgebra::counit_of(const Vector& a) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) s += a[i] * counit[i];
  return s;
}

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Digits of a tensor index, most significant first.
std::vector<std::size_t> digits(std::size_t index, std::size_t base, int power) {
  std::vector<std::size_t> d(power);
  for (int p = power - 1; p >= 0; --p) {
    d[p] = index % base;
    index /= base;
  }
  return d;
}

}  // namespace

Vector HopfAlgebra::tensor_multiply(const Vector& x, const Vector& y, int power) const {
  const std::size_t n = dim();
  const std::size_t size = ipow(n, power);
  if (x.size() != size || y.size() != size) throw DimensionMismatch("tensor power element has wrong length");
  Vector out(size);
  for (std::size_t a = 0; a < size; ++a) {
    if (x[a].is_zero()) continue;
    auto da = digits(a, n, power);
    for (std::size_t b = 0; b < size; ++b) {
      if (y[b].is_zero()) continue;
      auto db = digits(b, n, power);
      Vector term{x[a] * y[b]};
      for (int p = 0; p < power; ++p) term = kron(term, mult.on_basis(da[p], db[p]));
      axpy(out, Scalar(1), term);
    }
  }
  return out;
}

Vector HopfAlgebra::tensor_unit(int power) const {
  Vector v{Scalar(1)};
  for (int p = 0; p < power; ++p) v = kron(v, unit);
  return v;
}

// ----------------------------------------------------------------- RMatrix

Vector RMatrix::element() const {
  const std::size_t n = coefficients.rows();
  Vector v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = coefficients(i, j);
  return v;
}

RMatrix RMatrix::trivial(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h.unit[i] * h.unit[j];
  return {m};
}

RMatrix RMatrix::from_element(const Vector& v, std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = v.at(i * dim + j);
  return {m};
}

// ------------------------------------------------------------ axiom suites

CheckReport check_hopf_axioms(const HopfAlgebra& h) {
  h.validate_shape();
  const std::size_t n = h.dim();
  const auto& names = h.basis;
  const auto names2 = tensor_labels(names, 2);
  const auto names3 = tensor_labels(names, 3);
  CheckReport report;
  report.suite = "hopf";

  EntryBuilder assoc("associativity", "(ab)c = a(bc)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = h.multiply(h.mult.on_basis(i, j), basis_vector(n, k));
        Vector rhs = h.multiply(basis_vector(n, i), h.mult.on_basis(j, k));
        assoc.record({names[i], names[j], names[k]}, lhs - rhs, names);
      }
  report.entries.push_back(assoc.finish());

  EntryBuilder unit("unit", "1a = a = a1");
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = basis_vector(n, i);
    unit.record({"1", names[i]}, h.multiply(h.unit, e) - e, names);
    unit.record({names[i], "1"}, h.multiply(e, h.unit) - e, names);
  }
  report.entries.push_back(unit.finish());

  // (Δ ⊗ id)Δ(e_i) and (id ⊗ Δ)Δ(e_i) over H^{⊗3}.
  EntryBuilder coassoc("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ");
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = h.comult.slice(i);
    Vector left(n * n * n), right(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = d[a * n + b];
        if (c.is_zero()) continue;
        axpy(left, c, kron(h.comult.slice(a), basis_vector(n, b)));
        axpy(right, c, kron(basis_vector(n, a), h.comult.slice(b)));
      }
    coassoc.record({names[i]}, left - right, names3);
  }
  report.entries.push_back(coassoc.finish());

  EntryBuilder counit("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ");
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = h.comult.slice(i);
    Vector left(n), right(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = d[a * n + b];
        if (c.is_zero()) continue;
        left[b] += c * h.counit[a];
        right[a] += c * h.counit[b];
      }
    Vector e = basis_vector(n, i);
    counit.record({"ε⊗id", names[i]}, left - e, names);
    counit.record({"id⊗ε", names[i]}, right - e, names);
  }
  report.entries.push_back(counit.finish());

  EntryBuilder bialg("bialgebra", "Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1, ε(ab) = ε(a)ε(b), ε(1) = 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = h.coproduct(h.mult.on_basis(i, j));
      Vector rhs = h.tensor_multiply(h.comult.slice(i), h.comult.slice(j), 2);
      bialg.record({"Δ", names[i], names[j]}, lhs - rhs, names2);
      Scalar eps = h.counit_of(h.mult.on_basis(i, j)) - h.counit[i] * h.counit[j];
      bialg.record({"ε", names[i], names[j]}, Vector{eps}, {"k"});
    }
  bialg.record({"Δ", "1"}, h.coproduct(h.unit) - h.tensor_unit(2), names2);
  bialg.record({"ε", "1"}, Vector{h.counit_of(h.unit) - Scalar(1)}, {"k"});
  report.entries.push_back(bialg.finish());

  EntryBuilder anti("antipode", "S(a₁)a₂ = ε(a)1 = a₁S(a₂)");
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = h.comult.slice(i);
    Vector left(n), right(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = d[a * n + b];
        if (c.is_zero()) continue;
        axpy(left, c, h.multiply(h.antipode.column(a), basis_vector(n, b)));
        axpy(right, c, h.multiply(basis_vector(n, a), h.antipode.column(b)));
      }
    Vector expected = h.counit[i] * h.unit;
    anti.record({"S⊗id", names[i]}, left - expected, names);
    anti.record({"id⊗S", names[i]}, right - expected, names);
  }
  report.entries.push_back(anti.finish());
  return report;
}

CheckReport check_hopf_consequences(const HopfAlgebra& h) {
  h.validate_shape();
  const std::size_t n = h.dim();
  const auto& names = h.basis;
  CheckReport report;
  report.suite = "hopf-consequences";
  EntryBuilder eps("counit-algebra-map", "ε(ab) = ε(a)ε(b)");
  EntryBuilder anti("antipode-anti-multiplicative", "S(ab) = S(b)S(a)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ab = h.mult.on_basis(i, j);
      eps.record({names[i], names[j]}, Vector{h.counit_of(ab) - h.counit[i] * h.counit[j]}, {"k"});
      Vector lhs = h.antipode * ab;
      Vector rhs = h.multiply(h.antipode.column(j), h.antipode.column(i));
      anti.record({names[i], names[j]}, lhs - rhs, names);
    }
  anti.record({"1"}, h.antipode * h.unit - h.unit, names);
  report.entries.push_back(eps.finish());
  report.entries.push_back(anti.finish());
  return report;
}

// ------------------------------------------------------------ constructors

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t identity,
                          std::vector<std::string> names) {
  const std::size_t n = cayley.size();
  auto cell = [](std::size_t a, std::size_t b) {
    return "table[" + std::to_string(a) + "][" + std::to_string(b) + "]";
  };
  if (n == 0) throw NotAGroup("empty Cayley table");
  if (identity >= n) throw NotAGroup("identity index out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[a].size() != n) throw NotAGroup("row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (cayley[a][b] >= n) throw NotAGroup("closure violated at " + cell(a, b));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (cayley[identity][a] != a) throw NotAGroup("identity law violated at " + cell(identity, a));
    if (cayley[a][identity] != a) throw NotAGroup("identity law violated at " + cell(a, identity));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw NotAGroup("associativity violated at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ")");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (cayley[a][b] == identity && cayley[b][a] == identity) inv[a] = b;
    if (inv[a] == n) throw NotAGroup("element " + std::to_string(a) + " has no inverse (row " + std::to_string(a) + ")");
  }
  if (names.empty())
    for (std::size_t a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
  if (names.size() != n) throw DimensionMismatch("element name count differs from group order");
  if (std::set<std::string>(names.begin(), names.end()).size() != n) throw NotAGroup("duplicate element names");

  HopfAlgebra h;
  h.basis = std::move(names);
  h.mult = StructureTensor(n);
  h.comult = StructureTensor(n);
  h.unit = basis_vector(n, identity);
  h.counit = Vector(n, Scalar(1));
  h.antipode = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) h.mult(a, b, cayley[a][b]) = Scalar(1);
    h.comult(a, a, a) = Scalar(1);
    h.antipode(inv[a], a) = Scalar(1);
  }
  return h;
}

HopfAlgebra cyclic_group_algebra(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return group_algebra(table, 0, names);
}

// ------------------------------------------------------- quasitriangularity

RMatrix inverse(const HopfAlgebra& h, const RMatrix& r) {
  const std::size_t n = h.dim();
  const std::size_t n2 = n * n;
  if (r.coefficients.rows() != n || r.coefficients.cols() != n)
    throw DimensionMismatch("R-matrix does not match the Hopf algebra dimension");
  const Vector rv = r.element();
  // Left multiplication by R on H ⊗ H.
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n2; ++j) cols.push_back(h.tensor_multiply(rv, basis_vector(n2, j), 2));
  Matrix left = Matrix::from_columns(cols, n2);
  Matrix inv_left;
  try {
    inv_left = invert(left);
  } catch (const Singular&) {
    throw NotInvertible("R is not invertible in H⊗H");
  }
  Vector rinv = inv_left * h.tensor_unit(2);
  if (!is_zero(h.tensor_multiply(rinv, rv, 2) - h.tensor_unit(2)))
    throw NotInvertible("R has a one-sided inverse only");
  return RMatrix::from_element(rinv, n);
}

namespace {

// Σ r_ij x_i ⊗ y_j placed into H^{⊗3}; slots picks which two factors carry
// R, the remaining factor is 1.
Vector embed(const HopfAlgebra& h, const RMatrix& r, int first, int second) {
  const std::size_t n = h.dim();
  Vector out(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = r.coefficients(i, j);
      if (c.is_zero()) continue;
      std::vector<Vector> f(3, h.unit);
      f[first] = basis_vector(n, i);
      f[second] = basis_vector(n, j);
      axpy(out, c, kron(kron(f[0], f[1]), f[2]));
    }
  return out;
}

}  // namespace

CheckReport check_quasitriangular(const HopfAlgebra& h, const RMatrix& r) {
  h.validate_shape();
  const std::size_t n = h.dim();
  inverse(h, r);  // throws NotInvertible
  const auto names2 = tensor_labels(h.basis, 2);
  const auto names3 = tensor_labels(h.basis, 3);
  CheckReport report;
  report.suite = "quasitriangular";

  Vector delta_id(n * n * n), id_delta(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = r.coefficients(i, j);
      if (c.is_zero()) continue;
      axpy(delta_id, c, kron(h.comult.slice(i), basis_vector(n, j)));
      axpy(id_delta, c, kron(basis_vector(n, i), h.comult.slice(j)));
    }
  const Vector r12 = embed(h, r, 0, 1), r13 = embed(h, r, 0, 2), r23 = embed(h, r, 1, 2);

  EntryBuilder qt1("qt1", "(Δ⊗id)(R) = R₁₃R₂₃");
  qt1.record({"R"}, delta_id - h.tensor_multiply(r13, r23, 3), names3);
  report.entries.push_back(qt1.finish());

  EntryBuilder qt2("qt2", "(id⊗Δ)(R) = R₁₃R₁₂");
  qt2.record({"R"}, id_delta - h.tensor_multiply(r13, r12, 3), names3);
  report.entries.push_back(qt2.finish());

  EntryBuilder qt3("qt3", "RΔ(h) = Δᶜᵒᵖ(h)R");
  const Vector rv = r.element();
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = h.comult.slice(i);
    Vector dcop(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) dcop[b * n + a] = d[a * n + b];
    qt3.record({h.basis[i]}, h.tensor_multiply(rv, d, 2) - h.tensor_multiply(dcop, rv, 2), names2);
  }
  report.entries.push_back(qt3.finish());
  return report;
}

CheckReport check_r_normalization(const HopfAlgebra& h, const RMatrix& r) {
  const std::size_t n = h.dim();
  Vector left(n), right(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& c = r.coefficients(i, j);
      if (c.is_zero()) continue;
      left[j] += c * h.counit[i];
      right[i] += c * h.counit[j];
    }
  CheckReport report;
  report.suite = "r-normalization";
  EntryBuilder l("counit-left", "(ε⊗id)(R) = 1");
  l.record({"R"}, left - h.unit, h.basis);
  EntryBuilder rr("counit-right", "(id⊗ε)(R) = 1");
  rr.record({"R"}, right - h.unit, h.basis);
  report.entries.push_back(l.finish());
  report.entries.push_back(rr.finish());
  return report;
}

bool is_triangular(const HopfAlgebra& h, const RMatrix& r) {
  RMatrix inv = inverse(h, r);
  return inv.coefficients == r.flipped().coefficients;
}

bool is_cocommutative(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!(h.comult(i, a, b) == h.comult(i, b, a))) return false;
  return true;
}

}  // namespace bihom
