#include "bihom/bihom.hpp"

namespace bihom {

namespace {

void check_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch(std::string(what) + " matrix does not match dimension");
}

ReportEntry commuting_maps_entry(const Matrix& alpha, const Matrix& beta, const std::vector<std::string>& names) {
  EntryBuilder b("maps-commute", "α∘β = β∘α");
  Matrix d = alpha * beta - beta * alpha;
  for (std::size_t j = 0; j < d.cols(); ++j) b.record({names[j]}, d.column(j), names);
  return b.finish();
}

// f(x·y) = f(x)·f(y) for a bilinear operation.
ReportEntry multiplicative_entry(const std::string& id, const std::string& citation, const Matrix& f,
                                 const StructureTensor& t, const std::vector<std::string>& names) {
  EntryBuilder b(id, citation);
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.record({names[i], names[j]}, f * t.on_basis(i, j) - t.apply(f.column(i), f.column(j)), names);
  return b.finish();
}

ReportEntry skipped(const std::string& id, const std::string& citation, const std::string& note) {
  ReportEntry e;
  e.id = id;
  e.status = Status::skipped;
  e.citation = citation;
  e.note = note;
  return e;
}

// Applies the bracket to an element of L ⊗ L.
Vector bracket_on_tensor(const StructureTensor& t, const Vector& v) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!v[a * n + b].is_zero()) axpy(out, v[a * n + b], t.on_basis(a, b));
  return out;
}

// (τ⊗1)(1⊗τ) and (1⊗τ)(τ⊗1) on L^{⊗3}.
std::pair<Matrix, Matrix> cyclic_braidings(const HModule& m, const RMatrix& r) {
  Matrix tau = braiding(m, m, r);
  Matrix id = Matrix::identity(m.dim());
  Matrix left = kron(tau, id), right = kron(id, tau);
  return {left * right, right * left};
}

// Residual matrix (n × n³) of a braided cyclic identity whose single term
// is given by `term` on basis triples.
template <typename Term>
Matrix braided_cyclic_sum(const HModule& m, const RMatrix& r, Term term) {
  const std::size_t n = m.dim();
  const std::size_t n3 = n * n * n;
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) cols.push_back(term(a, b, c));
  Matrix single = Matrix::from_columns(cols, n);
  auto [t1, t2] = cyclic_braidings(m, r);
  return single * (Matrix::identity(n3) + t1 + t2);
}

}  // namespace

void BiHomAlgebra::validate_shape() const {
  module.validate_shape();
  if (mult.dim() != dim()) throw DimensionMismatch("multiplication tensor does not match module dimension");
  check_square(alpha, dim(), "alpha");
  check_square(beta, dim(), "beta");
  if (unit && unit->size() != dim()) throw DimensionMismatch("unit vector does not match module dimension");
}

void BiHomLie::validate_shape() const {
  module.validate_shape();
  if (bracket.dim() != dim()) throw DimensionMismatch("bracket tensor does not match module dimension");
  check_square(alpha, dim(), "alpha");
  check_square(beta, dim(), "beta");
  check_square(rmatrix.coefficients, module.hopf->dim(), "R");
}

CheckReport check_bihom_associative(const BiHomAlgebra& a) {
  a.validate_shape();
  const std::size_t n = a.dim();
  const auto& names = a.module.basis;
  CheckReport report;
  report.suite = "bihom-assoc";

  report.entries.push_back(commuting_maps_entry(a.alpha, a.beta, names));
  report.entries.push_back(check_module_map(a.alpha, a.module, a.module, "alpha-module-map", "α(h·a) = h·α(a)"));
  report.entries.push_back(check_module_map(a.beta, a.module, a.module, "beta-module-map", "β(h·a) = h·β(a)"));

  EntryBuilder assoc("bihom-associativity", "α(a)(bc) = (ab)β(c)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.multiply(a.alpha.column(i), a.mult.on_basis(j, k));
        Vector rhs = a.multiply(a.mult.on_basis(i, j), a.beta.column(k));
        assoc.record({names[i], names[j], names[k]}, lhs - rhs, names);
      }
  report.entries.push_back(assoc.finish());

  if (a.multiplicative) {
    report.entries.push_back(multiplicative_entry("alpha-multiplicative", "α(ab) = α(a)α(b)", a.alpha, a.mult, names));
    report.entries.push_back(multiplicative_entry("beta-multiplicative", "β(ab) = β(a)β(b)", a.beta, a.mult, names));
  } else {
    report.entries.push_back(skipped("alpha-multiplicative", "α(ab) = α(a)α(b)", "not declared multiplicative"));
    report.entries.push_back(skipped("beta-multiplicative", "β(ab) = β(a)β(b)", "not declared multiplicative"));
  }

  if (a.unit) {
    EntryBuilder left("unit-left", "1_A a = β(a)");
    EntryBuilder right("unit-right", "a 1_A = α(a)");
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = basis_vector(n, i);
      left.record({"1_A", names[i]}, a.multiply(*a.unit, e) - a.beta.column(i), names);
      right.record({names[i], "1_A"}, a.multiply(e, *a.unit) - a.alpha.column(i), names);
    }
    report.entries.push_back(left.finish());
    report.entries.push_back(right.finish());
  } else {
    report.entries.push_back(skipped("unit-left", "1_A a = β(a)", "no unit declared"));
    report.entries.push_back(skipped("unit-right", "a 1_A = α(a)", "no unit declared"));
  }

  report.entries.push_back(check_h_linear_product(a.module, a.mult, "module-algebra", "h·(ab) = (h₁·a)(h₂·b)"));
  return report;
}

CheckReport check_generalized_bihom_lie(const BiHomLie& l) {
  l.validate_shape();
  const std::size_t n = l.dim();
  const auto& names = l.module.basis;
  const HopfAlgebra& h = *l.module.hopf;
  CheckReport report;
  report.suite = "bihom-lie";

  {
    ReportEntry tri;
    tri.id = "r-triangular";
    tri.citation = "R⁻¹ = R²⊗R¹";
    try {
      if (!is_triangular(h, l.rmatrix)) {
        tri.status = Status::fail;
        tri.note = "R is not triangular";
      }
    } catch (const NotInvertible& e) {
      tri.status = Status::fail;
      tri.note = e.what();
    }
    report.entries.push_back(tri);
  }

  report.entries.push_back(commuting_maps_entry(l.alpha, l.beta, names));
  report.entries.push_back(check_module_map(l.alpha, l.module, l.module, "alpha-module-map", "α(h·l) = h·α(l)"));
  report.entries.push_back(check_module_map(l.beta, l.module, l.module, "beta-module-map", "β(h·l) = h·β(l)"));
  report.entries.push_back(check_h_linear_product(l.module, l.bracket, "bracket-module-map", "h·[l,l'] = [h₁·l, h₂·l']"));
  report.entries.push_back(
      multiplicative_entry("alpha-multiplicative", "α([l,l']) = [α(l),α(l')]", l.alpha, l.bracket, names));
  report.entries.push_back(
      multiplicative_entry("beta-multiplicative", "β([l,l']) = [β(l),β(l')]", l.beta, l.bracket, names));

  const Matrix tau = braiding(l.module, l.module, l.rmatrix);
  EntryBuilder skew("braided-skew-symmetry", "[β(l),α(l')] = -[R²·β(l'), R¹·α(l)]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = l.bracket_of(l.beta.column(i), l.alpha.column(j));
      Vector rhs = -Scalar(1) * bracket_on_tensor(l.bracket, tau * kron(l.alpha.column(i), l.beta.column(j)));
      skew.record({names[i], names[j]}, lhs - rhs, names);
    }
  report.entries.push_back(skew.finish());

  const Matrix beta2 = l.beta * l.beta;
  Matrix jacobi = braided_cyclic_sum(l.module, l.rmatrix, [&](std::size_t a, std::size_t b, std::size_t c) {
    return l.bracket_of(beta2.column(a), l.bracket_of(l.beta.column(b), l.alpha.column(c)));
  });
  EntryBuilder jac("braided-bihom-jacobi", "{l⊗l'⊗l''} + {(τ⊗1)(1⊗τ)(l⊗l'⊗l'')} + {(1⊗τ)(τ⊗1)(l⊗l'⊗l'')} = 0, {x⊗y⊗z} = [β²(x),[β(y),α(z)]]");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        jac.record({names[a], names[b], names[c]}, jacobi.column((a * n + b) * n + c), names);
  report.entries.push_back(jac.finish());
  return report;
}

CheckReport check_generalized_hom_lie(const BiHomLie& l) {
  l.validate_shape();
  if (!(l.alpha == l.beta)) throw PreconditionFailed("Hom-case suite needs α = β");
  const std::size_t n = l.dim();
  const auto& names = l.module.basis;
  CheckReport report;
  report.suite = "hom-lie";
  report.entries.push_back(check_module_map(l.alpha, l.module, l.module, "alpha-module-map", "α(h·l) = h·α(l)"));
  report.entries.push_back(check_h_linear_product(l.module, l.bracket, "bracket-module-map", "h·[l,l'] = [h₁·l, h₂·l']"));
  report.entries.push_back(
      multiplicative_entry("alpha-multiplicative", "α([l,l']) = [α(l),α(l')]", l.alpha, l.bracket, names));

  const Matrix tau = braiding(l.module, l.module, l.rmatrix);
  EntryBuilder skew("hom-skew-symmetry", "[l,l'] = -[R²·l', R¹·l]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs = -Scalar(1) * bracket_on_tensor(l.bracket, tau * kron(basis_vector(n, i), basis_vector(n, j)));
      skew.record({names[i], names[j]}, l.bracket.on_basis(i, j) - rhs, names);
    }
  report.entries.push_back(skew.finish());

  Matrix jacobi = braided_cyclic_sum(l.module, l.rmatrix, [&](std::size_t a, std::size_t b, std::size_t c) {
    return l.bracket_of(l.alpha.column(a), l.bracket.on_basis(b, c));
  });
  EntryBuilder jac("hom-jacobi", "braided cyclic sum of [α(x),[y,z]] = 0");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        jac.record({names[a], names[b], names[c]}, jacobi.column((a * n + b) * n + c), names);
  report.entries.push_back(jac.finish());
  return report;
}

BiHomLie commutator_bracket(const BiHomAlgebra& a, const RMatrix& r) {
  a.validate_shape();
  const HopfAlgebra& h = *a.module.hopf;
  if (!is_triangular(h, r)) throw NotTriangular("R is not triangular; the commutator construction needs R⁻¹ = R²⊗R¹");
  Matrix alpha_inv, beta_inv;
  try {
    alpha_inv = invert(a.alpha);
  } catch (const Singular&) {
    throw NotBijective("alpha is not bijective");
  }
  try {
    beta_inv = invert(a.beta);
  } catch (const Singular&) {
    throw NotBijective("beta is not bijective");
  }
  CheckReport pre = check_bihom_associative(a);
  for (const auto& e : pre.entries)
    if (e.status == Status::fail)
      throw PreconditionFailed("input is not a BiHom-associative module algebra: " + e.id + " fails");

  const Matrix left_map = alpha_inv * a.beta;   // α⁻¹β, applied to b
  const Matrix right_map = a.alpha * beta_inv;  // αβ⁻¹, applied to a
  const std::size_t n = a.dim();
  BiHomLie l{a.module, StructureTensor(n), a.alpha, a.beta, r};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = a.mult.on_basis(i, j);
      const Vector bj = left_map.column(j), ai = right_map.column(i);
      for (std::size_t p = 0; p < h.dim(); ++p)
        for (std::size_t q = 0; q < h.dim(); ++q) {
          const Scalar& c = r.coefficients(p, q);
          if (!c.is_zero()) axpy(v, -c, a.multiply(a.module.action[q] * bj, a.module.action[p] * ai));
        }
      for (std::size_t k = 0; k < n; ++k) l.bracket(i, j, k) = v[k];
    }
  return l;
}

BiHomLie twist_bracket(const BiHomLie& l, const Matrix& alpha, const Matrix& beta) {
  l.validate_shape();
  const std::size_t n = l.dim();
  check_square(alpha, n, "alpha");
  check_square(beta, n, "beta");
  if (!(l.alpha == Matrix::identity(n)) || !(l.beta == Matrix::identity(n)))
    throw PreconditionFailed("twisting needs a generalized Lie algebra with identity maps");
  const auto& names = l.module.basis;
  for (const auto& [f, label] : {std::pair{&alpha, "alpha"}, std::pair{&beta, "beta"}}) {
    if (!is_module_map(*f, l.module, l.module)) throw NotEndomorphism(std::string(label) + " is not H-linear");
    if (multiplicative_entry("m", "", *f, l.bracket, names).status == Status::fail)
      throw NotEndomorphism(std::string(label) + " is not a bracket endomorphism");
  }
  if (!(alpha * beta == beta * alpha)) throw PreconditionFailed("alpha and beta do not commute");

  BiHomLie out{l.module, StructureTensor(n), alpha, beta, l.rmatrix};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = l.bracket_of(alpha.column(i), beta.column(j));
      for (std::size_t k = 0; k < n; ++k) out.bracket(i, j, k) = v[k];
    }
  return out;
}

CheckReport check_leibniz_identities(const BiHomAlgebra& a, const RMatrix& r) {
  const BiHomLie l = commutator_bracket(a, r);
  const std::size_t n = a.dim();
  const std::size_t hd = a.module.hopf->dim();
  const auto& names = a.module.basis;
  const auto& act = a.module.action;
  const Matrix ab = a.alpha * a.beta;
  auto br = [&](const Vector& x, const Vector& y) { return l.bracket_of(x, y); };
  auto mul = [&](const Vector& x, const Vector& y) { return a.multiply(x, y); };

  CheckReport report;
  report.suite = "leibniz";
  EntryBuilder first("bracket-with-product", "[αβ(a), bc] = [β(a),b]β(c) + (R²·β(b))[R¹·α(a), c]");
  EntryBuilder second("product-with-bracket", "[ab, αβ(c)] = α(a)[b,α(c)] + [a, R²·β(c)](R¹·α(b))");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ea = basis_vector(n, i), eb = basis_vector(n, j), ec = basis_vector(n, k);
        Vector lhs1 = br(ab * ea, mul(eb, ec));
        Vector rhs1 = mul(br(a.beta * ea, eb), a.beta * ec);
        Vector lhs2 = br(mul(ea, eb), ab * ec);
        Vector rhs2 = mul(a.alpha * ea, br(eb, a.alpha * ec));
        for (std::size_t p = 0; p < hd; ++p)
          for (std::size_t q = 0; q < hd; ++q) {
            const Scalar& c = r.coefficients(p, q);
            if (c.is_zero()) continue;
            axpy(rhs1, c, mul(act[q] * (a.beta * eb), br(act[p] * (a.alpha * ea), ec)));
            axpy(rhs2, c, mul(br(ea, act[q] * (a.beta * ec)), act[p] * (a.alpha * eb)));
          }
        first.record({names[i], names[j], names[k]}, lhs1 - rhs1, names);
        second.record({names[i], names[j], names[k]}, lhs2 - rhs2, names);
      }
  report.entries.push_back(first.finish());
  report.entries.push_back(second.finish());
  return report;
}

Informational diff_bracket_table(const BiHomLie& l, const StructureTensor& reference, const std::string& id) {
  const std::size_t n = l.dim();
  const auto& names = l.module.basis;
  Informational info;
  info.id = id;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector computed = l.bracket.on_basis(i, j), ref = reference.on_basis(i, j);
      if (is_zero(computed) && is_zero(ref)) continue;
      TableDiffRow row{"[" + names[i] + "," + names[j] + "]", format_vector(computed, names), format_vector(ref, names),
                       is_zero(computed - ref)};
      if (!row.matches) ++mismatches;
      info.rows.push_back(std::move(row));
    }
  info.message = mismatches == 0 ? "computed bracket matches the reference table"
                                 : std::to_string(mismatches) + " bracket entries differ from the reference table";
  return info;
}

}  // namespace bihom
