#include "bihom/hmod.hpp"

namespace bihom {

void HModule::validate_shape() const {
  if (!hopf) throw DimensionMismatch("module has no Hopf algebra");
  if (action.size() != hopf->dim())
    throw DimensionMismatch("module needs one action matrix per Hopf basis element (" + std::to_string(hopf->dim()) +
                            "), got " + std::to_string(action.size()));
  for (const auto& a : action)
    if (a.rows() != dim() || a.cols() != dim()) throw DimensionMismatch("action matrix does not match module dimension");
}

Matrix HModule::action_of(const Vector& h) const {
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!h.at(i).is_zero()) out = out + action[i].scaled(h[i]);
  return out;
}

HModule HModule::trivial(std::shared_ptr<const HopfAlgebra> hopf, std::vector<std::string> basis) {
  HModule m{std::move(hopf), std::move(basis), {}};
  for (std::size_t i = 0; i < m.hopf->dim(); ++i) m.action.push_back(Matrix::identity(m.dim()).scaled(m.hopf->counit[i]));
  return m;
}

CheckReport check_module(const HModule& m) {
  m.validate_shape();
  const HopfAlgebra& h = *m.hopf;
  const std::size_t n = h.dim();
  CheckReport report;
  report.suite = "module";

  EntryBuilder unit("unit-acts-as-identity", "1·m = m");
  Matrix u = m.action_of(h.unit);
  for (std::size_t j = 0; j < m.dim(); ++j) unit.record({"1", m.basis[j]}, u.column(j) - basis_vector(m.dim(), j), m.basis);
  report.entries.push_back(unit.finish());

  EntryBuilder compat("module-law", "(hk)·m = h·(k·m)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix lhs = m.action_of(h.mult.on_basis(i, k));
      Matrix rhs = m.action[i] * m.action[k];
      for (std::size_t j = 0; j < m.dim(); ++j)
        compat.record({h.basis[i], h.basis[k], m.basis[j]}, lhs.column(j) - rhs.column(j), m.basis);
    }
  report.entries.push_back(compat.finish());
  return report;
}

HModule tensor_module(const HModule& m, const HModule& n) {
  if (m.hopf != n.hopf && !(m.hopf && n.hopf && m.hopf->basis == n.hopf->basis))
    throw DimensionMismatch("modules over different Hopf algebras");
  const HopfAlgebra& h = *m.hopf;
  HModule out;
  out.hopf = m.hopf;
  for (const auto& a : m.basis)
    for (const auto& b : n.basis) out.basis.push_back(a + "⊗" + b);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix op(out.dim(), out.dim());
    for (std::size_t a = 0; a < h.dim(); ++a)
      for (std::size_t b = 0; b < h.dim(); ++b) {
        const Scalar& c = h.comult(i, a, b);
        if (!c.is_zero()) op = op + kron(m.action[a], n.action[b]).scaled(c);
      }
    out.action.push_back(std::move(op));
  }
  return out;
}

Matrix flip_matrix(std::size_t dim_m, std::size_t dim_n) {
  Matrix p(dim_n * dim_m, dim_m * dim_n);
  for (std::size_t a = 0; a < dim_m; ++a)
    for (std::size_t b = 0; b < dim_n; ++b) p(b * dim_m + a, a * dim_n + b) = Scalar(1);
  return p;
}

Matrix braiding(const HModule& m, const HModule& n, const RMatrix& r) {
  const std::size_t hd = m.hopf->dim();
  Matrix sum(n.dim() * m.dim(), n.dim() * m.dim());
  for (std::size_t i = 0; i < hd; ++i)
    for (std::size_t j = 0; j < hd; ++j) {
      const Scalar& c = r.coefficients(i, j);
      if (!c.is_zero()) sum = sum + kron(n.action[j], m.action[i]).scaled(c);
    }
  return sum * flip_matrix(m.dim(), n.dim());
}

bool check_braiding_symmetry(const HModule& m, const RMatrix& r) {
  Matrix t = braiding(m, m, r);
  return t * t == Matrix::identity(t.rows());
}

ReportEntry check_module_map(const Matrix& f, const HModule& src, const HModule& dst, const std::string& id,
                             const std::string& citation) {
  EntryBuilder b(id, citation);
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw DimensionMismatch("module map has wrong shape");
  for (std::size_t i = 0; i < src.hopf->dim(); ++i) {
    Matrix diff = f * src.action[i] - dst.action[i] * f;
    for (std::size_t j = 0; j < src.dim(); ++j) b.record({src.hopf->basis[i], src.basis[j]}, diff.column(j), dst.basis);
  }
  return b.finish();
}

bool is_module_map(const Matrix& f, const HModule& src, const HModule& dst) {
  return check_module_map(f, src, dst, "module-map", "").status == Status::pass;
}

ReportEntry check_h_linear_product(const HModule& m, const StructureTensor& product, const std::string& id,
                                   const std::string& citation) {
  const HopfAlgebra& h = *m.hopf;
  const std::size_t n = m.dim();
  EntryBuilder b(id, citation);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vector d = h.comult.slice(i);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vector lhs = m.action[i] * product.on_basis(x, y);
        Vector rhs(n);
        for (std::size_t a = 0; a < h.dim(); ++a)
          for (std::size_t c = 0; c < h.dim(); ++c) {
            const Scalar& coeff = d[a * h.dim() + c];
            if (!coeff.is_zero()) axpy(rhs, coeff, product.apply(m.action[a].column(x), m.action[c].column(y)));
          }
        b.record({h.basis[i], m.basis[x], m.basis[y]}, lhs - rhs, m.basis);
      }
  }
  return b.finish();
}

CheckReport check_module_algebra(const HModule& m, const StructureTensor& mult) {
  m.validate_shape();
  CheckReport report;
  report.suite = "module-algebra";
  report.entries.push_back(check_h_linear_product(m, mult, "module-algebra", "h·(ab) = (h₁·a)(h₂·b)"));
  return report;
}

bool is_H_commutative(const HModule& m, const StructureTensor& mult, const RMatrix& r) {
  const std::size_t hd = m.hopf->dim();
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = 0; b < m.dim(); ++b) {
      Vector braided(m.dim());
      for (std::size_t i = 0; i < hd; ++i)
        for (std::size_t j = 0; j < hd; ++j) {
          const Scalar& c = r.coefficients(i, j);
          if (!c.is_zero()) axpy(braided, c, mult.apply(m.action[j].column(b), m.action[i].column(a)));
        }
      if (!is_zero(braided - mult.on_basis(a, b))) return false;
    }
  return true;
}

}  // namespace bihom
