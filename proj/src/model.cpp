#include "bihom/model.hpp"

#include <algorithm>

namespace bihom {

std::string to_string(ObjectKind k) { return k == ObjectKind::lie ? "lie" : "associative"; }

const ObjectSpec& AlgebraFile::object(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return o;
  throw Error("no object named '" + name + "'");
}

HModule AlgebraFile::module(const ObjectSpec& o) const { return HModule{hopf, o.basis, o.action}; }

BiHomAlgebra AlgebraFile::algebra(const std::string& name) const {
  const ObjectSpec& o = object(name);
  if (o.kind != ObjectKind::associative) throw Error("object '" + name + "' is not an associative algebra");
  return BiHomAlgebra{module(o), o.table, o.alpha, o.beta, o.unit, o.multiplicative};
}

BiHomLie AlgebraFile::lie(const std::string& name) const {
  const ObjectSpec& o = object(name);
  if (o.kind != ObjectKind::lie) throw Error("object '" + name + "' is not a Lie object");
  return BiHomLie{module(o), o.table, o.alpha, o.beta, rmatrix};
}

Vector substitute(const Vector& v, const Bindings& bindings) {
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.substitute_partial(bindings));
  return out;
}

Matrix substitute(const Matrix& m, const Bindings& bindings) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute_partial(bindings);
  return out;
}

StructureTensor substitute(const StructureTensor& t, const Bindings& bindings) {
  const std::size_t n = t.dim();
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(i, j, k).substitute_partial(bindings);
  return out;
}

AlgebraFile AlgebraFile::substituted(const Bindings& bindings) const {
  AlgebraFile out = *this;
  out.parameters.clear();
  for (const auto& p : parameters)
    if (!bindings.count(p)) out.parameters.push_back(p);
  HopfAlgebra h = *hopf;
  h.mult = substitute(h.mult, bindings);
  h.unit = substitute(h.unit, bindings);
  h.comult = substitute(h.comult, bindings);
  h.counit = substitute(h.counit, bindings);
  h.antipode = substitute(h.antipode, bindings);
  out.hopf = std::make_shared<const HopfAlgebra>(std::move(h));
  out.rmatrix = RMatrix{substitute(rmatrix.coefficients, bindings)};
  for (auto& o : out.objects) {
    for (auto& a : o.action) a = substitute(a, bindings);
    o.table = substitute(o.table, bindings);
    o.alpha = substitute(o.alpha, bindings);
    o.beta = substitute(o.beta, bindings);
    if (o.unit) o.unit = substitute(*o.unit, bindings);
    if (o.twist) o.twist = std::pair{substitute(o.twist->first, bindings), substitute(o.twist->second, bindings)};
    if (o.reference_bracket) o.reference_bracket = substitute(*o.reference_bracket, bindings);
  }
  return out;
}

ObjectSpec lie_object(const std::string& name, const BiHomLie& l) {
  ObjectSpec o;
  o.name = name;
  o.kind = ObjectKind::lie;
  o.basis = l.module.basis;
  o.action = l.module.action;
  o.table = l.bracket;
  o.alpha = l.alpha;
  o.beta = l.beta;
  return o;
}

}  // namespace bihom
