#include "bihom/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace bihom {

namespace {

void check_dim(const Subspace& u, std::size_t n) {
  if (u.ambient_dim() != n) throw AmbientMismatch(u.ambient_dim(), n);
}

Subspace pairwise(const StructureTensor& t, const Subspace& u, const Subspace& v) {
  const std::size_t n = t.dim();
  check_dim(u, n);
  check_dim(v, n);
  std::vector<Vector> out;
  for (const auto& x : u.vectors())
    for (const auto& y : v.vectors()) out.push_back(t.apply(x, y));
  return Subspace::span(n, out);
}

// Records the first image outside u under one named condition.
class ConditionBuilder {
 public:
  ConditionBuilder(std::string condition, const Subspace& u, const std::vector<std::string>& names)
      : u_(u), names_(names) {
    result_.condition = std::move(condition);
  }
  void test(const Vector& image, const std::function<std::string()>& describe) {
    if (!result_.holds || u_.contains(image)) return;
    result_.holds = false;
    result_.witness = image;
    result_.detail = describe() + " = " + format_vector(image, names_) + " lies outside the subspace";
  }
  ConditionResult finish() const { return result_; }

 private:
  const Subspace& u_;
  const std::vector<std::string>& names_;
  ConditionResult result_;
};

std::vector<ConditionResult> stability_conditions(const HModule& m, const Matrix& alpha, const Matrix& beta,
                                                  const Subspace& u) {
  check_dim(u, m.dim());
  const auto& names = m.basis;
  const auto vs = u.vectors();
  ConditionBuilder a("α(U) ⊆ U", u, names), b("β(U) ⊆ U", u, names), h("H·U ⊆ U", u, names);
  for (const auto& v : vs) {
    const std::string sv = format_vector(v, names);
    a.test(alpha * v, [&] { return "α(" + sv + ")"; });
    b.test(beta * v, [&] { return "β(" + sv + ")"; });
    for (std::size_t i = 0; i < m.hopf->dim(); ++i)
      h.test(m.action[i] * v, [&] { return m.hopf->basis[i] + "·(" + sv + ")"; });
  }
  return {a.finish(), b.finish(), h.finish()};
}

IdealCheck conclude(std::vector<ConditionResult> conditions) {
  IdealCheck out;
  out.conditions = std::move(conditions);
  for (const auto& c : out.conditions) out.holds = out.holds && c.holds;
  return out;
}

// Smallest subspace containing seed closed under α, β, the action and the
// extra images produced by `more` from the current basis.
Subspace close(const HModule& m, const Matrix& alpha, const Matrix& beta, const Subspace& seed,
               const std::function<void(const std::vector<Vector>&, std::vector<Vector>&)>& more) {
  const std::size_t n = m.dim();
  check_dim(seed, n);
  Subspace current = seed;
  while (true) {
    const auto vs = current.vectors();
    std::vector<Vector> images = vs;
    for (const auto& v : vs) {
      images.push_back(alpha * v);
      images.push_back(beta * v);
      for (const auto& act : m.action) images.push_back(act * v);
    }
    more(vs, images);
    Subspace next = Subspace::span(n, images);
    if (next == current) return current;
    current = std::move(next);
  }
}

// Stacks the matrices of v ↦ op(v, e_j) (or op(e_j, v)) premultiplied by
// `filter`, so that the kernel is {v : filter·op(v, e_j) = 0 for all j}.
Matrix stacked_operators(const StructureTensor& t, const Matrix& filter, bool left) {
  const std::size_t n = t.dim();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(left ? t.on_basis(i, j) : t.on_basis(j, i));
    blocks.push_back(filter * Matrix::from_columns(cols, n));
  }
  return Matrix::stack(blocks);
}

SeriesResult iterate(const Subspace& start, std::size_t max_steps,
                     const std::function<Subspace(const Subspace&)>& next_of) {
  if (max_steps == 0) throw Error("max-steps must be at least 1");
  SeriesResult r;
  r.terms.push_back(start);
  if (start.is_zero()) {
    r.verdict = SeriesResult::Verdict::zero;
    return r;
  }
  for (std::size_t k = 1; k <= max_steps; ++k) {
    Subspace next = next_of(r.terms.back());
    if (next == r.terms.back()) {
      r.verdict = SeriesResult::Verdict::stabilized;
      r.step = k;
      return r;
    }
    r.terms.push_back(std::move(next));
    if (r.terms.back().is_zero()) {
      r.verdict = SeriesResult::Verdict::zero;
      r.step = k;
      return r;
    }
  }
  r.verdict = SeriesResult::Verdict::capped;
  r.step = max_steps;
  return r;
}

void add_unique(std::vector<Subspace>& list, const Subspace& s) {
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
}

template <typename Closure, typename Product, typename Nilpotent>
StructureCertificate certify(std::size_t n, std::uint64_t seed, std::size_t count, Closure closure, Product product,
                             Nilpotent nilpotent) {
  StructureCertificate cert;
  cert.probe_seed = seed;
  const auto probes = probe_vectors(n, seed, count);
  cert.probes = probes.size();
  for (const auto& p : probes) {
    Subspace c = closure(Subspace::span(n, {p}));
    if (!c.is_zero() && !c.is_full()) add_unique(cert.ideals, c);
  }
  std::stable_sort(cert.ideals.begin(), cert.ideals.end(),
                   [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  std::vector<Subspace> candidates = cert.ideals;
  if (n > 0) candidates.push_back(Subspace::full(n));
  for (const auto& i : candidates)
    if (nilpotent(i)) {
      cert.nilpotent_ideal = i;
      break;
    }
  for (std::size_t a = 0; a < candidates.size() && !cert.zero_product; ++a)
    for (std::size_t b = a; b < candidates.size(); ++b)
      if (product(candidates[a], candidates[b]).is_zero() && product(candidates[b], candidates[a]).is_zero()) {
        cert.zero_product = std::pair{candidates[a], candidates[b]};
        break;
      }
  return cert;
}

ReportEntry skipped_entry(const std::string& id, const std::string& citation, const std::string& note) {
  ReportEntry e;
  e.id = id;
  e.citation = citation;
  e.status = Status::skipped;
  e.note = note;
  return e;
}

}  // namespace

Subspace bracket_of_subspaces(const BiHomLie& l, const Subspace& u, const Subspace& v) {
  return pairwise(l.bracket, u, v);
}

Subspace product_of_subspaces(const BiHomAlgebra& a, const Subspace& u, const Subspace& v) {
  return pairwise(a.mult, u, v);
}

const ConditionResult* IdealCheck::first_failure() const {
  for (const auto& c : conditions)
    if (!c.holds) return &c;
  return nullptr;
}

IdealCheck check_stability(const HModule& m, const Matrix& alpha, const Matrix& beta, const Subspace& u) {
  return conclude(stability_conditions(m, alpha, beta, u));
}

IdealCheck is_H_bihom_lie_ideal(const BiHomLie& l, const Subspace& u) {
  auto conditions = stability_conditions(l.module, l.alpha, l.beta, u);
  const auto& names = l.module.basis;
  ConditionBuilder br("[U,L] ⊆ U", u, names);
  for (const auto& v : u.vectors())
    for (std::size_t j = 0; j < l.dim(); ++j)
      br.test(l.bracket.apply(v, basis_vector(l.dim(), j)),
              [&] { return "[" + format_vector(v, names) + ", " + names[j] + "]"; });
  conditions.push_back(br.finish());
  return conclude(std::move(conditions));
}

IdealCheck is_H_bihom_ideal(const BiHomAlgebra& a, const Subspace& u) {
  auto conditions = stability_conditions(a.module, a.alpha, a.beta, u);
  const auto& names = a.module.basis;
  ConditionBuilder left("AU ⊆ U", u, names), right("UA ⊆ U", u, names);
  for (const auto& v : u.vectors())
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector e = basis_vector(a.dim(), j);
      const std::string sv = format_vector(v, names);
      left.test(a.multiply(e, v), [&] { return names[j] + "·(" + sv + ")"; });
      right.test(a.multiply(v, e), [&] { return "(" + sv + ")·" + names[j]; });
    }
  conditions.push_back(left.finish());
  conditions.push_back(right.finish());
  return conclude(std::move(conditions));
}

Subspace center(const BiHomLie& l) { return kernel(stacked_operators(l.bracket, Matrix::identity(l.dim()), true)); }

Subspace transporter(const BiHomLie& l, const Subspace& u) {
  check_dim(u, l.dim());
  return kernel(stacked_operators(l.bracket, u.annihilator(), true));
}

Subspace annihilator(const BiHomAlgebra& a, const Subspace& i) {
  const std::size_t n = a.dim();
  check_dim(i, n);
  std::vector<Matrix> blocks;
  for (const auto& u : i.vectors()) {
    std::vector<Vector> left_cols, right_cols;
    for (std::size_t k = 0; k < n; ++k) {
      left_cols.push_back(a.multiply(basis_vector(n, k), u));
      right_cols.push_back(a.multiply(u, basis_vector(n, k)));
    }
    blocks.push_back(Matrix::from_columns(left_cols, n));
    blocks.push_back(Matrix::from_columns(right_cols, n));
  }
  if (blocks.empty()) return Subspace::full(n);
  return kernel(Matrix::stack(blocks));
}

std::string to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::lie_ideal:
      return "lie-ideal";
    case ClosureKind::associative_ideal:
      return "associative-ideal";
    case ClosureKind::associative_subalgebra:
      return "associative-subalgebra";
  }
  return "";
}

Subspace ideal_closure(const BiHomLie& l, const Subspace& seed, const std::optional<Subspace>& within) {
  const std::vector<Vector> partners = within ? within->vectors() : Subspace::full(l.dim()).vectors();
  if (within) check_dim(*within, l.dim());
  return close(l.module, l.alpha, l.beta, seed, [&](const std::vector<Vector>& vs, std::vector<Vector>& out) {
    for (const auto& v : vs)
      for (const auto& w : partners) out.push_back(l.bracket.apply(v, w));
  });
}

Subspace ideal_closure(const BiHomAlgebra& a, const Subspace& seed, ClosureKind kind) {
  if (kind == ClosureKind::lie_ideal) throw Error("Lie ideal closure needs a bracket");
  const std::size_t n = a.dim();
  return close(a.module, a.alpha, a.beta, seed, [&](const std::vector<Vector>& vs, std::vector<Vector>& out) {
    for (const auto& v : vs) {
      if (kind == ClosureKind::associative_ideal) {
        for (std::size_t j = 0; j < n; ++j) {
          out.push_back(a.multiply(basis_vector(n, j), v));
          out.push_back(a.multiply(v, basis_vector(n, j)));
        }
      } else {
        for (const auto& w : vs) out.push_back(a.multiply(v, w));
      }
    }
  });
}

std::string to_string(SeriesResult::Verdict v) {
  switch (v) {
    case SeriesResult::Verdict::zero:
      return "zero";
    case SeriesResult::Verdict::stabilized:
      return "stabilized";
    case SeriesResult::Verdict::capped:
      return "capped";
  }
  return "";
}

SeriesResult derived_series(const BiHomLie& l, const Subspace& start, std::size_t max_steps) {
  return iterate(start, max_steps, [&](const Subspace& s) { return bracket_of_subspaces(l, s, s); });
}

SeriesResult derived_series(const BiHomLie& l, std::size_t max_steps) {
  return derived_series(l, Subspace::full(l.dim()), max_steps);
}

SeriesResult lower_central_series(const BiHomLie& l, const Subspace& start, std::size_t max_steps) {
  return iterate(start, max_steps, [&](const Subspace& s) { return bracket_of_subspaces(l, s, start); });
}

SeriesResult power_series(const BiHomAlgebra& a, const Subspace& start, std::size_t max_steps) {
  return iterate(start, max_steps, [&](const Subspace& s) { return product_of_subspaces(a, s, start); });
}

std::vector<Vector> probe_vectors(std::size_t n, std::uint64_t seed, std::size_t count) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(basis_vector(n, i));
  if (n == 0) return out;
  std::mt19937_64 rng(seed);
  while (out.size() < n + count) {
    Vector v(n);
    for (auto& e : v) e = Scalar(static_cast<long>(rng() % 7) - 3);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

std::optional<Subspace> StructureCertificate::ideal() const {
  if (ideals.empty()) return std::nullopt;
  return ideals.front();
}

StructureCertificate simplicity_certificate(const BiHomLie& l, std::uint64_t seed, std::size_t count) {
  return certify(
      l.dim(), seed, count, [&](const Subspace& s) { return ideal_closure(l, s); },
      [&](const Subspace& a, const Subspace& b) { return bracket_of_subspaces(l, a, b); },
      [&](const Subspace& i) { return lower_central_series(l, i).verdict == SeriesResult::Verdict::zero; });
}

StructureCertificate simplicity_certificate(const BiHomAlgebra& a, std::uint64_t seed, std::size_t count) {
  return certify(
      a.dim(), seed, count, [&](const Subspace& s) { return ideal_closure(a, s, ClosureKind::associative_ideal); },
      [&](const Subspace& x, const Subspace& y) { return product_of_subspaces(a, x, y); },
      [&](const Subspace& i) { return power_series(a, i).verdict == SeriesResult::Verdict::zero; });
}

CheckReport check_structure_theorems(const BiHomAlgebra& a, const RMatrix& r, std::uint64_t seed, std::size_t count) {
  const std::string prime_id = "bracket-of-ideal-in-lie-ideal/prime";
  const std::string simple_id = "bracket-of-ideal-in-lie-ideal/simple";
  const std::string solvable_id = "solvable-subideals";
  const std::string ideal_citation = "[U,U] ≠ 0 ⇒ 0 ≠ [I,L] ⊆ U for some H-BiHom-ideal I";
  const std::string solvable_citation = "V ⊊ [L,L] an H-BiHom-Lie ideal of [L,L] ⇒ V⁽³⁾ = 0 and [V,V] nilpotent";
  CheckReport report;
  report.suite = "structure-theorems";
  report.probe_seed = seed;

  auto skip_all = [&](const std::string& note) {
    report.entries.push_back(skipped_entry(prime_id, ideal_citation, note));
    report.entries.push_back(skipped_entry(simple_id, ideal_citation, note));
    report.entries.push_back(skipped_entry(solvable_id, solvable_citation, note));
    return report;
  };
  if (!a.unit) return skip_all("needs a unital algebra");
  BiHomLie l;
  try {
    l = commutator_bracket(a, r);
  } catch (const PreconditionFailed& e) {
    return skip_all(std::string("commutator bracket unavailable: ") + e.what());
  }

  const std::size_t n = a.dim();
  const auto& names = a.module.basis;
  const Subspace full = Subspace::full(n);
  const StructureCertificate cert = simplicity_certificate(a, seed, count);
  const auto probes = probe_vectors(n, seed, count);

  // Candidate H-BiHom-Lie ideals of L.
  std::vector<Subspace> lie_ideals{full};
  for (const auto& p : probes) add_unique(lie_ideals, ideal_closure(l, Subspace::span(n, {p})));

  auto ideal_entry = [&](const std::string& id) {
    EntryBuilder b(id, ideal_citation);
    for (const auto& u : lie_ideals) {
      if (bracket_of_subspaces(l, u, u).is_zero()) continue;
      // Ideals inside {x : [x,L] ⊆ U}, plus L and the certificate's ideals.
      std::vector<Subspace> candidates = cert.ideals;
      candidates.push_back(full);
      const Subspace normalizer = transporter(l, u);
      for (const auto& v : normalizer.vectors()) {
        Subspace c = ideal_closure(a, Subspace::span(n, {v}), ClosureKind::associative_ideal);
        if (normalizer.contains(c)) add_unique(candidates, c);
      }
      bool found = false;
      for (const auto& i : candidates) {
        Subspace il = bracket_of_subspaces(l, i, full);
        if (!il.is_zero() && u.contains(il)) {
          found = true;
          break;
        }
      }
      if (!found) b.record_failure({"U = " + format_subspace(u, names)}, {});
    }
    return b.finish();
  };

  if (cert.nonprime())
    report.entries.push_back(skipped_entry(prime_id, ideal_citation,
                                           "not prime: " + format_subspace(cert.zero_product->first, names) + " · " +
                                               format_subspace(cert.zero_product->second, names) + " = 0"));
  else
    report.entries.push_back(ideal_entry(prime_id));

  const std::string nonsimple_note = cert.nonsimple() ? "not simple: ideal " + format_subspace(*cert.ideal(), names) : "";
  if (cert.nonsimple())
    report.entries.push_back(skipped_entry(simple_id, ideal_citation, nonsimple_note));
  else
    report.entries.push_back(ideal_entry(simple_id));

  if (cert.nonsimple()) {
    report.entries.push_back(skipped_entry(solvable_id, solvable_citation, nonsimple_note));
  } else {
    EntryBuilder b(solvable_id, solvable_citation);
    const Subspace d = bracket_of_subspaces(l, full, full);
    const auto dv = d.vectors();
    std::vector<Subspace> subideals{Subspace::zero(n)};
    for (const auto& c : probe_vectors(dv.size(), seed, count)) {
      Vector p(n);
      for (std::size_t k = 0; k < dv.size(); ++k) axpy(p, c[k], dv[k]);
      Subspace v = ideal_closure(l, Subspace::span(n, {p}), d);
      if (!(v == d)) add_unique(subideals, v);
    }
    for (const auto& v : subideals) {
      SeriesResult ds = derived_series(l, v, 3);
      SeriesResult lcs = lower_central_series(l, bracket_of_subspaces(l, v, v));
      if (ds.verdict != SeriesResult::Verdict::zero || lcs.verdict != SeriesResult::Verdict::zero)
        b.record_failure({"V = " + format_subspace(v, names)}, {});
    }
    report.entries.push_back(b.finish());
  }
  return report;
}

}  // namespace bihom
