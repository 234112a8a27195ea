#include "bihom/runner.hpp"

#include "bihom/io.hpp"

namespace bihom {

namespace {

const std::vector<std::pair<Suite, std::string>> suite_names = {
    {Suite::hopf, "hopf"},
    {Suite::module, "module"},
    {Suite::module_algebra, "module-algebra"},
    {Suite::bihom_assoc, "bihom-assoc"},
    {Suite::bihom_lie, "bihom-lie"},
    {Suite::leibniz, "leibniz"},
    {Suite::all, "all"},
};

const std::vector<std::pair<StructureQuery, std::string>> query_names = {
    {StructureQuery::center, "center"},
    {StructureQuery::derived_series, "derived-series"},
    {StructureQuery::lcs, "lcs"},
    {StructureQuery::ideal_check, "ideal-check"},
    {StructureQuery::closure, "closure"},
    {StructureQuery::certificate, "certificate"},
    {StructureQuery::transporter, "transporter"},
    {StructureQuery::annihilator, "annihilator"},
    {StructureQuery::theorems, "theorems"},
};

std::vector<const ObjectSpec*> selected(const AlgebraFile& f, const std::optional<std::string>& object) {
  if (object) return {&f.object(*object)};
  std::vector<const ObjectSpec*> out;
  for (const auto& o : f.objects) out.push_back(&o);
  return out;
}

CheckReport named(CheckReport r, const std::string& suite, const std::string& subject) {
  r.suite = suite;
  r.subject = subject;
  return r;
}

CheckReport refused(const std::string& suite, const std::string& subject, const PreconditionFailed& e) {
  CheckReport r;
  r.suite = suite;
  r.subject = subject;
  r.refusal = e.what();
  return r;
}

CheckReport hopf_report(const AlgebraFile& f) {
  const HopfAlgebra& h = *f.hopf;
  CheckReport r = named(check_hopf_axioms(h), "hopf", f.name);
  r.append(check_hopf_consequences(h));
  try {
    r.append(check_quasitriangular(h, f.rmatrix));
    r.append(check_r_normalization(h, f.rmatrix));
    const bool tri = is_triangular(h, f.rmatrix);
    r.informational.push_back({"triangular", tri ? "R⁻¹ = flip(R)" : "R⁻¹ ≠ flip(R)", {}});
  } catch (const PreconditionFailed& e) {
    r.refusal = e.what();
  }
  r.informational.push_back({"cocommutative", is_cocommutative(h) ? "Δ = flip∘Δ" : "Δ ≠ flip∘Δ", {}});
  return r;
}

void add_reference_diff(CheckReport& r, const BiHomLie& l, const ObjectSpec& o) {
  if (o.reference_bracket) r.informational.push_back(diff_bracket_table(l, *o.reference_bracket, "reference-bracket"));
}

void object_suites(const AlgebraFile& f, Suite s, const ObjectSpec& o, std::vector<CheckReport>& out) {
  const bool assoc = o.kind == ObjectKind::associative;
  switch (s) {
    case Suite::module:
      out.push_back(named(check_module(f.module(o)), "module", o.name));
      break;
    case Suite::module_algebra:
      if (assoc) out.push_back(named(check_module_algebra(f.module(o), o.table), "module-algebra", o.name));
      break;
    case Suite::bihom_assoc:
      if (assoc) out.push_back(named(check_bihom_associative(f.algebra(o.name)), "bihom-assoc", o.name));
      break;
    case Suite::bihom_lie:
      if (assoc) {
        const std::string subject = o.name + " commutator";
        try {
          BiHomLie l = commutator_bracket(f.algebra(o.name), f.rmatrix);
          CheckReport r = named(check_generalized_bihom_lie(l), "bihom-lie", subject);
          add_reference_diff(r, l, o);
          out.push_back(std::move(r));
        } catch (const PreconditionFailed& e) {
          out.push_back(refused("bihom-lie", subject, e));
        }
      } else {
        BiHomLie l = f.lie(o.name);
        CheckReport r = named(check_generalized_bihom_lie(l), "bihom-lie", o.name);
        add_reference_diff(r, l, o);
        out.push_back(std::move(r));
        if (l.alpha == l.beta) out.push_back(named(check_generalized_hom_lie(l), "hom-lie", o.name));
      }
      break;
    case Suite::leibniz:
      if (assoc) {
        try {
          out.push_back(named(check_leibniz_identities(f.algebra(o.name), f.rmatrix), "leibniz", o.name));
        } catch (const PreconditionFailed& e) {
          out.push_back(refused("leibniz", o.name, e));
        }
      }
      break;
    case Suite::hopf:
    case Suite::all:
      break;
  }
}

const ObjectSpec& pick(const AlgebraFile& f, const std::optional<std::string>& object, ObjectKind kind,
                       bool needs_twist) {
  if (object) return f.object(*object);
  for (const auto& o : f.objects)
    if (o.kind == kind && (!needs_twist || o.twist)) return o;
  throw Error("no " + std::string(kind == ObjectKind::lie ? "Lie object" : "associative object") +
              (needs_twist ? " with twist maps" : "") + " in '" + f.name + "'");
}

Subspace argument(const AlgebraFile& f, const ObjectSpec& o, const StructureRequest& req) {
  if (!req.span) throw Error("structure " + to_string(req.what) + " needs --span");
  return Subspace::span(o.dim(), parse_vectors(*req.span, o.basis, f.parameters));
}

std::string series_note(const SeriesResult& s, const char* vanishing) {
  switch (s.verdict) {
    case SeriesResult::Verdict::zero:
      return std::string(vanishing) + ": reaches 0 at step " + std::to_string(s.step);
    case SeriesResult::Verdict::stabilized:
      return std::string("not ") + vanishing + ": stabilizes at step " + std::to_string(s.step);
    case SeriesResult::Verdict::capped:
      return "undecided: no zero term within " + std::to_string(s.step) + " steps";
  }
  return "";
}

Finding series_finding(const std::string& id, const SeriesResult& s, const std::vector<std::string>& names,
                       const char* vanishing) {
  Finding out{id, to_string(s.verdict), {}, series_note(s, vanishing)};
  for (const auto& t : s.terms) out.terms.push_back(format_subspace(t, names));
  return out;
}

void certificate_findings(CheckReport& r, const StructureCertificate& c, const std::vector<std::string>& names) {
  Finding ideals{"ideals", std::to_string(c.ideals.size()), {}, "closures of the probe vectors"};
  for (const auto& i : c.ideals) ideals.terms.push_back(format_subspace(i, names));
  r.findings.push_back(ideals);
  r.findings.push_back({"simple", c.nonsimple() ? "refuted" : "not refuted", {},
                        c.ideal() ? "ideal " + format_subspace(*c.ideal(), names) : ""});
  r.findings.push_back({"semiprime", c.nonsemiprime() ? "refuted" : "not refuted", {},
                        c.nilpotent_ideal ? "nilpotent ideal " + format_subspace(*c.nilpotent_ideal, names) : ""});
  r.findings.push_back(
      {"prime", c.nonprime() ? "refuted" : "not refuted", {},
       c.zero_product ? format_subspace(c.zero_product->first, names) + " · " +
                            format_subspace(c.zero_product->second, names) + " = 0"
                      : ""});
  r.findings.push_back({"probes", std::to_string(c.probes), {}, ""});
  r.probe_seed = c.probe_seed;
}

void ideal_findings(CheckReport& r, const IdealCheck& c, const std::string& kind) {
  r.findings.push_back({"ideal", c.holds ? "yes" : "no", {}, kind});
  for (const auto& cond : c.conditions) r.findings.push_back({cond.condition, cond.holds ? "holds" : "fails", {}, cond.detail});
}

// Lie queries and certificates default to the first Lie object, product
// queries to the first associative one; --kind overrides.
const ObjectSpec& default_object(const AlgebraFile& f, const StructureRequest& req) {
  std::optional<ObjectKind> prefer;
  switch (req.what) {
    case StructureQuery::center:
    case StructureQuery::derived_series:
    case StructureQuery::lcs:
    case StructureQuery::transporter:
    case StructureQuery::certificate:
      prefer = ObjectKind::lie;
      break;
    case StructureQuery::annihilator:
    case StructureQuery::theorems:
      prefer = ObjectKind::associative;
      break;
    default:
      break;
  }
  if (req.kind) prefer = *req.kind == ClosureKind::lie_ideal ? ObjectKind::lie : ObjectKind::associative;
  if (f.objects.empty()) throw Error("'" + f.name + "' has no objects");
  if (prefer)
    for (const auto& o : f.objects)
      if (o.kind == *prefer) return o;
  return f.objects.front();
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& [k, name] : suite_names)
    if (k == s) return name;
  return "unknown";
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "lemma31") return Suite::leibniz;
  for (const auto& [k, n] : suite_names)
    if (n == name) return k;
  return std::nullopt;
}

std::string to_string(StructureQuery q) {
  for (const auto& [k, name] : query_names)
    if (k == q) return name;
  return "unknown";
}

std::optional<StructureQuery> parse_structure_query(const std::string& name) {
  if (name == "normalizer") return StructureQuery::transporter;
  for (const auto& [k, n] : query_names)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<CheckReport> run_suite(const AlgebraFile& f, Suite suite, const std::optional<std::string>& object) {
  std::vector<CheckReport> out;
  const auto objects = selected(f, object);
  if (suite == Suite::hopf || suite == Suite::all) out.push_back(hopf_report(f));
  for (Suite s : {Suite::module, Suite::module_algebra, Suite::bihom_assoc, Suite::bihom_lie, Suite::leibniz}) {
    if (suite != s && suite != Suite::all) continue;
    for (const ObjectSpec* o : objects) object_suites(f, s, *o, out);
  }
  return out;
}

AlgebraFile run_construction(const AlgebraFile& f, Construction what, const std::optional<std::string>& object) {
  AlgebraFile out = f;
  out.objects.clear();
  if (what == Construction::commutator) {
    const ObjectSpec& o = pick(f, object, ObjectKind::associative, false);
    ObjectSpec spec = lie_object(o.name + "-commutator", commutator_bracket(f.algebra(o.name), f.rmatrix));
    spec.reference_bracket = o.reference_bracket;
    out.description = "commutator bracket of '" + o.name + "' from " + f.name;
    out.objects.push_back(std::move(spec));
  } else {
    const ObjectSpec& o = pick(f, object, ObjectKind::lie, true);
    if (!o.twist) throw Error("object '" + o.name + "' has no twist maps");
    ObjectSpec spec = lie_object(o.name + "-twisted", twist_bracket(f.lie(o.name), o.twist->first, o.twist->second));
    out.description = "twist of '" + o.name + "' from " + f.name + " by its twist maps";
    out.objects.push_back(std::move(spec));
  }
  return out;
}

CheckReport run_structure(const AlgebraFile& f, const StructureRequest& req) {
  const ObjectSpec& o = req.object ? f.object(*req.object) : default_object(f, req);
  const bool assoc = o.kind == ObjectKind::associative;
  const auto& names = o.basis;
  const std::size_t n = o.dim();
  CheckReport r;
  r.suite = "structure/" + to_string(req.what);
  r.subject = o.name;
  const ClosureKind kind = req.kind.value_or(assoc ? ClosureKind::associative_ideal : ClosureKind::lie_ideal);
  auto lie_view = [&] { return assoc ? commutator_bracket(f.algebra(o.name), f.rmatrix) : f.lie(o.name); };
  auto require_assoc = [&] {
    if (!assoc) throw Error("structure " + to_string(req.what) + " needs an associative object");
  };

  switch (req.what) {
    case StructureQuery::center:
      r.findings.push_back({"center", format_subspace(center(lie_view()), names), {}, ""});
      break;
    case StructureQuery::derived_series: {
      BiHomLie l = lie_view();
      Subspace start = req.span ? argument(f, o, req) : Subspace::full(n);
      r.findings.push_back(series_finding("derived-series", derived_series(l, start, req.max_steps), names, "solvable"));
      break;
    }
    case StructureQuery::lcs: {
      BiHomLie l = lie_view();
      Subspace start = req.span ? argument(f, o, req) : Subspace::full(n);
      r.findings.push_back(
          series_finding("lower-central-series", lower_central_series(l, start, req.max_steps), names, "nilpotent"));
      break;
    }
    case StructureQuery::ideal_check: {
      Subspace u = argument(f, o, req);
      if (kind == ClosureKind::lie_ideal)
        ideal_findings(r, is_H_bihom_lie_ideal(lie_view(), u), "H-BiHom-Lie ideal");
      else if (kind == ClosureKind::associative_ideal) {
        require_assoc();
        ideal_findings(r, is_H_bihom_ideal(f.algebra(o.name), u), "H-BiHom-ideal, two-sided: AU ⊆ U and UA ⊆ U");
      } else {
        throw Error("ideal-check takes --kind lie-ideal or associative-ideal");
      }
      break;
    }
    case StructureQuery::closure: {
      Subspace seed = argument(f, o, req);
      Subspace c;
      if (kind == ClosureKind::lie_ideal) {
        c = ideal_closure(lie_view(), seed);
      } else {
        require_assoc();
        c = ideal_closure(f.algebra(o.name), seed, kind);
      }
      r.findings.push_back({"closure", format_subspace(c, names), {}, to_string(kind)});
      break;
    }
    case StructureQuery::certificate:
      if (assoc && kind != ClosureKind::lie_ideal)
        certificate_findings(r, simplicity_certificate(f.algebra(o.name), req.probe_seed, req.probes), names);
      else
        certificate_findings(r, simplicity_certificate(lie_view(), req.probe_seed, req.probes), names);
      break;
    case StructureQuery::transporter:
      r.findings.push_back(
          {"transporter", format_subspace(transporter(lie_view(), argument(f, o, req)), names), {}, "{x : [x, L] ⊆ U}"});
      break;
    case StructureQuery::annihilator:
      require_assoc();
      r.findings.push_back(
          {"annihilator", format_subspace(annihilator(f.algebra(o.name), argument(f, o, req)), names), {}, "{x : xI = Ix = 0}"});
      break;
    case StructureQuery::theorems: {
      require_assoc();
      CheckReport t = check_structure_theorems(f.algebra(o.name), f.rmatrix, req.probe_seed, req.probes);
      t.suite = r.suite;
      t.subject = r.subject;
      return t;
    }
  }
  return r;
}

}  // namespace bihom
