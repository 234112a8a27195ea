#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bihom.hpp"

namespace bihom {

/// span{[u, v]} over the basis vectors of u and v.
Subspace bracket_of_subspaces(const BiHomLie& l, const Subspace& u, const Subspace& v);
/// span{uv} over the basis vectors of u and v.
Subspace product_of_subspaces(const BiHomAlgebra& a, const Subspace& u, const Subspace& v);

struct ConditionResult {
  std::string condition;
  bool holds = true;
  /// First image that leaves the subspace, with a readable description.
  std::optional<Vector> witness;
  std::string detail;
};

struct IdealCheck {
  bool holds = true;
  std::vector<ConditionResult> conditions;

  const ConditionResult* first_failure() const;
};

/// α(U) ⊆ U, β(U) ⊆ U, H·U ⊆ U and [U,L] ⊆ U.
IdealCheck is_H_bihom_lie_ideal(const BiHomLie& l, const Subspace& u);

/// α(U) ⊆ U, β(U) ⊆ U, H·U ⊆ U and the two-sided form AU ⊆ U, UA ⊆ U.
IdealCheck is_H_bihom_ideal(const BiHomAlgebra& a, const Subspace& u);

/// α, β and H-stability only.
IdealCheck check_stability(const HModule& m, const Matrix& alpha, const Matrix& beta, const Subspace& u);

/// {l : [l, L] = 0}.
Subspace center(const BiHomLie& l);

/// {x : [x, L] ⊆ U}.
Subspace transporter(const BiHomLie& l, const Subspace& u);

/// {x : xI = Ix = 0} for the product of an associative object.
Subspace annihilator(const BiHomAlgebra& a, const Subspace& i);

enum class ClosureKind { lie_ideal, associative_ideal, associative_subalgebra };

std::string to_string(ClosureKind k);

/// Least subspace containing seed that is stable under α, β, the H-action
/// and [·, W], where W is `within` (default: all of L).
Subspace ideal_closure(const BiHomLie& l, const Subspace& seed, const std::optional<Subspace>& within = std::nullopt);

/// Least subspace containing seed that is stable under α, β, the H-action
/// and two-sided multiplication by A (associative_ideal) or products of its
/// own elements (associative_subalgebra). Throws Error for lie_ideal.
Subspace ideal_closure(const BiHomAlgebra& a, const Subspace& seed, ClosureKind kind);

struct SeriesResult {
  enum class Verdict { zero, stabilized, capped };
  /// Distinct terms, starting with the first one.
  std::vector<Subspace> terms;
  Verdict verdict = Verdict::capped;
  /// Index of the term that vanished or repeated, or the cap.
  std::size_t step = 0;
};

std::string to_string(SeriesResult::Verdict v);

constexpr std::size_t default_max_steps = 16;

/// L, [L,L], [L⁽¹⁾,L⁽¹⁾], ... starting from `start`. Throws Error when
/// max_steps is zero.
SeriesResult derived_series(const BiHomLie& l, const Subspace& start, std::size_t max_steps = default_max_steps);
SeriesResult derived_series(const BiHomLie& l, std::size_t max_steps = default_max_steps);

/// V₁ = start, Vₖ₊₁ = [Vₖ, start].
SeriesResult lower_central_series(const BiHomLie& l, const Subspace& start,
                                  std::size_t max_steps = default_max_steps);

/// Powers I, I·I, (I·I)·I, ... of a subspace under the associative product.
SeriesResult power_series(const BiHomAlgebra& a, const Subspace& start, std::size_t max_steps = default_max_steps);

constexpr std::uint64_t default_probe_seed = 20240917;
constexpr std::size_t default_probe_count = 4;

/// Basis vectors followed by `count` pseudo-random nonzero vectors with
/// entries in [-3, 3] drawn from mt19937_64(seed).
std::vector<Vector> probe_vectors(std::size_t n, std::uint64_t seed, std::size_t count);

/// Semi-decision for simple, semiprime and prime. A found ideal refutes
/// simplicity; finding none proves nothing.
struct StructureCertificate {
  /// Distinct proper nonzero ideals generated by the probes, smallest first.
  std::vector<Subspace> ideals;
  /// A nonzero ideal whose powers (or lower central series) reach zero.
  std::optional<Subspace> nilpotent_ideal;
  /// Two nonzero ideals with zero product.
  std::optional<std::pair<Subspace, Subspace>> zero_product;
  std::uint64_t probe_seed = default_probe_seed;
  std::size_t probes = 0;

  bool nonsimple() const { return !ideals.empty(); }
  bool nonsemiprime() const { return nilpotent_ideal.has_value(); }
  bool nonprime() const { return zero_product.has_value(); }
  /// The smallest proper nonzero ideal found, if any.
  std::optional<Subspace> ideal() const;
};

/// Ideals of the bracket: closures under the Lie ideal conditions.
StructureCertificate simplicity_certificate(const BiHomLie& l, std::uint64_t seed = default_probe_seed,
                                            std::size_t count = default_probe_count);
/// Ideals of the product: two-sided associative ideal closures.
StructureCertificate simplicity_certificate(const BiHomAlgebra& a, std::uint64_t seed = default_probe_seed,
                                            std::size_t count = default_probe_count);

/// Conclusions of the structure theorems on one unital BiHom-associative
/// algebra with its commutator bracket, over probe-generated candidates:
///  - bracket-of-ideal-in-lie-ideal/prime and .../simple: every
///    H-BiHom-Lie ideal U with [U,U] ≠ 0 contains [I,L] ≠ 0 for some
///    H-BiHom-ideal I, checked when primeness (resp. simplicity) is not
///    refuted by the certificate;
///  - solvable-subideals: every proper H-BiHom-Lie ideal V of [L,L] has
///    V⁽³⁾ = 0 and [V,V] nilpotent, checked when simplicity is not refuted.
/// Entries are skipped when the hypotheses are refuted or do not apply.
CheckReport check_structure_theorems(const BiHomAlgebra& a, const RMatrix& r, std::uint64_t seed = default_probe_seed,
                                     std::size_t count = default_probe_count);

}  // namespace bihom
