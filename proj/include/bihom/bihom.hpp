#pragma once

#include <optional>
#include <string>

#include "bihom/hmod.hpp"

namespace bihom {

/// BiHom-associative algebra in the module category: α(a)(bc) = (ab)β(c)
/// with commuting module endomorphisms α, β.
struct BiHomAlgebra {
  HModule module;
  StructureTensor mult;
  Matrix alpha;
  Matrix beta;
  /// 1_A with 1_A·a = β(a) and a·1_A = α(a), when present.
  std::optional<Vector> unit;
  /// α and β are additionally checked to be multiplicative.
  bool multiplicative = true;

  std::size_t dim() const { return module.dim(); }
  Vector multiply(const Vector& a, const Vector& b) const { return mult.apply(a, b); }
  void validate_shape() const;
};

/// Generalized BiHom-Lie algebra: bracket plus twisting maps in the
/// braided category of H-modules.
struct BiHomLie {
  HModule module;
  StructureTensor bracket;
  Matrix alpha;
  Matrix beta;
  RMatrix rmatrix;

  std::size_t dim() const { return module.dim(); }
  Vector bracket_of(const Vector& a, const Vector& b) const { return bracket.apply(a, b); }
  void validate_shape() const;
};

CheckReport check_bihom_associative(const BiHomAlgebra& a);

/// Commuting maps, multiplicativity, braided skew-symmetry and the braided
/// BiHom-Jacobi identity over every basis tuple, plus H-linearity of the
/// bracket and of both maps.
CheckReport check_generalized_bihom_lie(const BiHomLie& l);

/// Hom-case suite for α = β: [x,y] = -[R²·y, R¹·x] and the braided cyclic
/// sum of [α(x),[y,z]] vanishes. Throws PreconditionFailed when α ≠ β.
CheckReport check_generalized_hom_lie(const BiHomLie& l);

/// [a,b] = ab - (R²·α⁻¹β(b))(R¹·αβ⁻¹(a)).
/// Throws NotTriangular, NotBijective, or PreconditionFailed when the input
/// is not a BiHom-associative module algebra.
BiHomLie commutator_bracket(const BiHomAlgebra& a, const RMatrix& r);

/// [a,b]' = [α(a), β(b)] on a generalized Lie algebra (identity twisting
/// maps). Throws NotEndomorphism when α or β is not a bracket
/// endomorphism in the module category, and PreconditionFailed when the
/// input maps are not the identity or α, β do not commute.
BiHomLie twist_bracket(const BiHomLie& l, const Matrix& alpha, const Matrix& beta);

/// The two product rules of the commutator bracket, over every basis
/// triple:
///   [αβ(a), bc] = [β(a),b]β(c) + (R²·β(b))[R¹·α(a), c]
///   [ab, αβ(c)] = α(a)[b,α(c)] + [a, R²·β(c)](R¹·α(b))
CheckReport check_leibniz_identities(const BiHomAlgebra& a, const RMatrix& r);

/// Entrywise comparison of a bracket against a reference table.
Informational diff_bracket_table(const BiHomLie& l, const StructureTensor& reference, const std::string& id);

}  // namespace bihom
