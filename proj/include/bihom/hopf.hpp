#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/report.hpp"
#include "bihom/tensor.hpp"

namespace bihom {

/// Finite-dimensional Hopf algebra given by structure constants.
///
/// mult(i, j, k) is the coefficient of e_k in e_i e_j, comult(i, j, k) the
/// coefficient of e_j ⊗ e_k in Δ(e_i). Elements of H^{⊗p} are vectors of
/// length dim^p with the first factor most significant.
struct HopfAlgebra {
  std::vector<std::string> basis;
  StructureTensor mult;
  Vector unit;
  StructureTensor comult;
  Vector counit;
  Matrix antipode;

  std::size_t dim() const { return basis.size(); }

  /// Throws DimensionMismatch when the tensors disagree with the basis.
  void validate_shape() const;

  Vector multiply(const Vector& a, const Vector& b) const { return mult.apply(a, b); }
  Vector coproduct(const Vector& a) const;
  Scalar counit_of(const Vector& a) const;
  /// Componentwise product in H^{⊗power}.
  Vector tensor_multiply(const Vector& x, const Vector& y, int power) const;
  /// 1 ⊗ ... ⊗ 1.
  Vector tensor_unit(int power) const;
};

/// R = Σ coefficients(i, j) e_i ⊗ e_j.
struct RMatrix {
  Matrix coefficients;

  /// R as a vector in H ⊗ H.
  Vector element() const;
  RMatrix flipped() const { return {coefficients.transpose()}; }
  static RMatrix trivial(const HopfAlgebra& h);
  static RMatrix from_element(const Vector& v, std::size_t dim);
};

CheckReport check_hopf_axioms(const HopfAlgebra& h);

/// ε is an algebra map and S an anti-algebra map, on every basis pair.
CheckReport check_hopf_consequences(const HopfAlgebra& h);

/// Group algebra of the group given by its Cayley table
/// (table[a][b] = index of a·b). Throws NotAGroup naming the violated cell.
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t identity,
                          std::vector<std::string> names = {});

/// Cyclic group Z_n with elements named e, g, g2, ..., g{n-1}.
HopfAlgebra cyclic_group_algebra(std::size_t n);

/// Two-sided inverse of R in H ⊗ H; throws NotInvertible.
RMatrix inverse(const HopfAlgebra& h, const RMatrix& r);

/// Entries qt1, qt2, qt3. Throws NotInvertible when R has no inverse.
CheckReport check_quasitriangular(const HopfAlgebra& h, const RMatrix& r);

/// (ε ⊗ id)(R) = 1 and (id ⊗ ε)(R) = 1; these follow from the
/// quasitriangular axioms and are checked as invariants.
CheckReport check_r_normalization(const HopfAlgebra& h, const RMatrix& r);

/// R⁻¹ equals the flip of R.
bool is_triangular(const HopfAlgebra& h, const RMatrix& r);

/// Δ equals its flip on every basis element.
bool is_cocommutative(const HopfAlgebra& h);

}  // namespace bihom
