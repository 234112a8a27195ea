#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bihom/hopf.hpp"

namespace bihom {

/// Left H-module: action[i] is the operator of the Hopf basis element e_i
/// (column j = e_i · x_j).
struct HModule {
  std::shared_ptr<const HopfAlgebra> hopf;
  std::vector<std::string> basis;
  std::vector<Matrix> action;

  std::size_t dim() const { return basis.size(); }
  void validate_shape() const;
  /// Operator of an arbitrary element of H.
  Matrix action_of(const Vector& h) const;
  /// Trivial module: every e_i acts as ε(e_i)·id.
  static HModule trivial(std::shared_ptr<const HopfAlgebra> hopf, std::vector<std::string> basis);
};

/// Unit acts as identity; e_i e_j acts as action[i] action[j].
CheckReport check_module(const HModule& m);

/// M ⊗ N with h acting through Δ(h); basis "m⊗n" with m most significant.
HModule tensor_module(const HModule& m, const HModule& n);

/// Flip M ⊗ N -> N ⊗ M without R.
Matrix flip_matrix(std::size_t dim_m, std::size_t dim_n);

/// τ(m ⊗ n) = Σ R²·n ⊗ R¹·m as a (dim N · dim M) × (dim M · dim N) matrix.
Matrix braiding(const HModule& m, const HModule& n, const RMatrix& r);

/// τ_{M,M} ∘ τ_{M,M} = id.
bool check_braiding_symmetry(const HModule& m, const RMatrix& r);

/// f ∘ action_src(e_i) = action_dst(e_i) ∘ f for every Hopf basis element.
ReportEntry check_module_map(const Matrix& f, const HModule& src, const HModule& dst, const std::string& id,
                             const std::string& citation);
bool is_module_map(const Matrix& f, const HModule& src, const HModule& dst);

/// h·(ab) = (h₁·a)(h₂·b) for every Hopf basis element and basis pair: the
/// bilinear map is a morphism in the module category.
ReportEntry check_h_linear_product(const HModule& m, const StructureTensor& product, const std::string& id,
                                   const std::string& citation);

/// Module-algebra law for a multiplication tensor.
CheckReport check_module_algebra(const HModule& m, const StructureTensor& mult);

/// (R²·b)(R¹·a) = ab on all basis pairs.
bool is_H_commutative(const HModule& m, const StructureTensor& mult, const RMatrix& r);

}  // namespace bihom
