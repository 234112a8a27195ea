#pragma once

#include <cstddef>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

/// Rank-3 structure-constant tensor T over an n-dimensional space:
/// T(i, j, k) is the coefficient of basis k in the image of (e_i, e_j).
/// Used for products, brackets and coproducts alike.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

  /// Image of the basis pair (e_i, e_j).
  Vector on_basis(std::size_t i, std::size_t j) const;
  /// Bilinear extension.
  Vector apply(const Vector& a, const Vector& b) const;
  /// Coordinates as a vector over the tensor-square basis (j, k) for
  /// fixed first slot i; used to read a coproduct Δ(e_i).
  Vector slice(std::size_t i) const;

  bool operator==(const StructureTensor&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace bihom
