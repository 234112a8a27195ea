#pragma once

#include "bihom/bihom.hpp"
#include "bihom/catalog.hpp"
#include "classical.hpp"

namespace bridge {

inline bihom::StructureTensor to_tensor(const classical::Table& t) {
  bihom::StructureTensor out(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) out(i, j, k) = bihom::Scalar(t.at(i, j, k));
  return out;
}

/// Associative algebra over the trivial Hopf algebra with R = 1⊗1 and
/// identity twisting maps.
inline bihom::BiHomAlgebra degenerate(const classical::Table& t) {
  static const auto hopf = std::make_shared<const bihom::HopfAlgebra>(bihom::group_algebra({{0}}, 0, {"e"}));
  const std::size_t n = static_cast<std::size_t>(t.n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  bihom::HModule m{hopf, names, {bihom::Matrix::identity(n)}};
  return bihom::BiHomAlgebra{m, to_tensor(t), bihom::Matrix::identity(n), bihom::Matrix::identity(n), std::nullopt, true};
}

inline bihom::RMatrix trivial_r() { return {bihom::Matrix::identity(1)}; }

}  // namespace bridge
