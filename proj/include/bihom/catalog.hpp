#pragma once

#include <string>
#include <vector>

#include "bihom/model.hpp"

namespace bihom {

struct CatalogInfo {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
};

/// Built-in entries in listing order.
const std::vector<CatalogInfo>& catalog();

/// Entry by name or alias; throws Error for unknown names.
AlgebraFile catalog_entry(const std::string& name);

/// Primary name for a name or alias, or empty when unknown.
std::string catalog_canonical_name(const std::string& name);

/// kZ₂ with R = ½(e⊗e + e⊗g + g⊗e − g⊗g).
RMatrix z2_super_rmatrix();

}  // namespace bihom
