#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/model.hpp"
#include "bihom/structure.hpp"

namespace bihom {

enum class Suite { hopf, module, module_algebra, bihom_assoc, bihom_lie, leibniz, all };

std::string to_string(Suite s);
/// Accepts "lemma31" for the Leibniz suite.
std::optional<Suite> parse_suite(const std::string& name);

/// One report per suite and object, in file order. A refused construction
/// yields a report whose `refusal` is set and whose entries are empty.
/// `object` restricts the object suites to one object.
std::vector<CheckReport> run_suite(const AlgebraFile& f, Suite suite, const std::optional<std::string>& object = {});

enum class Construction { commutator, twist };

/// A file with the same header holding the one constructed Lie object:
/// "<name>-commutator" for an associative object, "<name>-twisted" for a
/// Lie object with twist maps. The default object is the first one that
/// fits. Throws PreconditionFailed subclasses from the construction.
AlgebraFile run_construction(const AlgebraFile& f, Construction what, const std::optional<std::string>& object = {});

enum class StructureQuery {
  center,
  derived_series,
  lcs,
  ideal_check,
  closure,
  certificate,
  transporter,
  annihilator,
  theorems
};

std::string to_string(StructureQuery q);
/// Accepts "normalizer" for the transporter.
std::optional<StructureQuery> parse_structure_query(const std::string& name);

struct StructureRequest {
  StructureQuery what = StructureQuery::center;
  std::optional<std::string> object;
  /// Vectors as in parse_vectors; the subspace argument of the query.
  std::optional<std::string> span;
  std::optional<ClosureKind> kind;
  std::size_t max_steps = default_max_steps;
  std::uint64_t probe_seed = default_probe_seed;
  std::size_t probes = default_probe_count;
};

/// Lie queries on an associative object use its commutator bracket.
CheckReport run_structure(const AlgebraFile& f, const StructureRequest& request);

}  // namespace bihom
