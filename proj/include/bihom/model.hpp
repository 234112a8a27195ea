#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/bihom.hpp"

namespace bihom {

/// Cayley table of a finite group with named elements.
struct GroupTable {
  std::vector<std::string> elements;
  std::size_t identity = 0;
  std::vector<std::vector<std::size_t>> table;
};

enum class ObjectKind { associative, lie };

std::string to_string(ObjectKind k);

/// One algebra object of a file: a module with a product (associative
/// kind) or a bracket (Lie kind) and its twisting maps.
struct ObjectSpec {
  std::string name;
  ObjectKind kind = ObjectKind::associative;
  std::vector<std::string> basis;
  /// One matrix per Hopf basis element.
  std::vector<Matrix> action;
  StructureTensor table;
  Matrix alpha;
  Matrix beta;
  std::optional<Vector> unit;
  bool multiplicative = true;
  /// Maps for the twist construction.
  std::optional<std::pair<Matrix, Matrix>> twist;
  /// A bracket table to compare the computed commutator bracket against.
  std::optional<StructureTensor> reference_bracket;

  std::size_t dim() const { return basis.size(); }
};

/// In-memory form of an algebra file: parameters, Hopf data, R-matrix and
/// named objects over that Hopf algebra.
struct AlgebraFile {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;
  /// Set when the Hopf algebra is a group algebra; otherwise the raw
  /// tensors in `hopf` are the source.
  std::optional<GroupTable> group;
  std::shared_ptr<const HopfAlgebra> hopf;
  RMatrix rmatrix;
  std::vector<ObjectSpec> objects;

  /// Throws Error when no object has that name.
  const ObjectSpec& object(const std::string& name) const;
  HModule module(const ObjectSpec& o) const;
  /// Throws Error when the object is not of the requested kind.
  BiHomAlgebra algebra(const std::string& name) const;
  BiHomLie lie(const std::string& name) const;

  /// Binds parameters everywhere; bound names leave the parameter list.
  AlgebraFile substituted(const Bindings& bindings) const;
};

Matrix substitute(const Matrix& m, const Bindings& bindings);
Vector substitute(const Vector& v, const Bindings& bindings);
StructureTensor substitute(const StructureTensor& t, const Bindings& bindings);

/// The object holding a bracket, as an object spec of Lie kind.
ObjectSpec lie_object(const std::string& name, const BiHomLie& l);

}  // namespace bihom
