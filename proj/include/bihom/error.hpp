#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class UnboundParameter : public Error {
 public:
  explicit UnboundParameter(const std::string& name)
      : Error("unbound parameter '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DenominatorVanishes : public Error {
 public:
  explicit DenominatorVanishes(const std::string& what)
      : Error("denominator vanishes under substitution: " + what) {}
};

class ScalarSyntaxError : public Error {
 public:
  ScalarSyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Linear algebra.
class Singular : public Error {
 public:
  using Error::Error;
  Singular() : Error("matrix is singular") {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch(std::size_t a, std::size_t b)
      : Error("ambient dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Algebraic preconditions. Everything below maps to the CLI's "refused"
// exit status.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotInvertible : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotBijective : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotTriangular : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotEndomorphism : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

}  // namespace bihom
