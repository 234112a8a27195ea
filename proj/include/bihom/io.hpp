#pragma once

#include <string>
#include <vector>

#include "bihom/model.hpp"

namespace bihom {

inline constexpr const char* algebra_format = "bihom-algebra/1";

/// A located problem in an input text. Line and column are 1-based; zero
/// means the position is unknown.
struct Diagnostic {
  std::string path;
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  /// "3:7: /objects/0/beta: beta required"
  std::string str() const;
};

/// Invalid input: carries every diagnostic found.
class InputError : public Error {
 public:
  explicit InputError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// The text is not well-formed JSON.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed JSON that does not describe a valid algebra file.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Parses and validates a whole file; never returns a partial model.
AlgebraFile parse_algebra_file(const std::string& text);

/// Canonical text: parse_algebra_file(print_algebra_file(f)) prints back
/// byte-identically.
std::string print_algebra_file(const AlgebraFile& f);

/// Reads a file from disk; a missing file is an InputError.
std::string read_text_file(const std::string& path);

/// Vectors written as linear expressions in the basis names, separated by
/// ';', e.g. "x1 + 2*x3; b*x2". Other identifiers must be parameters.
std::vector<Vector> parse_vectors(const std::string& text, const std::vector<std::string>& basis,
                                  const std::vector<std::string>& parameters);

/// NAME=RATIONAL.
std::pair<std::string, Rational> parse_binding(const std::string& text);

}  // namespace bihom
