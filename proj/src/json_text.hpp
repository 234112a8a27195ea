#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bihom::detail {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON with arrays of scalars kept on one line.
std::string pretty(const Json& j);

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Positions of every value in a well-formed JSON text, keyed by JSON
/// pointer, plus the pointers of keys that occur twice in one object.
struct Locations {
  std::map<std::string, Position> values;
  std::vector<std::string> duplicate_keys;

  Position at(const std::string& pointer) const;
};

Locations locate(const std::string& text);

/// Line and column of a byte offset (0-based) in text.
Position position_of(const std::string& text, std::size_t offset);

std::string pointer_token(const std::string& key);

}  // namespace bihom::detail
