#include "json_text.hpp"

#include <set>
#include <string_view>

namespace bihom::detail {

namespace {

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::strict); }

void write(std::string& out, const Json& j, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + dump(Json(key)) + ": ";
      write(out, value, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && is_scalar(e);
    if (flat) {
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ", ";
        first = false;
        out += dump(e);
      }
      out += "]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      write(out, e, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else {
    out += dump(j);
  }
}

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  Locations run() {
    skip_ws();
    value("");
    return std::move(locations_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      advance();
  }

  void advance() {
    const unsigned char c = static_cast<unsigned char>(text_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  std::string string_literal() {
    const std::size_t start = pos_;
    advance();
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') advance();
      advance();
    }
    advance();
    return Json::parse(text_.substr(start, pos_ - start)).get<std::string>();
  }

  void value(const std::string& pointer) {
    locations_.values[pointer] = {line_, column_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') {
      advance();
      skip_ws();
      std::set<std::string> seen;
      while (pos_ < text_.size() && text_[pos_] != '}') {
        std::string key = string_literal();
        const std::string child = pointer + "/" + pointer_token(key);
        if (!seen.insert(key).second) locations_.duplicate_keys.push_back(child);
        skip_ws();
        advance();  // ':'
        skip_ws();
        value(child);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '[') {
      advance();
      skip_ws();
      std::size_t i = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(pointer + "/" + std::to_string(i++));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          advance();
          skip_ws();
        }
      }
      advance();
    } else if (c == '"') {
      string_literal();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos)
        advance();
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Locations locations_;
};

}  // namespace

std::string pretty(const Json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

Position Locations::at(const std::string& pointer) const {
  std::string p = pointer;
  for (;;) {
    auto it = values.find(p);
    if (it != values.end()) return it->second;
    if (p.empty()) return {};
    p.erase(p.rfind('/'));
  }
}

Locations locate(const std::string& text) { return Scanner(text).run(); }

Position position_of(const std::string& text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++p.column;
    }
  }
  return p;
}

std::string pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

}  // namespace bihom::detail
