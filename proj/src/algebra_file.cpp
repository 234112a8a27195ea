#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "bihom/io.hpp"
#include "json_text.hpp"

namespace bihom {

using detail::Json;

std::string Diagnostic::str() const {
  std::string out;
  if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
  if (!path.empty()) out += path + ": ";
  return out + message;
}

namespace {

std::string joined(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += d.str();
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string show(const Json& j) { return j.dump(); }

// Collects diagnostics while reading a parsed document. Every reader
// returns nullopt after reporting, so later checks can go on.
class Reader {
 public:
  explicit Reader(const detail::Locations& loc) : loc_(loc) {}

  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> parameters;

  void error(const std::string& path, const std::string& message) {
    detail::Position p = loc_.at(path);
    diagnostics.push_back({path.empty() ? "/" : path, p.line, p.column, message});
  }

  bool keys(const Json& j, const std::string& path, const std::vector<std::string>& required,
            const std::vector<std::string>& optional) {
    if (!j.is_object()) {
      error(path, "expected an object");
      return false;
    }
    bool ok = true;
    for (const auto& k : required)
      if (!j.contains(k)) {
        error(path, k + " required");
        ok = false;
      }
    for (const auto& [k, v] : j.items())
      if (std::find(required.begin(), required.end(), k) == required.end() &&
          std::find(optional.begin(), optional.end(), k) == optional.end()) {
        error(path + "/" + detail::pointer_token(k), "unknown key '" + k + "'");
        ok = false;
      }
    return ok;
  }

  std::optional<std::string> text(const Json& j, const std::string& path) {
    if (!j.is_string()) {
      error(path, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::optional<std::vector<std::string>> names(const Json& j, const std::string& path, bool identifiers) {
    if (!j.is_array()) {
      error(path, "expected an array of names");
      return std::nullopt;
    }
    std::vector<std::string> out;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      auto s = text(j[i], p);
      if (!s) {
        ok = false;
        continue;
      }
      if (identifiers && !is_identifier(*s)) {
        error(p, "'" + *s + "' is not an identifier");
        ok = false;
      } else if (s->empty()) {
        error(p, "empty name");
        ok = false;
      } else if (std::find(out.begin(), out.end(), *s) != out.end()) {
        error(p, "duplicate name '" + *s + "'");
        ok = false;
      }
      out.push_back(*s);
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<Scalar> scalar(const Json& j, const std::string& path) {
    std::string t;
    if (j.is_string())
      t = j.get<std::string>();
    else if (j.is_number_integer())
      t = j.dump();
    else {
      error(path, "expected a scalar string, got " + show(j));
      return std::nullopt;
    }
    try {
      Scalar s = Scalar::parse(t);
      for (const auto& p : s.parameters())
        if (std::find(parameters.begin(), parameters.end(), p) == parameters.end()) {
          error(path, "undeclared parameter '" + p + "' in \"" + t + "\"");
          return std::nullopt;
        }
      return s;
    } catch (const Error& e) {
      error(path, "invalid scalar \"" + t + "\": " + e.what());
      return std::nullopt;
    }
  }

  std::optional<Vector> vector(const Json& j, const std::string& path, std::size_t n) {
    if (!j.is_array()) {
      error(path, "expected an array of " + std::to_string(n) + " scalars");
      return std::nullopt;
    }
    if (j.size() != n) {
      error(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
      return std::nullopt;
    }
    Vector v(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto s = scalar(j[i], path + "/" + std::to_string(i));
      if (s)
        v[i] = *s;
      else
        ok = false;
    }
    if (!ok) return std::nullopt;
    return v;
  }

  std::optional<Matrix> matrix(const Json& j, const std::string& path, std::size_t n) {
    if (!j.is_array()) {
      error(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix as an array of rows");
      return std::nullopt;
    }
    if (j.size() != n) {
      error(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
      return std::nullopt;
    }
    std::vector<Vector> rows;
    bool ok = true;
    for (std::size_t r = 0; r < n; ++r) {
      auto row = vector(j[r], path + "/" + std::to_string(r), n);
      if (row)
        rows.push_back(*row);
      else
        ok = false;
    }
    if (!ok) return std::nullopt;
    return Matrix::from_rows(rows, n);
  }

  std::optional<std::size_t> index(const Json& j, const std::string& path, const std::vector<std::string>& basis,
                                   const std::string& triple) {
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      auto it = std::find(basis.begin(), basis.end(), s);
      if (it == basis.end()) {
        error(path, "triple " + triple + ": '" + s + "' is not a basis element");
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - basis.begin());
    }
    if (j.is_number_integer()) {
      const auto i = j.get<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= basis.size()) {
        error(path, "triple " + triple + ": index " + std::to_string(i) + " out of range for dimension " +
                        std::to_string(basis.size()));
        return std::nullopt;
      }
      return static_cast<std::size_t>(i);
    }
    error(path, "triple " + triple + ": expected a basis name or index");
    return std::nullopt;
  }

  // Sparse [i, j, k, "scalar"] entries; i, j, k index `basis` and the
  // tensor has dimension basis.size() in every slot.
  std::optional<StructureTensor> triples(const Json& j, const std::string& path, const std::vector<std::string>& basis) {
    if (!j.is_array()) {
      error(path, "expected an array of [i, j, k, scalar] triples");
      return std::nullopt;
    }
    StructureTensor t(basis.size());
    std::set<std::array<std::size_t, 3>> seen;
    bool ok = true;
    for (std::size_t e = 0; e < j.size(); ++e) {
      const std::string p = path + "/" + std::to_string(e);
      const Json& item = j[e];
      if (!item.is_array() || item.size() != 4) {
        error(p, "triple " + show(item) + ": expected [i, j, k, scalar]");
        ok = false;
        continue;
      }
      const std::string label = show(item);
      auto a = index(item[0], p + "/0", basis, label);
      auto b = index(item[1], p + "/1", basis, label);
      auto c = index(item[2], p + "/2", basis, label);
      auto s = scalar(item[3], p + "/3");
      if (!a || !b || !c || !s) {
        ok = false;
        continue;
      }
      if (!seen.insert({*a, *b, *c}).second) {
        error(p, "triple " + label + " repeats entry (" + basis[*a] + ", " + basis[*b] + ", " + basis[*c] + ")");
        ok = false;
        continue;
      }
      t(*a, *b, *c) = *s;
    }
    if (!ok) return std::nullopt;
    return t;
  }

 private:
  const detail::Locations& loc_;
};

struct HopfRead {
  std::optional<GroupTable> group;
  std::shared_ptr<const HopfAlgebra> hopf;
};

std::optional<std::size_t> element(Reader& rd, const Json& j, const std::string& path,
                                   const std::vector<std::string>& elements) {
  if (j.is_string()) {
    auto it = std::find(elements.begin(), elements.end(), j.get<std::string>());
    if (it != elements.end()) return static_cast<std::size_t>(it - elements.begin());
    rd.error(path, "'" + j.get<std::string>() + "' is not a group element");
    return std::nullopt;
  }
  if (j.is_number_integer() && j.get<long long>() >= 0 && static_cast<std::size_t>(j.get<long long>()) < elements.size())
    return static_cast<std::size_t>(j.get<long long>());
  rd.error(path, "expected a group element, got " + show(j));
  return std::nullopt;
}

std::optional<HopfRead> read_group(Reader& rd, const Json& j, const std::string& path) {
  if (!rd.keys(j, path, {"elements", "identity", "table"}, {})) return std::nullopt;
  auto elements = rd.names(j["elements"], path + "/elements", false);
  if (!elements) return std::nullopt;
  if (elements->empty()) {
    rd.error(path + "/elements", "a group needs at least one element");
    return std::nullopt;
  }
  const std::size_t n = elements->size();
  auto identity = element(rd, j["identity"], path + "/identity", *elements);
  const Json& tj = j["table"];
  const std::string tp = path + "/table";
  if (!tj.is_array() || tj.size() != n) {
    rd.error(tp, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " table of element names");
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  bool ok = identity.has_value();
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = tp + "/" + std::to_string(a);
    if (!tj[a].is_array() || tj[a].size() != n) {
      rd.error(rp, "expected a row of " + std::to_string(n) + " element names");
      ok = false;
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      auto c = element(rd, tj[a][b], rp + "/" + std::to_string(b), *elements);
      if (c)
        table[a][b] = *c;
      else
        ok = false;
    }
  }
  if (!ok) return std::nullopt;
  try {
    HopfRead out;
    out.hopf = std::make_shared<const HopfAlgebra>(group_algebra(table, *identity, *elements));
    out.group = GroupTable{*elements, *identity, table};
    return out;
  } catch (const NotAGroup& e) {
    rd.error(tp, e.what());
    return std::nullopt;
  }
}

std::optional<HopfRead> read_raw(Reader& rd, const Json& j, const std::string& path) {
  if (!rd.keys(j, path, {"basis", "mult", "unit", "comult", "counit", "antipode"}, {})) return std::nullopt;
  auto basis = rd.names(j["basis"], path + "/basis", false);
  if (!basis) return std::nullopt;
  if (basis->empty()) {
    rd.error(path + "/basis", "a Hopf algebra needs at least one basis element");
    return std::nullopt;
  }
  const std::size_t n = basis->size();
  auto mult = rd.triples(j["mult"], path + "/mult", *basis);
  auto unit = rd.vector(j["unit"], path + "/unit", n);
  auto comult = rd.triples(j["comult"], path + "/comult", *basis);
  auto counit = rd.vector(j["counit"], path + "/counit", n);
  auto antipode = rd.matrix(j["antipode"], path + "/antipode", n);
  if (!mult || !unit || !comult || !counit || !antipode) return std::nullopt;
  HopfRead out;
  out.hopf = std::make_shared<const HopfAlgebra>(HopfAlgebra{*basis, *mult, *unit, *comult, *counit, *antipode});
  return out;
}

std::optional<HopfRead> read_hopf(Reader& rd, const Json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1 || !(j.contains("group") || j.contains("raw"))) {
    rd.error(path, "expected {\"group\": ...} or {\"raw\": ...}");
    return std::nullopt;
  }
  if (j.contains("group")) return read_group(rd, j["group"], path + "/group");
  return read_raw(rd, j["raw"], path + "/raw");
}

std::optional<ObjectSpec> read_object(Reader& rd, const Json& j, const std::string& path, const HopfAlgebra* h) {
  if (!j.is_object()) {
    rd.error(path, "expected an object");
    return std::nullopt;
  }
  ObjectSpec o;
  bool ok = true;
  std::string table_key = "mult";
  if (j.contains("kind")) {
    auto k = rd.text(j["kind"], path + "/kind");
    if (k && *k == "lie") {
      o.kind = ObjectKind::lie;
      table_key = "bracket";
    } else if (k && *k != "associative") {
      rd.error(path + "/kind", "kind must be \"associative\" or \"lie\"");
      ok = false;
    }
  }
  if (!rd.keys(j, path, {"name", "kind", "basis", "action", table_key, "alpha", "beta"},
               {"dim", "unit", "multiplicative", "twist", "reference_bracket"}))
    ok = false;
  if (j.contains("name")) {
    auto name = rd.text(j["name"], path + "/name");
    if (name) o.name = *name;
  }
  if (!j.contains("basis")) return std::nullopt;
  auto basis = rd.names(j["basis"], path + "/basis", true);
  if (!basis) return std::nullopt;
  for (std::size_t i = 0; i < basis->size(); ++i)
    if (std::find(rd.parameters.begin(), rd.parameters.end(), (*basis)[i]) != rd.parameters.end()) {
      rd.error(path + "/basis/" + std::to_string(i), "basis name '" + (*basis)[i] + "' is also a parameter");
      ok = false;
    }
  o.basis = *basis;
  const std::size_t n = o.basis.size();
  if (n == 0) {
    rd.error(path + "/basis", "an object needs at least one basis element");
    return std::nullopt;
  }
  if (j.contains("dim")) {
    const Json& d = j["dim"];
    if (!d.is_number_unsigned() || d.get<std::size_t>() != n) {
      rd.error(path + "/dim", "dim " + show(d) + " disagrees with the " + std::to_string(n) + " basis names");
      ok = false;
    }
  }
  if (j.contains("action") && h) {
    const Json& a = j["action"];
    const std::string ap = path + "/action";
    if (!a.is_object()) {
      rd.error(ap, "expected an object keyed by Hopf basis names");
      ok = false;
    } else {
      for (const auto& [k, v] : a.items())
        if (std::find(h->basis.begin(), h->basis.end(), k) == h->basis.end()) {
          rd.error(ap + "/" + detail::pointer_token(k), "'" + k + "' is not a Hopf basis element");
          ok = false;
        }
      for (const auto& e : h->basis) {
        if (!a.contains(e)) {
          rd.error(ap, "action of '" + e + "' required");
          ok = false;
          continue;
        }
        auto m = rd.matrix(a[e], ap + "/" + detail::pointer_token(e), n);
        if (m)
          o.action.push_back(*m);
        else
          ok = false;
      }
    }
  }
  if (j.contains(table_key)) {
    auto t = rd.triples(j[table_key], path + "/" + table_key, o.basis);
    if (t)
      o.table = *t;
    else
      ok = false;
  }
  for (const char* key : {"alpha", "beta"}) {
    if (!j.contains(key)) continue;
    auto m = rd.matrix(j[key], path + "/" + key, n);
    if (!m)
      ok = false;
    else if (std::string(key) == "alpha")
      o.alpha = *m;
    else
      o.beta = *m;
  }
  if (j.contains("unit")) {
    auto u = rd.vector(j["unit"], path + "/unit", n);
    if (u)
      o.unit = *u;
    else
      ok = false;
  }
  if (j.contains("multiplicative")) {
    if (j["multiplicative"].is_boolean())
      o.multiplicative = j["multiplicative"].get<bool>();
    else {
      rd.error(path + "/multiplicative", "expected true or false");
      ok = false;
    }
  }
  if (j.contains("twist")) {
    const std::string tp = path + "/twist";
    if (rd.keys(j["twist"], tp, {"alpha", "beta"}, {})) {
      auto a = rd.matrix(j["twist"]["alpha"], tp + "/alpha", n);
      auto b = rd.matrix(j["twist"]["beta"], tp + "/beta", n);
      if (a && b)
        o.twist = std::pair{*a, *b};
      else
        ok = false;
    } else {
      ok = false;
    }
  }
  if (j.contains("reference_bracket")) {
    auto t = rd.triples(j["reference_bracket"], path + "/reference_bracket", o.basis);
    if (t)
      o.reference_bracket = *t;
    else
      ok = false;
  }
  if (!ok || !h) return std::nullopt;
  return o;
}

AlgebraFile read_file(Reader& rd, const Json& j) {
  AlgebraFile f;
  rd.keys(j, "", {"format", "name", "hopf", "rmatrix", "objects"}, {"description", "parameters"});
  if (!j.is_object()) throw ValidationError(rd.diagnostics);
  if (j.contains("format")) {
    auto fmt = rd.text(j["format"], "/format");
    if (fmt && *fmt != algebra_format) rd.error("/format", "unsupported format \"" + *fmt + "\", expected \"" + algebra_format + "\"");
  }
  if (j.contains("name")) {
    auto name = rd.text(j["name"], "/name");
    if (name) f.name = *name;
  }
  if (j.contains("description")) {
    auto d = rd.text(j["description"], "/description");
    if (d) f.description = *d;
  }
  if (j.contains("parameters")) {
    auto p = rd.names(j["parameters"], "/parameters", true);
    if (p) f.parameters = *p;
  }
  rd.parameters = f.parameters;
  std::optional<HopfRead> hopf;
  if (j.contains("hopf")) hopf = read_hopf(rd, j["hopf"], "/hopf");
  if (hopf) {
    f.group = hopf->group;
    f.hopf = hopf->hopf;
    if (j.contains("rmatrix")) {
      auto r = rd.matrix(j["rmatrix"], "/rmatrix", f.hopf->dim());
      if (r) f.rmatrix = RMatrix{*r};
    }
  }
  if (j.contains("objects")) {
    const Json& objs = j["objects"];
    if (!objs.is_array()) {
      rd.error("/objects", "expected an array of objects");
    } else {
      std::set<std::string> names;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        const std::string p = "/objects/" + std::to_string(i);
        auto o = read_object(rd, objs[i], p, hopf ? hopf->hopf.get() : nullptr);
        if (!o) continue;
        if (!names.insert(o->name).second) rd.error(p + "/name", "duplicate object name '" + o->name + "'");
        f.objects.push_back(std::move(*o));
      }
    }
  }
  return f;
}

Json scalar_json(const Scalar& s) { return s.str(); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json triples_json(const StructureTensor& t, const std::vector<std::string>& basis) {
  Json out = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out.push_back(Json::array({basis[i], basis[j], basis[k], t(i, j, k).str()}));
  return out;
}

Json hopf_json(const AlgebraFile& f) {
  Json out = Json::object();
  if (f.group) {
    const GroupTable& g = *f.group;
    Json table = Json::array();
    for (const auto& row : g.table) {
      Json r = Json::array();
      for (std::size_t c : row) r.push_back(g.elements[c]);
      table.push_back(r);
    }
    out["group"] = Json{{"elements", g.elements}, {"identity", g.elements[g.identity]}, {"table", table}};
    return out;
  }
  const HopfAlgebra& h = *f.hopf;
  Json raw = Json::object();
  raw["basis"] = h.basis;
  raw["mult"] = triples_json(h.mult, h.basis);
  raw["unit"] = vector_json(h.unit);
  raw["comult"] = triples_json(h.comult, h.basis);
  raw["counit"] = vector_json(h.counit);
  raw["antipode"] = matrix_json(h.antipode);
  out["raw"] = raw;
  return out;
}

Json object_json(const ObjectSpec& o, const HopfAlgebra& h) {
  Json out = Json::object();
  out["name"] = o.name;
  out["kind"] = to_string(o.kind);
  out["basis"] = o.basis;
  Json action = Json::object();
  for (std::size_t i = 0; i < h.dim(); ++i) action[h.basis[i]] = matrix_json(o.action.at(i));
  out["action"] = action;
  out[o.kind == ObjectKind::lie ? "bracket" : "mult"] = triples_json(o.table, o.basis);
  out["alpha"] = matrix_json(o.alpha);
  out["beta"] = matrix_json(o.beta);
  if (o.unit) out["unit"] = vector_json(*o.unit);
  if (!o.multiplicative) out["multiplicative"] = false;
  if (o.twist) out["twist"] = Json{{"alpha", matrix_json(o.twist->first)}, {"beta", matrix_json(o.twist->second)}};
  if (o.reference_bracket) out["reference_bracket"] = triples_json(*o.reference_bracket, o.basis);
  return out;
}

}  // namespace

InputError::InputError(std::vector<Diagnostic> diagnostics)
    : Error(joined(diagnostics)), diagnostics_(std::move(diagnostics)) {}

AlgebraFile parse_algebra_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::Position p = detail::position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto colon = msg.find(": ", msg.find("parse error"));
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError({{"", p.line, p.column, msg}});
  }
  detail::Locations loc = detail::locate(text);
  Reader rd(loc);
  for (const auto& d : loc.duplicate_keys) rd.error(d, "duplicate key");
  AlgebraFile f = read_file(rd, j);
  if (!rd.diagnostics.empty()) throw ValidationError(rd.diagnostics);
  return f;
}

std::string print_algebra_file(const AlgebraFile& f) {
  Json j = Json::object();
  j["format"] = algebra_format;
  j["name"] = f.name;
  j["description"] = f.description;
  j["parameters"] = f.parameters;
  j["hopf"] = hopf_json(f);
  j["rmatrix"] = matrix_json(f.rmatrix.coefficients);
  Json objs = Json::array();
  for (const auto& o : f.objects) objs.push_back(object_json(o, *f.hopf));
  j["objects"] = objs;
  return detail::pretty(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError({{"", 0, 0, "cannot read '" + path + "'"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Vector> parse_vectors(const std::string& text, const std::vector<std::string>& basis,
                                  const std::vector<std::string>& parameters) {
  std::vector<Vector> out;
  const std::size_t n = basis.size();
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    start = end + 1;
    if (piece.find_first_not_of(" \t") == std::string::npos) {
      if (end == text.size() && !out.empty()) break;
      throw InputError({{"", 0, 0, "empty vector in \"" + text + "\""}});
    }
    auto fail = [&](const std::string& why) { return InputError({{"", 0, 0, "vector \"" + piece + "\": " + why}}); };
    Scalar s;
    try {
      s = Scalar::parse(piece);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    for (const auto& v : s.parameters())
      if (std::find(basis.begin(), basis.end(), v) == basis.end() &&
          std::find(parameters.begin(), parameters.end(), v) == parameters.end())
        throw fail("'" + v + "' is neither a basis element nor a parameter");
    for (const auto& b : basis)
      if (s.denominator().degree_in(b) > 0) throw fail("basis element '" + b + "' appears in a denominator");
    std::vector<Polynomial> coeffs(n);
    for (const auto& [m, c] : s.numerator().terms()) {
      std::optional<std::size_t> slot;
      bool linear = true;
      for (const auto& [var, e] : m.powers()) {
        auto it = std::find(basis.begin(), basis.end(), var);
        if (it == basis.end()) continue;
        if (slot || e != 1) linear = false;
        slot = static_cast<std::size_t>(it - basis.begin());
      }
      if (!slot || !linear) throw fail("not a linear combination of basis elements");
      coeffs[*slot] += Polynomial(m.without(basis[*slot]), c);
    }
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::fraction(coeffs[i], s.denominator());
    out.push_back(v);
  }
  return out;
}

std::pair<std::string, Rational> parse_binding(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw InputError({{"", 0, 0, "expected NAME=RATIONAL, got \"" + text + "\""}});
  const std::string name = text.substr(0, eq);
  if (!is_identifier(name)) throw InputError({{"", 0, 0, "'" + name + "' is not an identifier"}});
  try {
    return {name, parse_rational(text.substr(eq + 1))};
  } catch (const Error& e) {
    throw InputError({{"", 0, 0, "binding \"" + text + "\": " + e.what()}});
  }
}

}  // namespace bihom
