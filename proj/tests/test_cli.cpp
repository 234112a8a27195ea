#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bihom/catalog.hpp"
#include "bihom/cli.hpp"
#include "bihom/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bihom;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bihomcheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string golden_path(const std::string& name) { return std::string(BIHOM_SOURCE_DIR) + "/tests/golden/" + name; }

// Set BIHOM_UPDATE_GOLDEN=1 to rewrite the files after reviewing a change.
void check_golden(const std::string& name, const std::string& actual) {
  if (std::getenv("BIHOM_UPDATE_GOLDEN")) {
    std::ofstream(golden_path(name), std::ios::binary) << actual;
    return;
  }
  CHECK_MESSAGE(read_text_file(golden_path(name)) == actual, name);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bihomcheck-test-" + name);
}

const Json& suite(const Json& report, const std::string& name, const std::string& subject) {
  for (const auto& s : report["suites"])
    if (s["suite"] == name && s["subject"] == subject) return s;
  FAIL("no suite " << name << " for " << subject);
  static Json none;
  return none;
}

const Json& finding(const Json& report, const std::string& id) {
  for (const auto& f : report["suites"][0]["findings"])
    if (f["id"] == id) return f;
  FAIL("no finding " << id);
  static Json none;
  return none;
}

}  // namespace

TEST_CASE("full catalog reports") {
  for (const auto& info : catalog()) {
    Run r = run({"check", info.name, "--json"});
    CHECK_MESSAGE(r.status == 0, info.name);
    CHECK(r.err.empty());
    Json j = Json::parse(r.out);
    CHECK(j["format"] == "bihom-report/1");
    CHECK(j["toolchain"]["probe_seed"] == 20240917);
    CHECK(j["verdict"] == "pass");
    check_golden(info.name + ".check.json", r.out);
  }
}

TEST_CASE("the 2-dim algebra passes everything except the printed table") {
  Json j = Json::parse(run({"check", "example24", "--json"}).out);
  const Json& lie = suite(j, "bihom-lie", "A commutator");
  CHECK(lie["verdict"] == "pass");
  const Json& diff = lie["informational"][0];
  CHECK(diff["id"] == "reference-bracket");
  REQUIRE(diff["rows"].size() == 2);
  CHECK(diff["rows"][0]["entry"] == "[x1,x2]");
  CHECK(diff["rows"][0]["computed"] == "0");
  CHECK(diff["rows"][0]["reference"] == "2*b*x2");
  CHECK(diff["rows"][1]["reference"] == "b*x1 - x2");
  for (const char* s : {"hopf", "module", "module-algebra", "bihom-assoc", "bihom-lie", "leibniz"}) {
    bool seen = false;
    for (const auto& rep : j["suites"]) seen = seen || rep["suite"] == s;
    CHECK_MESSAGE(seen, s);
  }
}

TEST_CASE("text and JSON renderings carry the same entries") {
  for (const auto& info : catalog()) {
    Json j = Json::parse(run({"check", info.name, "--json"}).out);
    const std::string text = run({"check", info.name}).out;
    for (const auto& s : j["suites"]) {
      CHECK(text.find("[" + s["suite"].get<std::string>() + "] " + s["subject"].get<std::string>() + ": " +
                      s["verdict"].get<std::string>()) != std::string::npos);
      for (const auto& e : s["entries"]) {
        const std::string line = e["status"].get<std::string>();
        CHECK(text.find(e["id"].get<std::string>()) != std::string::npos);
        CHECK(text.find(e["citation"].get<std::string>()) != std::string::npos);
        CHECK(text.find(line) != std::string::npos);
      }
      for (const auto& i : s["informational"]) CHECK(text.find(i["message"].get<std::string>()) != std::string::npos);
    }
  }
}

TEST_CASE("suite selection and parameter substitution") {
  Json j = Json::parse(run({"check", "example25-heisenberg", "--suite", "bihom-lie", "--json"}).out);
  CHECK(j["verdict"] == "pass");
  CHECK(suite(j, "bihom-lie", "heisenberg")["entries"].size() == 9);
  CHECK(suite(j, "hom-lie", "heisenberg")["verdict"] == "pass");

  Run lemma = run({"check", "bihom-2d", "--suite", "lemma31", "--json"});
  CHECK(lemma.status == 0);
  Json l = Json::parse(lemma.out);
  REQUIRE(l["suites"].size() == 1);
  CHECK(l["suites"][0]["suite"] == "leibniz");

  Json s = Json::parse(run({"check", "bihom-2d", "--set", "b=3", "--json"}).out);
  CHECK(s["bindings"]["b"] == "3");
  CHECK(s["verdict"] == "pass");

  Json one = Json::parse(run({"check", "trivial-hopf", "--object", "k", "--json"}).out);
  for (const auto& rep : one["suites"])
    if (rep["suite"] != "hopf") CHECK(rep["subject"].get<std::string>().rfind("k", 0) == 0);
}

TEST_CASE("exit status contract") {
  CHECK(run({"check", "kZ2"}).status == 0);
  CHECK(run({"check", "no-such-algebra"}).status == 2);
  CHECK(run({"check", "kZ2", "--suite", "nothing"}).status == 2);
  CHECK(run({"check", "bihom-2d", "--set", "q=1"}).status == 2);
  CHECK(run({"check", "bihom-2d", "--set", "b=x"}).status == 2);
  CHECK(run({"check", "kZ2", "--object", "missing"}).status == 2);
  CHECK(run({"check"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);

  Run refused = run({"check", "example24", "--set", "b=0", "--suite", "bihom-lie"});
  CHECK(refused.status == 3);
  CHECK(refused.out.find("refused  beta is not bijective") != std::string::npos);

  // A broken α: the identity fails BiHom-associativity, exit 1.
  AlgebraFile f = catalog_entry("bihom-2d");
  f.objects[0].alpha = Matrix::identity(2);
  const auto path = temp_file("broken.json");
  std::ofstream(path) << print_algebra_file(f);
  Run broken = run({"check", path.string(), "--suite", "bihom-assoc", "--json"});
  CHECK(broken.status == 1);
  Json b = Json::parse(broken.out);
  CHECK(b["verdict"] == "fail");
  const Json& entry = b["suites"][0]["entries"][3];
  CHECK(entry["id"] == "bihom-associativity");
  CHECK(entry["status"] == "fail");
  CHECK(entry["witness"]["tuple"] == Json::array({"x2", "x1", "x1"}));
  CHECK(entry["witness"]["residual"]["x2"] == "-2");

  // Fail takes precedence over a refusal.
  Run both = run({"check", path.string(), "--set", "b=0"});
  CHECK(both.status == 1);
  std::filesystem::remove(path);
}

TEST_CASE("input errors are located") {
  std::string text = read_text_file(std::string(BIHOM_SOURCE_DIR) + "/data/catalog/bihom-2d.json");
  text.replace(text.find("\"beta\""), 6, "\"gamma\"");
  const auto path = temp_file("located.json");
  std::ofstream(path) << text;
  Run r = run({"check", path.string()});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find(path.string() + ":") != std::string::npos);
  CHECK(r.err.find("/objects/0: beta required") != std::string::npos);
  CHECK(r.err.find("/objects/0/gamma: unknown key 'gamma'") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("commutator construction") {
  Run r = run({"construct", "example24", "--what", "commutator"});
  CHECK(r.status == 0);
  CHECK(r.err == "constructed A-commutator: bihom-lie pass\n");
  AlgebraFile f = parse_algebra_file(r.out);
  const ObjectSpec& o = f.object("A-commutator");
  CHECK(o.kind == ObjectKind::lie);
  CHECK(o.table == StructureTensor(2));
  CHECK(o.reference_bracket);
  CHECK(f.parameters == std::vector<std::string>{"b"});
  check_golden("bihom-2d.commutator.json", r.out);

  Run refused = run({"construct", "example24", "--what", "commutator", "--set", "b=0"});
  CHECK(refused.status == 3);
  CHECK(refused.err == "refused: beta is not bijective\n");
  CHECK(refused.out.empty());

  const auto path = temp_file("constructed.json");
  Run to_file = run({"construct", "heisenberg", "--what", "commutator", "--output", path.string()});
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  AlgebraFile mu = parse_algebra_file(read_text_file(path.string()));
  CHECK(mu.object("matrix-units-commutator").table == catalog_entry("heisenberg").object("heisenberg").table);
  CHECK(run({"check", path.string(), "--suite", "bihom-lie"}).status == 0);
  std::filesystem::remove(path);
}

TEST_CASE("twist construction") {
  Run r = run({"construct", "example25-heisenberg", "--what", "twist"});
  CHECK(r.status == 0);
  AlgebraFile f = parse_algebra_file(r.out);
  const ObjectSpec& o = f.object("heisenberg-twisted");
  CHECK(o.table(0, 1, 2) == Scalar::parse("l1*l2p"));
  CHECK(o.table(1, 0, 2) == Scalar::parse("l1p*l2"));
  CHECK(o.table == catalog_entry("heisenberg-twisted").object("heisenberg-twisted").table);
  check_golden("heisenberg.twist.json", r.out);
  CHECK(run({"construct", "kZ2", "--what", "twist"}).status == 2);
  CHECK(run({"construct", "kZ2", "--what", "square"}).status == 2);
}

TEST_CASE("structure queries") {
  Json c = Json::parse(run({"structure", "heisenberg", "--what", "center", "--json"}).out);
  CHECK(c["suites"][0]["subject"] == "heisenberg");
  CHECK(finding(c, "center")["value"] == "span(x3)");

  Run d = run({"structure", "heisenberg", "--what", "derived-series", "--json"});
  Json dj = Json::parse(d.out);
  CHECK(finding(dj, "derived-series")["terms"] == Json::array({"span(x1, x2, x3)", "span(x3)", "0"}));
  CHECK(finding(dj, "derived-series")["value"] == "zero");
  CHECK(finding(dj, "derived-series")["note"] == "solvable: reaches 0 at step 2");
  check_golden("heisenberg.derived-series.json", d.out);

  Run l = run({"structure", "heisenberg", "--what", "lcs", "--span", "x3", "--json"});
  CHECK(finding(Json::parse(l.out), "lower-central-series")["terms"] == Json::array({"span(x3)", "0"}));
  check_golden("heisenberg.lcs.json", l.out);

  Run h = run({"structure", "heisenberg", "--what", "certificate", "--json"});
  Json hj = Json::parse(h.out);
  CHECK(finding(hj, "simple")["note"] == "ideal span(x3)");
  CHECK(hj["suites"][0]["probe_seed"] == 20240917);
  check_golden("heisenberg.certificate.json", h.out);

  Run a = run({"structure", "example24", "--what", "certificate", "--json"});
  Json aj = Json::parse(a.out);
  CHECK(finding(aj, "simple")["value"] == "refuted");
  CHECK(finding(aj, "simple")["note"] == "ideal span(x2)");
  check_golden("bihom-2d.certificate.json", a.out);

  Json so3 = Json::parse(run({"structure", "cross-product", "--what", "certificate", "--json"}).out);
  CHECK(finding(so3, "simple")["value"] == "not refuted");
  Json so3d = Json::parse(run({"structure", "cross-product", "--what", "derived-series", "--json"}).out);
  CHECK(finding(so3d, "derived-series")["note"] == "not solvable: stabilizes at step 1");
  Json capped = Json::parse(run({"structure", "heisenberg", "--what", "derived-series", "--max-steps", "1", "--json"}).out);
  CHECK(finding(capped, "derived-series")["value"] == "capped");
}

TEST_CASE("subspace arguments") {
  Json ok = Json::parse(run({"structure", "heisenberg", "--what", "ideal-check", "--span", "x3", "--json"}).out);
  CHECK(finding(ok, "ideal")["value"] == "yes");
  Json no = Json::parse(run({"structure", "heisenberg", "--what", "ideal-check", "--span", "x1", "--object", "heisenberg", "--json"}).out);
  CHECK(finding(no, "ideal")["value"] == "no");
  CHECK(finding(no, "[U,L] ⊆ U")["note"] == "[x1, x2] = x3 lies outside the subspace");
  Json mu = Json::parse(run({"structure", "heisenberg", "--what", "ideal-check", "--span", "x1", "--json"}).out);
  CHECK(mu["suites"][0]["subject"] == "matrix-units");
  CHECK(finding(mu, "UA ⊆ U")["note"] == "(x1)·x2 = x3 lies outside the subspace");
  Json lie = Json::parse(
      run({"structure", "heisenberg", "--what", "ideal-check", "--span", "x1", "--kind", "lie-ideal", "--json"}).out);
  CHECK(lie["suites"][0]["subject"] == "heisenberg");
  Json assoc = Json::parse(run({"structure", "example24", "--what", "ideal-check", "--span", "x1", "--json"}).out);
  CHECK(finding(assoc, "AU ⊆ U")["value"] == "fails");

  Json cl = Json::parse(run({"structure", "heisenberg", "--what", "closure", "--span", "x1 + x3", "--json"}).out);
  CHECK(finding(cl, "closure")["value"] == "span(x1, x3)");
  Json sub = Json::parse(run({"structure", "example24", "--what", "closure", "--span", "x1", "--kind",
                              "associative-subalgebra", "--json"})
                             .out);
  CHECK(finding(sub, "closure")["value"] == "span(x1)");

  Json n = Json::parse(run({"structure", "cross-product", "--what", "normalizer", "--span", "x3", "--json"}).out);
  CHECK(finding(n, "transporter")["value"] == "0");
  Json ann = Json::parse(run({"structure", "example24", "--what", "annihilator", "--span", "x2", "--json"}).out);
  CHECK(finding(ann, "annihilator")["value"] == "span(x2)");

  CHECK(run({"structure", "heisenberg", "--what", "closure"}).status == 2);
  CHECK(run({"structure", "heisenberg", "--what", "closure", "--span", "x1*x2"}).status == 2);
  CHECK(run({"structure", "cross-product", "--what", "annihilator", "--span", "x1"}).status == 2);
  CHECK(run({"structure", "heisenberg", "--what", "center", "--max-steps", "0"}).status == 2);
  CHECK(run({"structure", "heisenberg", "--what", "spectrum"}).status == 2);
}

TEST_CASE("structure theorem instances") {
  Run r = run({"structure", "kZ2", "--what", "theorems", "--json"});
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  for (const auto& e : j["suites"][0]["entries"]) CHECK(e["status"] == "pass");
  Json skipped = Json::parse(run({"structure", "example24", "--what", "theorems", "--json"}).out);
  for (const auto& e : skipped["suites"][0]["entries"]) CHECK(e["status"] == "skipped");
}

TEST_CASE("catalog and print") {
  Run list = run({"catalog"});
  CHECK(list.status == 0);
  for (const auto& info : catalog()) CHECK(list.out.find(info.name) != std::string::npos);
  Json j = Json::parse(run({"catalog", "--json"}).out);
  CHECK(j.size() == 6);
  CHECK(j[2]["aliases"] == Json::array({"example24"}));

  Run p = run({"print", "example24"});
  CHECK(p.out == read_text_file(std::string(BIHOM_SOURCE_DIR) + "/data/catalog/bihom-2d.json"));
  Run file = run({"print", std::string(BIHOM_SOURCE_DIR) + "/data/catalog/bihom-2d.json", "--set", "b=2"});
  CHECK(file.status == 0);
  AlgebraFile f = parse_algebra_file(file.out);
  CHECK(f.parameters.empty());
  CHECK(f.object("A").beta(1, 1) == Scalar(2));
  CHECK(run({"--version"}).out == "0.1.0\n");
}
