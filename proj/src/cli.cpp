#include "bihom/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "bihom/catalog.hpp"
#include "bihom/io.hpp"
#include "bihom/render.hpp"
#include "bihom/runner.hpp"
#include "json_text.hpp"

namespace bihom {

namespace {

struct Options {
  std::string input;
  std::string suite = "all";
  std::string what;
  std::optional<std::string> object;
  std::vector<std::string> bindings;
  bool json = false;
  std::optional<std::string> output;
  std::size_t max_steps = default_max_steps;
  std::uint64_t probe_seed = default_probe_seed;
  std::size_t probes = default_probe_count;
  std::optional<std::string> span;
  std::optional<std::string> kind;
};

InputError input_error(const std::string& message) { return InputError({{"", 0, 0, message}}); }

struct Loaded {
  AlgebraFile file;
  Bindings bindings;
};

Loaded load(const Options& o) {
  AlgebraFile f;
  if (std::filesystem::is_regular_file(o.input))
    f = parse_algebra_file(read_text_file(o.input));
  else if (!catalog_canonical_name(o.input).empty())
    f = catalog_entry(o.input);
  else
    throw input_error("'" + o.input + "' is neither a file nor a catalog entry");
  Bindings b;
  for (const auto& text : o.bindings) {
    auto [name, value] = parse_binding(text);
    if (std::find(f.parameters.begin(), f.parameters.end(), name) == f.parameters.end())
      throw input_error("--set " + text + ": '" + name + "' is not a parameter of " + f.name);
    b[name] = value;
  }
  if (!b.empty()) f = f.substituted(b);
  return {std::move(f), std::move(b)};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (!o.output) {
    out << text;
    return;
  }
  std::ofstream file(*o.output, std::ios::binary);
  if (!file) throw input_error("cannot write '" + *o.output + "'");
  file << text;
}

RunInfo run_info(const std::string& command, const Options& o, const Loaded& l) {
  return RunInfo{command, l.file.name, o.object, l.bindings, o.probe_seed};
}

int emit_reports(const std::string& command, const Options& o, const Loaded& l, const std::vector<CheckReport>& reports,
                 std::ostream& out) {
  RunInfo info = run_info(command, o, l);
  emit(o, out, o.json ? report_json(reports, info) : report_text(reports, info));
  return exit_status(reports);
}

int do_check(const Options& o, std::ostream& out) {
  auto suite = parse_suite(o.suite);
  if (!suite) throw input_error("unknown suite '" + o.suite + "'");
  Loaded l = load(o);
  return emit_reports("check", o, l, run_suite(l.file, *suite, o.object), out);
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  Construction what;
  if (o.what == "commutator")
    what = Construction::commutator;
  else if (o.what == "twist")
    what = Construction::twist;
  else
    throw input_error("unknown construction '" + o.what + "'");
  Loaded l = load(o);
  const std::string text = print_algebra_file(run_construction(l.file, what, o.object));
  AlgebraFile back = parse_algebra_file(text);
  std::vector<CheckReport> reports = run_suite(back, Suite::bihom_lie);
  emit(o, out, text);
  const int status = exit_status(reports);
  err << "constructed " << back.objects.at(0).name << ": bihom-lie " << (status == 0 ? "pass" : "fail") << "\n";
  if (status != 0) err << report_text(reports, run_info("construct", o, l));
  return status;
}

int do_structure(const Options& o, std::ostream& out) {
  auto what = parse_structure_query(o.what);
  if (!what) throw input_error("unknown structure query '" + o.what + "'");
  StructureRequest req;
  req.what = *what;
  req.object = o.object;
  req.span = o.span;
  req.max_steps = o.max_steps;
  req.probe_seed = o.probe_seed;
  req.probes = o.probes;
  if (o.kind) {
    if (*o.kind == "lie-ideal")
      req.kind = ClosureKind::lie_ideal;
    else if (*o.kind == "associative-ideal")
      req.kind = ClosureKind::associative_ideal;
    else if (*o.kind == "associative-subalgebra")
      req.kind = ClosureKind::associative_subalgebra;
    else
      throw input_error("unknown kind '" + *o.kind + "'");
  }
  if (o.max_steps == 0) throw input_error("--max-steps must be positive");
  Loaded l = load(o);
  return emit_reports("structure", o, l, {run_structure(l.file, req)}, out);
}

int do_catalog(const Options& o, std::ostream& out) {
  if (o.json) {
    detail::Json list = detail::Json::array();
    for (const auto& c : catalog())
      list.push_back(detail::Json{{"name", c.name}, {"aliases", c.aliases}, {"description", c.description}});
    emit(o, out, detail::pretty(list));
    return 0;
  }
  std::string text;
  for (const auto& c : catalog()) {
    std::string aliases;
    for (const auto& a : c.aliases) aliases += (aliases.empty() ? " (" : ", ") + a;
    if (!aliases.empty()) aliases += ")";
    text += c.name + aliases + "\n    " + c.description + "\n";
  }
  emit(o, out, text);
  return 0;
}

int do_print(const Options& o, std::ostream& out) {
  emit(o, out, print_algebra_file(load(o).file));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of Hopf module algebras, BiHom algebras and their structure theory", "bihomcheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "algebra file or catalog name")->required();
    sub->add_option("--set", o.bindings, "bind a parameter, NAME=RATIONAL (repeatable)");
    sub->add_option("--output", o.output, "write to this path instead of stdout");
  };

  CLI::App* check = app.add_subcommand("check", "run verification suites");
  input(check);
  check->add_option("--suite", o.suite, "hopf, module, module-algebra, bihom-assoc, bihom-lie, leibniz or all")
      ->capture_default_str();
  check->add_option("--object", o.object, "only this object");
  check->add_flag("--json", o.json, "machine-readable report");

  CLI::App* construct = app.add_subcommand("construct", "build a bracket and emit it as a new algebra file");
  input(construct);
  construct->add_option("--what", o.what, "commutator or twist")->required();
  construct->add_option("--object", o.object, "source object");

  CLI::App* structure = app.add_subcommand("structure", "ideals, series and simplicity certificates");
  input(structure);
  structure
      ->add_option("--what", o.what,
                   "center, derived-series, lcs, ideal-check, closure, certificate, normalizer, transporter, "
                   "annihilator or theorems")
      ->required();
  structure->add_option("--object", o.object, "object to query (default: the first object that fits the query)");
  structure->add_option("--span", o.span, "subspace argument, e.g. \"x1 + 2*x3; x2\"");
  structure->add_option("--kind", o.kind, "lie-ideal, associative-ideal or associative-subalgebra");
  structure->add_option("--max-steps", o.max_steps, "series length cap")->capture_default_str();
  structure->add_option("--probe-seed", o.probe_seed, "seed of the probe vectors")->capture_default_str();
  structure->add_option("--probes", o.probes, "random probe vectors beyond the basis")->capture_default_str();
  structure->add_flag("--json", o.json, "machine-readable report");

  CLI::App* list = app.add_subcommand("catalog", "list the built-in algebras");
  list->add_flag("--json", o.json, "machine-readable list");
  list->add_option("--output", o.output, "write to this path instead of stdout");

  CLI::App* print = app.add_subcommand("print", "print an algebra file in canonical form");
  input(print);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return do_check(o, out);
    if (construct->parsed()) return do_construct(o, out, err);
    if (structure->parsed()) return do_structure(o, out);
    if (list->parsed()) return do_catalog(o, out);
    return do_print(o, out);
  } catch (const InputError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << (d.line > 0 ? o.input + ":" : "") << d.str() << "\n";
    return 2;
  } catch (const PreconditionFailed& e) {
    err << "refused: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bihom
