#include "bihom/render.hpp"

#include "json_text.hpp"

namespace bihom {

using detail::Json;

namespace {

std::string verdict(const CheckReport& r) {
  if (!r.passed()) return "fail";
  if (!r.refusal.empty()) return "refused";
  return "pass";
}

std::string overall(const std::vector<CheckReport>& reports) {
  if (!all_passed(reports)) return "fail";
  if (any_refused(reports)) return "refused";
  return "pass";
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json residual = Json::object();
  for (const auto& [label, value] : w->residual) residual[label] = value.str();
  return Json{{"tuple", w->tuple}, {"residual", residual}};
}

Json report_entry_json(const ReportEntry& e) {
  return Json{{"id", e.id},
              {"status", to_string(e.status)},
              {"citation", e.citation},
              {"failures", e.failures},
              {"witness", witness_json(e.witness)},
              {"note", e.note}};
}

Json check_report_json(const CheckReport& r) {
  Json out = Json::object();
  out["suite"] = r.suite;
  out["subject"] = r.subject;
  out["verdict"] = verdict(r);
  out["refusal"] = r.refusal.empty() ? Json(nullptr) : Json(r.refusal);
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(report_entry_json(e));
  out["entries"] = entries;
  Json info = Json::array();
  for (const auto& i : r.informational) {
    Json rows = Json::array();
    for (const auto& row : i.rows)
      rows.push_back(Json{{"entry", row.entry}, {"computed", row.computed}, {"reference", row.reference},
                          {"matches", row.matches}});
    info.push_back(Json{{"id", i.id}, {"message", i.message}, {"rows", rows}});
  }
  out["informational"] = info;
  Json findings = Json::array();
  for (const auto& f : r.findings)
    findings.push_back(Json{{"id", f.id}, {"value", f.value}, {"terms", f.terms}, {"note", f.note}});
  out["findings"] = findings;
  out["probe_seed"] = r.probe_seed == 0 ? Json(nullptr) : Json(r.probe_seed);
  return out;
}

std::string padded(const std::string& s, std::size_t width) {
  std::size_t chars = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++chars;
  return chars >= width ? s + " " : s + std::string(width - chars, ' ');
}

std::string tuple_text(const std::vector<std::string>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + t[i];
  return out + ")";
}

}  // namespace

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

bool any_refused(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.refusal.empty()) return true;
  return false;
}

int exit_status(const std::vector<CheckReport>& reports) {
  if (!all_passed(reports)) return 1;
  return any_refused(reports) ? 3 : 0;
}

std::string report_json(const std::vector<CheckReport>& reports, const RunInfo& info) {
  Json j = Json::object();
  j["format"] = report_format;
  j["toolchain"] = Json{{"name", tool_name}, {"version", tool_version}, {"probe_seed", info.probe_seed}};
  j["command"] = info.command;
  j["subject"] = info.subject;
  j["object"] = info.object ? Json(*info.object) : Json(nullptr);
  Json bindings = Json::object();
  for (const auto& [name, value] : info.bindings) bindings[name] = to_string(value);
  j["bindings"] = bindings;
  j["verdict"] = overall(reports);
  Json suites = Json::array();
  for (const auto& r : reports) suites.push_back(check_report_json(r));
  j["suites"] = suites;
  return detail::pretty(j);
}

std::string report_text(const std::vector<CheckReport>& reports, const RunInfo& info) {
  std::string out = std::string(tool_name) + " " + tool_version + " (" + report_format + ")\n";
  out += "command: " + info.command + "\n";
  out += "subject: " + info.subject + (info.object ? " / " + *info.object : "") + "\n";
  std::string b;
  for (const auto& [name, value] : info.bindings) b += (b.empty() ? "" : ", ") + name + " = " + to_string(value);
  out += "bindings: " + (b.empty() ? std::string("none") : b) + "\n";
  out += "probe seed: " + std::to_string(info.probe_seed) + "\n";
  out += "verdict: " + overall(reports) + "\n";
  for (const auto& r : reports) {
    out += "\n[" + r.suite + "] " + r.subject + ": " + verdict(r) + "\n";
    if (!r.refusal.empty()) out += "  refused  " + r.refusal + "\n";
    for (const auto& e : r.entries) {
      out += "  " + padded(to_string(e.status), 9) + padded(e.id, 30) + e.citation + "\n";
      if (e.witness) {
        std::string res;
        for (const auto& [label, value] : e.witness->residual)
          res += (res.empty() ? "" : ", ") + label + ": " + value.str();
        out += "           witness " + tuple_text(e.witness->tuple) + " residual " + res + "\n";
      }
      if (e.failures > 0) out += "           failures: " + std::to_string(e.failures) + "\n";
      if (!e.note.empty()) out += "           note: " + e.note + "\n";
    }
    for (const auto& i : r.informational) {
      out += "  info     " + i.id + ": " + i.message + "\n";
      for (const auto& row : i.rows)
        out += "           " + padded(row.entry, 10) + "computed " + padded(row.computed, 16) + "reference " +
               padded(row.reference, 16) + (row.matches ? "matches" : "differs") + "\n";
    }
    for (const auto& f : r.findings) {
      out += "  finding  " + f.id + ": " + f.value + "\n";
      for (std::size_t t = 0; t < f.terms.size(); ++t)
        out += "           " + std::to_string(t) + ": " + f.terms[t] + "\n";
      if (!f.note.empty()) out += "           note: " + f.note + "\n";
    }
    if (r.probe_seed != 0) out += "  probe seed " + std::to_string(r.probe_seed) + "\n";
  }
  return out;
}

}  // namespace bihom
