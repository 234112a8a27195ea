#include "bihom/report.hpp"

namespace bihom {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

std::vector<std::pair<std::string, Scalar>> nonzero_coordinates(const Vector& v, const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, Scalar>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(names.at(i), v[i]);
  return out;
}

bool CheckReport::passed() const {
  for (const auto& e : entries)
    if (e.status == Status::fail) return false;
  return true;
}

const ReportEntry* CheckReport::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  informational.insert(informational.end(), other.informational.begin(), other.informational.end());
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

EntryBuilder::EntryBuilder(std::string id, std::string citation) {
  entry_.id = std::move(id);
  entry_.citation = std::move(citation);
}

void EntryBuilder::record(const std::vector<std::string>& tuple, const Vector& residual,
                          const std::vector<std::string>& labels) {
  if (is_zero(residual)) return;
  record_failure(tuple, nonzero_coordinates(residual, labels));
}

void EntryBuilder::record_failure(const std::vector<std::string>& tuple,
                                  std::vector<std::pair<std::string, Scalar>> residual) {
  entry_.status = Status::fail;
  ++entry_.failures;
  if (!entry_.witness) entry_.witness = Witness{tuple, std::move(residual)};
}

ReportEntry EntryBuilder::finish() const { return entry_; }

std::vector<std::string> tensor_labels(const std::vector<std::string>& names, int power) {
  std::vector<std::string> out{""};
  for (int p = 0; p < power; ++p) {
    std::vector<std::string> next;
    for (const auto& prefix : out)
      for (const auto& n : names) next.push_back(prefix.empty() ? n : prefix + "⊗" + n);
    out = std::move(next);
  }
  return out;
}

}  // namespace bihom
