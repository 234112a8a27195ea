#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/report.hpp"
#include "bihom/scalar.hpp"

namespace bihom {

inline constexpr const char* tool_name = "bihomcheck";
inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* report_format = "bihom-report/1";

/// Context of one run, echoed at the top of every report.
struct RunInfo {
  std::string command;
  std::string subject;
  std::optional<std::string> object;
  Bindings bindings;
  std::uint64_t probe_seed = 0;
};

bool all_passed(const std::vector<CheckReport>& reports);
bool any_refused(const std::vector<CheckReport>& reports);

/// 1 when an entry failed, otherwise 3 when a precondition refused,
/// otherwise 0.
int exit_status(const std::vector<CheckReport>& reports);

std::string report_json(const std::vector<CheckReport>& reports, const RunInfo& info);
std::string report_text(const std::vector<CheckReport>& reports, const RunInfo& info);

}  // namespace bihom
