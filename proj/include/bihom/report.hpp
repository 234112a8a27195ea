#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Where an identity broke: the basis tuple it was evaluated on and the
/// nonzero residual, as labelled coordinates.
struct Witness {
  std::vector<std::string> tuple;
  std::vector<std::pair<std::string, Scalar>> residual;
};

/// Residual coordinates of v that are nonzero, labelled by names.
std::vector<std::pair<std::string, Scalar>> nonzero_coordinates(const Vector& v, const std::vector<std::string>& names);

struct ReportEntry {
  std::string id;
  Status status = Status::pass;
  /// The identity being checked, written out.
  std::string citation;
  std::optional<Witness> witness;
  /// Number of basis tuples on which the identity failed.
  std::size_t failures = 0;
  std::string note;
};

/// One row of a computed-versus-reference table comparison.
struct TableDiffRow {
  std::string entry;
  std::string computed;
  std::string reference;
  bool matches = false;
};

/// Informational items never change the pass/fail verdict.
struct Informational {
  std::string id;
  std::string message;
  std::vector<TableDiffRow> rows;
};

/// A computed value of a structure query, e.g. a center or a series.
struct Finding {
  std::string id;
  std::string value;
  std::vector<std::string> terms;
  std::string note;
};

struct CheckReport {
  std::string suite;
  std::string subject;
  std::vector<ReportEntry> entries;
  std::vector<Informational> informational;
  std::vector<Finding> findings;
  std::uint64_t probe_seed = 0;
  /// Set when a precondition refused the computation.
  std::string refusal;

  bool passed() const;
  const ReportEntry* find(const std::string& id) const;
  void append(const CheckReport& other);
};

/// Accumulates per-tuple outcomes of one identity into a ReportEntry,
/// keeping the first failing tuple as witness.
class EntryBuilder {
 public:
  EntryBuilder(std::string id, std::string citation);
  void record(const std::vector<std::string>& tuple, const Vector& residual, const std::vector<std::string>& labels);
  void record_failure(const std::vector<std::string>& tuple, std::vector<std::pair<std::string, Scalar>> residual);
  ReportEntry finish() const;

 private:
  ReportEntry entry_;
};

/// Labels for the coordinates of an n-fold tensor power: "a⊗b⊗c".
std::vector<std::string> tensor_labels(const std::vector<std::string>& names, int power);

}  // namespace bihom
