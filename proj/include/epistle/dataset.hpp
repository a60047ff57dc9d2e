#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "epistle/checker.hpp"
#include "epistle/problem.hpp"

namespace epistle {

/// One line of a dataset file. Serialized keys follow the declaration order.
struct DatasetRecord {
  std::string premise;
  std::string hypothesis;
  std::string label;  // "True" / "False"
  std::string setup;
  int n_agents = 0;
  int n_announcements = 0;
  int hypothesis_order = 0;
  std::vector<std::string> premise_formulas;
  std::string hypothesis_formula;
  std::vector<std::string> names;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  /// Matrix rows as in ObservabilityMatrix::to_rows; the explicit setup's
  /// random matrix is otherwise not recoverable from the formulas.
  std::string observability;

  bool operator==(const DatasetRecord&) const = default;
};

DatasetRecord to_record(const ProblemInstance& p);

/// Compact JSON object on one line, no trailing newline.
std::string to_json_line(const DatasetRecord& r);
/// Throws std::invalid_argument on missing or mistyped fields.
DatasetRecord record_from_json_line(const std::string& line);

/// One record per line, LF terminated.
void write_jsonl(std::ostream& out, const std::vector<DatasetRecord>& records);
std::string to_jsonl(const std::vector<DatasetRecord>& records);

/// Re-derives the label from the record's formula fields with `checker`.
/// Returns false on a label mismatch or contradictory premise.
bool reverify(const DatasetRecord& r, Checker& checker);

}  // namespace epistle
