#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "epistle/checker.hpp"

namespace epistle {

using Labeler =
    std::function<Label(const ObservabilityMatrix&, std::span<const Formula>, const Formula&)>;

struct TimingSummary {
  double p50_us = 0;
  double p90_us = 0;
  double p99_us = 0;
  double max_us = 0;
};

struct CrosscheckReport {
  std::uint64_t instances = 0;
  std::uint64_t rejected = 0;
  std::uint64_t mismatches = 0;
  TimingSummary lhs;
  TimingSummary rhs;
  /// First few disagreeing problems, for the report.
  std::vector<std::string> examples;
};

/// Labels `count` generated, non-contradictory problems with both labelers.
CrosscheckReport crosscheck(std::uint64_t count, std::uint64_t seed, const Labeler& lhs, const Labeler& rhs);

/// Explicit versus symbolic backend.
CrosscheckReport crosscheck(std::uint64_t count, std::uint64_t seed,
                            std::size_t node_capacity = DdStore::default_capacity);

/// 0 when clean, 5 on any mismatch.
int crosscheck_exit_code(const CrosscheckReport& report);

}  // namespace epistle
