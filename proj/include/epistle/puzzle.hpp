#pragma once

#include <optional>
#include <vector>

#include "epistle/checker.hpp"

namespace epistle {

/// Kw[0] p0 & ... & Kw[n-1] p(n-1)
Formula everyone_knows_own(int n);
/// ~Kw[0] p0 & ... & ~Kw[n-1] p(n-1)
Formula nobody_knows_own(int n);

struct PuzzleRound {
  int round = 0;  // ignorance announcements made so far
  bool everyone_knows = false;
  bool nobody_knows = false;
  double surviving = 0;  // worlds / states left
};

struct PuzzleResult {
  int n = 0;
  std::vector<PuzzleRound> rounds;
  /// Ignorance rounds after which everyone knows their own status.
  std::optional<int> rounds_until_known;
};

/// Muddy children in the all-muddy world: announce that someone is muddy,
/// then repeat "nobody knows whether they are muddy" while it is true, up
/// to max_rounds times. Backend::both runs both backends and throws
/// BackendMismatch if they disagree.
PuzzleResult run_muddy_children(int n, int max_rounds, Backend backend,
                                std::size_t node_capacity = DdStore::default_capacity);

}  // namespace epistle
