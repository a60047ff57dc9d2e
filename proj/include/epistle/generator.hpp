#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "epistle/checker.hpp"
#include "epistle/problem.hpp"
#include "epistle/rng.hpp"
#include "epistle/setup.hpp"

namespace epistle {

struct GenConfig {
  std::uint64_t seed = 0;
  std::vector<int> n_agents_choices{2, 3};
  /// Highest belief order in hypotheses.
  int max_order = 2;
  /// Negation rate of the knowledge operator inside announcements.
  double p_negate_announcement_knowledge = 0.8;
  /// Negation rate everywhere else (predicates, hypothesis layers).
  double p_negate_other = 0.5;
  int per_setup_count = 400;
  std::vector<SetupKind> setups{all_setups.begin(), all_setups.end()};
  Backend backend = Backend::explicit_model;
  std::size_t node_capacity = DdStore::default_capacity;
  /// Draws allowed per setup before giving up on filling a label bucket.
  std::uint64_t max_draws = 1'000'000;
  int threads = 1;

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Subject uniform over the n agents plus everyone / not everyone / nobody.
StatementSpec sample_statement(Rng& rng, int n, double negation_prob);

/// Fair coin between a bare statement and a first-order belief.
AnnouncementSpec sample_announcement(Rng& rng, int n, const GenConfig& cfg);

/// Order uniform on 1..max_order, one belief layer per order.
HypothesisSpec sample_hypothesis(Rng& rng, int n, const GenConfig& cfg);

struct Rejected {
  std::uint64_t draw_index = 0;
  std::string reason;
};

using Draw = std::variant<ProblemInstance, Rejected>;

/// Builds formulas and text for the given components and labels them.
/// Returns Rejected if the announcements are contradictory.
Draw assemble_problem(SetupKind setup, std::vector<std::string> names, ObservabilityMatrix obs,
                      const std::vector<AnnouncementSpec>& announcements, const HypothesisSpec& hypothesis,
                      Checker& checker);

/// One candidate problem. The existential announcement always comes first,
/// followed by 0..n sampled announcements.
Draw make_problem(Rng& rng, const GenConfig& cfg, Checker& checker, std::uint64_t draw_index = 0);

/// The substream used for draw `index` of `setup`.
Rng draw_stream(const GenConfig& cfg, SetupKind setup, std::uint64_t index);

struct GenerationStats {
  std::uint64_t draws = 0;
  std::uint64_t rejected = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t discarded = 0;
};

/// Key used to drop repeated problems: setup, agent count, formulas.
std::string dedup_key(const ProblemInstance& p);

/// per_setup_count problems per configured setup, half labelled True, in
/// setup order and then draw order. Output depends only on cfg, not on the
/// thread count. Throws GenerationStall.
std::vector<ProblemInstance> generate_balanced(const GenConfig& cfg, GenerationStats* stats = nullptr);

}  // namespace epistle
