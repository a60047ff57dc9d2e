#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epistle/formula.hpp"
#include "epistle/kripke.hpp"
#include "epistle/setup.hpp"

namespace epistle {

/// "<subject> <predicate>" with optional predicate negation.
struct StatementSpec {
  QuantifiedSubject subject;
  bool negated = false;
  bool operator==(const StatementSpec&) const = default;
};

/// One knowledge operator: knower, know-that vs know-whether, polarity.
struct BeliefLayer {
  AgentId knower;
  bool whether = false;
  bool negated = false;
  bool operator==(const BeliefLayer&) const = default;
};

/// Either a bare statement or a first-order belief about one.
struct AnnouncementSpec {
  std::optional<BeliefLayer> belief;
  StatementSpec statement;
  bool operator==(const AnnouncementSpec&) const = default;
};

/// Belief layers listed outermost first around a base statement.
struct HypothesisSpec {
  std::vector<BeliefLayer> layers;
  StatementSpec base;
  int order() const { return static_cast<int>(layers.size()); }
  bool operator==(const HypothesisSpec&) const = default;
};

Formula to_formula(const StatementSpec& s, int n);
Formula apply_layer(const BeliefLayer& layer, Formula inner);
Formula to_formula(const AnnouncementSpec& a, int n);
Formula to_formula(const HypothesisSpec& h, int n);

/// "someone <predicate>", the opening announcement of every problem.
AnnouncementSpec existential_announcement();

struct Announcement {
  AnnouncementSpec spec;
  Formula formula;
  std::string text;
};

struct Hypothesis {
  HypothesisSpec spec;
  Formula formula;
  std::string text;
};

struct ProblemInstance {
  SetupKind setup = SetupKind::forehead_mud;
  int n_agents = 0;
  std::vector<std::string> names;
  ObservabilityMatrix obs;
  std::vector<Announcement> announcements;
  std::optional<Hypothesis> hypothesis;
  Label label = Label::False;
  std::uint64_t seed = 0;
  std::uint64_t draw_index = 0;

  std::vector<Formula> announcement_formulas() const;
  const Hypothesis& hyp() const { return *hypothesis; }
};

}  // namespace epistle
