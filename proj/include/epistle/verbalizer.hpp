#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epistle/problem.hpp"
#include "epistle/rng.hpp"

namespace epistle {

enum class Gender : std::uint8_t { feminine, masculine };

/// Bundled English given names, half feminine and half masculine.
class NamePool {
 public:
  struct Entry {
    std::string name;
    Gender gender;
  };

  static const NamePool& builtin();

  std::span<const Entry> entries() const { return entries_; }

  /// n distinct names with alternating gender tags, starting from a random
  /// gender.
  std::vector<std::string> draw(Rng& rng, int n) const;

 private:
  std::vector<Entry> entries_;
};

enum class Position : std::uint8_t { announcement, hypothesis };

/// "two", "three", ... up to ten; digits beyond.
std::string number_word(int n);

/// Clause such as "Herbert's forehead is muddy" or "nobody is thirsty".
std::string render_statement(SetupKind setup, const StatementSpec& statement,
                             std::span<const std::string> names);

/// Clause for belief layers (outermost first) around a statement.
/// Announcements use "knows / does not know"; hypotheses use
/// "can know / cannot know", with "can now know" on the outermost layer when
/// `after_announcements` is set.
std::string render_belief(std::span<const BeliefLayer> layers, SetupKind setup,
                          const StatementSpec& base, std::span<const std::string> names,
                          Position position, bool after_announcements);

/// Clause announced by "It is publicly announced that ...".
std::string render_announcement(SetupKind setup, const AnnouncementSpec& a,
                                std::span<const std::string> names);

/// Full hypothesis sentence, capitalized and terminated with a period.
std::string render_hypothesis(SetupKind setup, const HypothesisSpec& h,
                              std::span<const std::string> names, bool after_announcements);

/// Setup-specific sentences placed between the visibility sentence and the
/// announcements.
std::vector<std::string> observation_sentences(SetupKind setup, const ObservabilityMatrix& obs,
                                               std::span<const std::string> names);

std::string render_premise(SetupKind setup, const ObservabilityMatrix& obs,
                           std::span<const std::string> names,
                           std::span<const AnnouncementSpec> announcements);
std::string render_premise(const ProblemInstance& instance);

/// "<premise> Question: <hypothesis> True or False ?"
std::string render_prompt(std::string_view premise, std::string_view hypothesis);

}  // namespace epistle
