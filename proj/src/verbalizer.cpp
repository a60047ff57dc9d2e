#include "epistle/verbalizer.hpp"

#include <cctype>
#include <stdexcept>

namespace epistle {

std::vector<std::string> NamePool::draw(Rng& rng, int n) const {
  if (n < 0 || static_cast<std::size_t>(n) > entries_.size()) {
    throw std::invalid_argument("name pool too small");
  }
  std::vector<std::size_t> by_gender[2];
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    by_gender[static_cast<int>(entries_[i].gender)].push_back(i);
  }
  std::vector<std::string> out;
  int gender = static_cast<int>(rng.below(2));
  for (int k = 0; k < n; ++k) {
    auto& bucket = by_gender[gender].empty() ? by_gender[1 - gender] : by_gender[gender];
    const auto pick = rng.below(bucket.size());
    out.push_back(entries_[bucket[pick]].name);
    bucket[pick] = bucket.back();
    bucket.pop_back();
    gender = 1 - gender;
  }
  return out;
}

std::string number_word(int n) {
  static constexpr const char* words[] = {"zero", "one", "two", "three", "four", "five",
                                          "six",  "seven", "eight", "nine", "ten"};
  if (n >= 0 && n <= 10) return words[n];
  return std::to_string(n);
}

namespace {

std::string subject_words(const QuantifiedSubject& s, std::span<const std::string> names) {
  using Kind = QuantifiedSubject::Kind;
  switch (s.kind) {
    case Kind::agent:
      return names[static_cast<std::size_t>(s.agent.index)];
    case Kind::everyone:
      return "everyone";
    case Kind::not_everyone:
      return "not everyone";
    case Kind::nobody:
      return "nobody";
    case Kind::someone:
      return "someone";
  }
  return {};
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

std::string render_statement(SetupKind setup, const StatementSpec& statement,
                             std::span<const std::string> names) {
  const auto who = subject_words(statement.subject, names);
  const char* polarity = statement.negated ? "not " : "";
  switch (setup) {
    case SetupKind::forehead_mud:
    case SetupKind::forehead_mud_mirror:
      return who + "'s forehead is " + polarity + "muddy";
    case SetupKind::thirst:
      return who + " is " + polarity + "thirsty";
    case SetupKind::explicit_card:
      return who + (statement.negated ? " did not pick a red card" : " picked a red card");
  }
  return who;
}

std::string render_belief(std::span<const BeliefLayer> layers, SetupKind setup,
                          const StatementSpec& base, std::span<const std::string> names,
                          Position position, bool after_announcements) {
  std::string text = render_statement(setup, base, names);
  for (std::size_t i = layers.size(); i-- > 0;) {
    const auto& layer = layers[i];
    std::string verb;
    if (position == Position::announcement) {
      verb = layer.negated ? "does not know" : "knows";
    } else if (layer.negated) {
      verb = "cannot know";
    } else {
      verb = (i == 0 && after_announcements) ? "can now know" : "can know";
    }
    text = names[static_cast<std::size_t>(layer.knower.index)] + " " + verb +
           (layer.whether ? " whether " : " that ") + text;
  }
  return text;
}

std::string render_announcement(SetupKind setup, const AnnouncementSpec& a,
                                 std::span<const std::string> names) {
  if (!a.belief) return render_statement(setup, a.statement, names);
  return render_belief(std::span(&*a.belief, 1), setup, a.statement, names, Position::announcement,
                       false);
}

std::string render_hypothesis(SetupKind setup, const HypothesisSpec& h,
                              std::span<const std::string> names, bool after_announcements) {
  return capitalized(render_belief(h.layers, setup, h.base, names, Position::hypothesis,
                                   after_announcements)) +
         ".";
}

std::vector<std::string> observation_sentences(SetupKind setup, const ObservabilityMatrix& obs,
                                               std::span<const std::string> names) {
  switch (setup) {
    case SetupKind::forehead_mud:
    case SetupKind::thirst:
      return {};
    case SetupKind::forehead_mud_mirror:
      return {"There is a mirror in the room."};
    case SetupKind::explicit_card:
      break;
  }
  std::vector<std::string> out{"Each person draws a card, face unrevealed (red or black)."};
  for (int i = 0; i < obs.size(); ++i) {
    for (int j = 0; j < obs.size(); ++j) {
      if (obs.observes(AgentId{i}, PropId{j})) {
        out.push_back(names[static_cast<std::size_t>(j)] + "'s card is revealed to " +
                      names[static_cast<std::size_t>(i)] + ".");
      }
    }
  }
  return out;
}

std::string render_premise(SetupKind setup, const ObservabilityMatrix& obs,
                           std::span<const std::string> names,
                           std::span<const AnnouncementSpec> announcements) {
  std::string text = "There are " + number_word(obs.size()) + " persons. Everyone is visible to others.";
  for (const auto& s : observation_sentences(setup, obs, names)) text += " " + s;
  for (const auto& a : announcements) {
    text += " It is publicly announced that " + render_announcement(setup, a, names) + ".";
  }
  return text;
}

std::string render_premise(const ProblemInstance& instance) {
  std::vector<AnnouncementSpec> specs;
  for (const auto& a : instance.announcements) specs.push_back(a.spec);
  return render_premise(instance.setup, instance.obs, instance.names, specs);
}

std::string render_prompt(std::string_view premise, std::string_view hypothesis) {
  std::string out(premise);
  out += " Question: ";
  out += hypothesis;
  out += " True or False ?";
  return out;
}

}  // namespace epistle
