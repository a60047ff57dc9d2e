#include "epistle/problem.hpp"

namespace epistle {

Formula to_formula(const StatementSpec& s, int n) { return desugar_subject(s.subject, s.negated, n); }

Formula apply_layer(const BeliefLayer& layer, Formula inner) {
  auto k = layer.whether ? Formula::knows_whether(layer.knower, std::move(inner))
                         : Formula::knows(layer.knower, std::move(inner));
  return layer.negated ? Formula::negation(std::move(k)) : k;
}

Formula to_formula(const AnnouncementSpec& a, int n) {
  auto f = to_formula(a.statement, n);
  return a.belief ? apply_layer(*a.belief, std::move(f)) : f;
}

Formula to_formula(const HypothesisSpec& h, int n) {
  auto f = to_formula(h.base, n);
  for (auto it = h.layers.rbegin(); it != h.layers.rend(); ++it) f = apply_layer(*it, std::move(f));
  return f;
}

AnnouncementSpec existential_announcement() {
  return AnnouncementSpec{std::nullopt, StatementSpec{QuantifiedSubject::someone(), false}};
}

std::vector<Formula> ProblemInstance::announcement_formulas() const {
  std::vector<Formula> out;
  out.reserve(announcements.size());
  for (const auto& a : announcements) out.push_back(a.formula);
  return out;
}

}  // namespace epistle
