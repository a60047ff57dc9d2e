#include "epistle/puzzle.hpp"

#include <stdexcept>

#include "epistle/errors.hpp"

namespace epistle {

Formula everyone_knows_own(int n) {
  std::vector<Formula> parts;
  for (int i = 0; i < n; ++i) parts.push_back(Formula::knows_whether(AgentId{i}, Formula::atom(PropId{i})));
  return Formula::conjunction(std::move(parts));
}

Formula nobody_knows_own(int n) {
  std::vector<Formula> parts;
  for (int i = 0; i < n; ++i) {
    parts.push_back(Formula::negation(Formula::knows_whether(AgentId{i}, Formula::atom(PropId{i}))));
  }
  return Formula::conjunction(std::move(parts));
}

namespace {

// Shared driver; the backend supplies truth-at-the-actual-world, announce and
// a surviving-world count.
template <typename State, typename Holds, typename Announce, typename Count>
PuzzleResult simulate(int n, int max_rounds, State state, Holds holds, Announce announce, Count count) {
  PuzzleResult result;
  result.n = n;
  const auto everyone = everyone_knows_own(n);
  const auto nobody = nobody_knows_own(n);
  std::vector<Formula> everyone_atoms;
  for (int i = 0; i < n; ++i) everyone_atoms.push_back(Formula::atom(PropId{i}));
  state = announce(state, Formula::disjunction(everyone_atoms));
  for (int round = 0;; ++round) {
    PuzzleRound r;
    r.round = round;
    r.everyone_knows = holds(state, everyone);
    r.nobody_knows = holds(state, nobody);
    r.surviving = count(state);
    result.rounds.push_back(r);
    if (r.everyone_knows) {
      result.rounds_until_known = round;
      break;
    }
    if (!r.nobody_knows || round == max_rounds) break;
    state = announce(state, nobody);
  }
  return result;
}

PuzzleResult run_explicit(int n, int max_rounds) {
  const auto obs = ObservabilityMatrix::ones_minus_identity(n);
  const World all_muddy{static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1)};
  return simulate(
      n, max_rounds, build_initial_model(n, obs),
      [&](const KripkeModel& m, const Formula& f) { return eval(m, all_muddy, f); },
      [](const KripkeModel& m, const Formula& f) { return announce(m, f); },
      [](const KripkeModel& m) { return static_cast<double>(m.live_count()); });
}

PuzzleResult run_symbolic(int n, int max_rounds, std::size_t node_capacity) {
  const auto obs = ObservabilityMatrix::ones_minus_identity(n);
  const std::uint64_t all_muddy = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto store = std::make_shared<DdStore>(node_capacity);
  return simulate(
      n, max_rounds, KnowledgeStructure(store, obs),
      [&](const KnowledgeStructure& ks, const Formula& f) {
        return ks.store().evaluate(translate(ks, f), all_muddy);
      },
      [](const KnowledgeStructure& ks, const Formula& f) { return announce_symbolic(ks, f); },
      [n](const KnowledgeStructure& ks) { return ks.store().sat_count(ks.state_law(), n); });
}

bool same_outcome(const PuzzleResult& a, const PuzzleResult& b) {
  if (a.rounds_until_known != b.rounds_until_known || a.rounds.size() != b.rounds.size()) return false;
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    const auto& x = a.rounds[i];
    const auto& y = b.rounds[i];
    if (x.everyone_knows != y.everyone_knows || x.nobody_knows != y.nobody_knows ||
        x.surviving != y.surviving) {
      return false;
    }
  }
  return true;
}

}  // namespace

PuzzleResult run_muddy_children(int n, int max_rounds, Backend backend, std::size_t node_capacity) {
  if (n < 2) throw std::invalid_argument("muddy children needs at least two agents");
  switch (backend) {
    case Backend::explicit_model:
      return run_explicit(n, max_rounds);
    case Backend::symbolic:
      return run_symbolic(n, max_rounds, node_capacity);
    case Backend::both:
      break;
  }
  auto a = run_explicit(n, max_rounds);
  auto b = run_symbolic(n, max_rounds, node_capacity);
  if (!same_outcome(a, b)) throw BackendMismatch("muddy children: backends disagree");
  return a;
}

}  // namespace epistle
