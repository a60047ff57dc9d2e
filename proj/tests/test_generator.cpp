#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "epistle/errors.hpp"
#include "epistle/generator.hpp"
#include "epistle/syntax.hpp"
#include "support/naive_semantics.hpp"

using namespace epistle;

namespace {

int category(const StatementSpec& s, int n) {
  using K = QuantifiedSubject::Kind;
  switch (s.subject.kind) {
    case K::agent:
      return s.subject.agent.index;
    case K::everyone:
      return n;
    case K::not_everyone:
      return n + 1;
    case K::nobody:
      return n + 2;
    case K::someone:
      break;
  }
  return -1;
}

GenConfig small_config(int per_setup) {
  GenConfig cfg;
  cfg.seed = 11;
  cfg.per_setup_count = per_setup;
  return cfg;
}

}  // namespace

TEST_CASE("rng is bit-exact") {
  // mt19937_64 value fixed by the C++ standard; SplitMix64 reference output.
  Rng rng(5489);
  for (int i = 0; i < 9999; ++i) rng.next();
  CHECK(rng.next() == 9981545732273789042ull);
  CHECK(mix64(0) == 0xE220A8397B1DCDAFull);

  auto a = Rng::substream(3, 1, 7);
  auto b = Rng::substream(3, 1, 7);
  auto c = Rng::substream(3, 1, 8);
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
}

TEST_CASE("rng bounded draws") {
  Rng rng(1);
  std::array<int, 7> counts{};
  for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK_FALSE(rng.bernoulli(0.0));
  CHECK(rng.bernoulli(1.0));
  CHECK_THROWS(rng.below(0));
}

TEST_CASE("setup tags") {
  for (auto s : all_setups) CHECK(parse_setup_tag(setup_tag(s)) == s);
  CHECK(setup_tag(SetupKind::explicit_card) == "explicit");
  CHECK_FALSE(parse_setup_tag("mud"));
}

TEST_CASE("sample_observability") {
  Rng rng(0);
  CHECK(sample_observability(SetupKind::forehead_mud, 3, rng) == ObservabilityMatrix::ones_minus_identity(3));
  CHECK(sample_observability(SetupKind::thirst, 2, rng) == ObservabilityMatrix::identity(2));
  CHECK(sample_observability(SetupKind::forehead_mud_mirror, 3, rng) == ObservabilityMatrix::ones(3));

  long total = 0;
  for (int i = 0; i < 10000; ++i) total += sample_observability(SetupKind::explicit_card, 3, rng).entry_sum();
  CHECK(std::abs(static_cast<double>(total) / 10000 - 3.0) < 0.1);
}

TEST_CASE("statement assembly") {
  CHECK(to_formula(StatementSpec{QuantifiedSubject::single(AgentId{1}), false}, 3) == Formula::atom(PropId{1}));
  CHECK(print_formula(to_formula(StatementSpec{QuantifiedSubject::nobody(), true}, 3)) == "p0 & p1 & p2");

  AnnouncementSpec a{BeliefLayer{AgentId{2}, true, true}, StatementSpec{QuantifiedSubject::single(AgentId{0}), false}};
  CHECK(print_formula(to_formula(a, 3)) == "~Kw[2] p0");

  HypothesisSpec h{{BeliefLayer{AgentId{0}, false, false}}, {QuantifiedSubject::single(AgentId{0}), false}};
  CHECK(print_formula(to_formula(h, 3)) == "K[0] p0");
  HypothesisSpec h2{{BeliefLayer{AgentId{0}, false, false}, BeliefLayer{AgentId{1}, true, true}},
                    {QuantifiedSubject::single(AgentId{2}), false}};
  CHECK(print_formula(to_formula(h2, 3)) == "K[0] ~Kw[1] p2");
  CHECK(print_formula(to_formula(existential_announcement(), 2)) == "p0 | p1");
}

TEST_CASE("statement subjects are uniform") {
  // Chi-square, 5 degrees of freedom; 15.086 is the p = 0.01 critical value.
  const int n = 3;
  Rng rng(2024);
  std::array<int, n + 3> counts{};
  int negated = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto s = sample_statement(rng, n, 0.5);
    const int c = category(s, n);
    REQUIRE(c >= 0);
    ++counts[static_cast<std::size_t>(c)];
    negated += s.negated;
  }
  const double expected = 10000.0 / (n + 3);
  double chi2 = 0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 15.086);
  CHECK(std::abs(negated / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("announcement sampling") {
  GenConfig cfg;
  Rng rng(99);
  int knowledge = 0, negated = 0, bare = 0;
  while (knowledge < 10000) {
    const auto a = sample_announcement(rng, 3, cfg);
    REQUIRE(modal_depth(to_formula(a, 3)) <= 1);
    if (a.belief) {
      ++knowledge;
      negated += a.belief->negated;
    } else {
      ++bare;
    }
  }
  CHECK(std::abs(negated / 10000.0 - 0.80) < 0.02);
  CHECK(std::abs(static_cast<double>(bare) / (bare + knowledge) - 0.5) < 0.02);
}

TEST_CASE("hypothesis sampling") {
  GenConfig cfg;
  cfg.max_order = 3;
  Rng rng(5);
  std::array<int, 4> orders{};
  for (int i = 0; i < 3000; ++i) {
    const auto h = sample_hypothesis(rng, 3, cfg);
    REQUIRE(h.order() >= 1);
    REQUIRE(h.order() <= 3);
    CHECK(modal_depth(to_formula(h, 3)) == h.order());
    ++orders[static_cast<std::size_t>(h.order())];
  }
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(orders[static_cast<std::size_t>(k)] - 1000) < 150);
  cfg.max_order = 0;
  CHECK_THROWS(sample_hypothesis(rng, 3, cfg));
}

TEST_CASE("make_problem is deterministic and well formed") {
  GenConfig cfg;
  Checker checker;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto r1 = draw_stream(cfg, SetupKind::thirst, i);
    auto r2 = draw_stream(cfg, SetupKind::thirst, i);
    const auto a = make_problem(r1, cfg, checker, i);
    const auto b = make_problem(r2, cfg, checker, i);
    REQUIRE(a.index() == b.index());
    if (const auto* p = std::get_if<ProblemInstance>(&a)) {
      const auto& q = std::get<ProblemInstance>(b);
      CHECK(dedup_key(*p) == dedup_key(q));
      CHECK(p->label == q.label);
      CHECK(p->names == q.names);
      CHECK(p->draw_index == i);
      CHECK(p->announcements.front().spec == existential_announcement());
      CHECK(p->announcements.size() <= static_cast<std::size_t>(p->n_agents) + 1);
      CHECK(testing::naive_valid_after(testing::NaiveModel::full(p->obs), p->announcement_formulas(),
                                       p->hyp().formula) == (p->label == Label::True));
    } else {
      CHECK(std::get<Rejected>(a).draw_index == i);
      CHECK(std::get<Rejected>(a).reason == "contradictory premise");
    }
  }
}

TEST_CASE("three-person forehead instance with an indeterminate hypothesis") {
  // Herbert = agent 0. After "someone is muddy" and "Herbert knows whether
  // someone is muddy", Herbert's own state remains open.
  const std::vector<AnnouncementSpec> anns{
      existential_announcement(),
      AnnouncementSpec{BeliefLayer{AgentId{0}, true, false}, StatementSpec{QuantifiedSubject::someone(), false}}};
  const HypothesisSpec hyp{{BeliefLayer{AgentId{0}, false, false}}, {QuantifiedSubject::single(AgentId{0}), false}};
  Checker checker(Backend::both);
  const auto draw = assemble_problem(SetupKind::forehead_mud, {"Herbert", "Mary", "Paul"},
                                     ObservabilityMatrix::ones_minus_identity(3), anns, hyp, checker);
  const auto& p = std::get<ProblemInstance>(draw);
  CHECK(p.label == Label::False);
  CHECK_FALSE(testing::naive_valid_after(testing::NaiveModel::full(p.obs), p.announcement_formulas(),
                                         p.hyp().formula));
}

TEST_CASE("contradictory components are rejected") {
  const std::vector<AnnouncementSpec> anns{
      existential_announcement(), AnnouncementSpec{std::nullopt, StatementSpec{QuantifiedSubject::nobody(), false}}};
  const HypothesisSpec hyp{{BeliefLayer{AgentId{0}, false, false}}, {QuantifiedSubject::single(AgentId{0}), false}};
  Checker checker;
  const auto draw = assemble_problem(SetupKind::thirst, {"Mary", "Paul"}, ObservabilityMatrix::identity(2), anns,
                                     hyp, checker);
  CHECK(std::holds_alternative<Rejected>(draw));
}

TEST_CASE("generate_balanced: small run") {
  GenerationStats stats;
  const auto out = generate_balanced(small_config(4), &stats);
  REQUIRE(out.size() == 16);
  CHECK(stats.draws >= 16);
  CHECK(stats.draws == 16 + stats.rejected + stats.duplicates + stats.discarded);
  for (std::size_t s = 0; s < all_setups.size(); ++s) {
    int t = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& p = out[s * 4 + i];
      CHECK(p.setup == all_setups[s]);
      t += p.label == Label::True;
      if (i > 0) CHECK(out[s * 4 + i - 1].draw_index < p.draw_index);
    }
    CHECK(t == 2);
  }
}

TEST_CASE("generate_balanced: invariants") {
  auto cfg = small_config(60);
  const auto out = generate_balanced(cfg);
  REQUIRE(out.size() == 240);
  std::set<std::string> keys;
  std::map<SetupKind, int> trues;
  for (const auto& p : out) {
    CHECK(keys.insert(dedup_key(p)).second);
    trues[p.setup] += p.label == Label::True;
    CHECK((p.n_agents == 2 || p.n_agents == 3));
    CHECK(p.hyp().spec.order() <= cfg.max_order);
    for (const auto& a : p.announcements) CHECK(modal_depth(a.formula) <= 1);
    const auto model = testing::NaiveModel::full(p.obs);
    CHECK(testing::naive_valid_after(model, p.announcement_formulas(), p.hyp().formula) ==
          (p.label == Label::True));
  }
  for (auto s : all_setups) CHECK(trues[s] == 30);
}

TEST_CASE("generate_balanced: output independent of thread count and backend") {
  auto cfg = small_config(40);
  const auto base = generate_balanced(cfg);
  cfg.threads = 3;
  const auto threaded = generate_balanced(cfg);
  cfg.threads = 1;
  cfg.backend = Backend::symbolic;
  const auto symbolic = generate_balanced(cfg);
  REQUIRE(base.size() == threaded.size());
  REQUIRE(base.size() == symbolic.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(dedup_key(base[i]) == dedup_key(threaded[i]));
    CHECK(base[i].draw_index == threaded[i].draw_index);
    CHECK(dedup_key(base[i]) == dedup_key(symbolic[i]));
    CHECK(base[i].hyp().text == symbolic[i].hyp().text);
  }
  cfg.seed = 12;
  CHECK(dedup_key(generate_balanced(cfg).front()) != dedup_key(base.front()));
}

TEST_CASE("generate_balanced: stall and config validation") {
  auto cfg = small_config(400);
  cfg.max_draws = 10;
  CHECK_THROWS_AS(generate_balanced(cfg), GenerationStall);

  auto bad = small_config(3);
  CHECK_THROWS_AS(generate_balanced(bad), std::invalid_argument);
  bad = small_config(4);
  bad.p_negate_other = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = small_config(4);
  bad.n_agents_choices = {1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = small_config(4);
  bad.setups.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = small_config(4);
  bad.threads = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(generate_balanced(small_config(0)).empty());
}
