// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "epistle/checker.hpp"
#include "epistle/crosscheck.hpp"
#include "epistle/dataset.hpp"
#include "epistle/generator.hpp"
#include "epistle/puzzle.hpp"
#include "epistle/syntax.hpp"
#include "support/naive_semantics.hpp"
#include "support/random_formula.hpp"

using namespace epistle;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double golden_limit_ms = 1.0;
constexpr double puzzle16_limit_s = 5.0;
constexpr double crosscheck_limit_s = 300.0;
constexpr std::uint64_t crosscheck_count = 5000;
constexpr int property_samples = 1000;
constexpr int monte_carlo_draws = 10000;
constexpr double entry_sum_tolerance = 0.1;
constexpr double negation_rate = 0.80;
constexpr double negation_tolerance = 0.02;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s: %s\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome golden() {
  const auto obs = ObservabilityMatrix::ones_minus_identity(2);
  const auto hyp = parse_formula("Kw[0] p0 & Kw[1] p1", 2);
  const std::vector<Formula> first{parse_formula("p0 | p1", 2)};
  const std::vector<Formula> second{first[0], parse_formula("~Kw[0] p0 & ~Kw[1] p1", 2)};

  Checker checker(Backend::both);
  double best_ms = 1e9;
  bool ok = true;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = Clock::now();
    const auto a = checker.label(obs, first, hyp);
    const auto b = checker.label(obs, second, hyp);
    best_ms = std::min(best_ms, seconds_since(t0) * 1e3);
    ok = ok && a == Label::False && b == Label::True;
  }
  ok = ok && !testing::naive_valid_after(testing::NaiveModel::full(obs), first, hyp) &&
       testing::naive_valid_after(testing::NaiveModel::full(obs), second, hyp);
  return {ok && best_ms < golden_limit_ms, fmt("False then True on both backends in %.3f ms", best_ms)};
}

Outcome generalized_puzzle() {
  for (int n = 2; n <= 6; ++n) {
    const auto r = run_muddy_children(n, n, Backend::explicit_model);
    for (const auto& round : r.rounds) {
      if (round.everyone_knows != (round.round >= n - 1)) return {false, "explicit N=" + std::to_string(n)};
    }
    if (r.rounds_until_known != n - 1) return {false, "explicit N=" + std::to_string(n)};
  }
  double t16 = 0;
  for (int n = 2; n <= 16; ++n) {
    const auto t0 = Clock::now();
    const auto r = run_muddy_children(n, n, Backend::symbolic);
    if (n == 16) t16 = seconds_since(t0);
    for (const auto& round : r.rounds) {
      if (round.everyone_knows != (round.round >= n - 1)) return {false, "symbolic N=" + std::to_string(n)};
    }
    if (r.rounds_until_known != n - 1) return {false, "symbolic N=" + std::to_string(n)};
  }
  return {t16 < puzzle16_limit_s, fmt("knows iff k >= N-1 for N<=6 explicit, N<=16 symbolic; N=16 in %.3f s", t16)};
}

Outcome backend_crosscheck() {
  const auto t0 = Clock::now();
  const auto r = crosscheck(crosscheck_count, 1);
  const double s = seconds_since(t0);
  return {r.instances == crosscheck_count && r.mismatches == 0 && s < crosscheck_limit_s,
          std::to_string(r.instances) + " instances, " + std::to_string(r.mismatches) + " mismatches" +
              fmt(", %.2f s", s)};
}

std::vector<ObservabilityMatrix> setup_matrices(int n, Rng& rng) {
  std::vector<ObservabilityMatrix> out;
  for (auto s : all_setups) out.push_back(sample_observability(s, n, rng));
  return out;
}

Outcome reduction_soundness() {
  testing::RandomFormulas gen(4);
  Rng rng(4);
  int compared = 0;
  for (int i = 0; i < property_samples; ++i) {
    const int n = 2 + gen.below(2);
    const auto f = gen.next({n, 3, 2, 5});
    const auto reduced = reduce_announcements(f);
    if (announcement_count(reduced) != 0) return {false, "announcement left in " + print_formula(reduced)};
    for (const auto& obs : setup_matrices(n, rng)) {
      const auto m = build_initial_model(n, obs);
      if (extension(m, f) != extension(m, reduced)) return {false, "differs on " + print_formula(f)};
      ++compared;
    }
  }
  return {true, std::to_string(property_samples) + " formulas, " + std::to_string(compared) +
                    " model comparisons, all equal"};
}

Outcome s5_axioms() {
  testing::RandomFormulas gen(5);
  for (int i = 0; i < property_samples; ++i) {
    const int n = 2 + gen.below(2);
    const auto all = testing::all_matrices(n);
    const auto& obs = all[static_cast<std::size_t>(gen.below(static_cast<int>(all.size())))];
    auto m = build_initial_model(n, obs);
    const auto restriction = gen.next({n, 1, 0, 2});
    const auto restricted = announce(m, restriction);
    if (!restricted.live_worlds().empty()) m = restricted;
    const auto f = gen.next({n, 2, 1, 4});
    const AgentId a{gen.below(n)};
    const auto k = Formula::knows(a, f);
    const std::vector<Formula> axioms{
        Formula::implication(k, f), Formula::implication(k, Formula::knows(a, k)),
        Formula::implication(Formula::negation(k), Formula::knows(a, Formula::negation(k)))};
    for (const auto& ax : axioms) {
      const auto truth = extension(m, ax);
      for (auto w : m.live_worlds()) {
        if (!truth[w.bits]) return {false, "violated: " + print_formula(ax)};
      }
    }
  }
  return {true, "T, 4 and 5 valid on " + std::to_string(property_samples) + " (model, formula) pairs"};
}

Outcome dataset_contract() {
  const GenConfig cfg;
  GenerationStats stats;
  const auto problems = generate_balanced(cfg, &stats);
  std::vector<DatasetRecord> records;
  for (const auto& p : problems) records.push_back(to_record(p));

  std::map<std::string, std::pair<int, int>> per_setup;
  std::set<std::string> keys;
  Checker exp(Backend::explicit_model), sym(Backend::symbolic);
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto& p = problems[i];
    auto& c = per_setup[records[i].setup];
    (p.label == Label::True ? c.first : c.second) += 1;
    if (!keys.insert(dedup_key(p)).second) return {false, "duplicate problem"};
    auto model = testing::NaiveModel::full(p.obs);
    for (const auto& a : p.announcements) model = testing::naive_announce(model, a.formula);
    if (model.live.empty()) return {false, "contradictory premise"};
    if (!reverify(records[i], exp) || !reverify(records[i], sym)) return {false, "label does not reverify"};
  }
  for (auto s : all_setups) {
    const auto c = per_setup[std::string(setup_tag(s))];
    if (c.first != cfg.per_setup_count / 2 || c.second != cfg.per_setup_count / 2) {
      return {false, std::string(setup_tag(s)) + " is not balanced"};
    }
  }
  std::vector<DatasetRecord> again;
  for (const auto& p : generate_balanced(cfg)) again.push_back(to_record(p));
  if (to_jsonl(again) != to_jsonl(records)) return {false, "rerun differs"};
  return {true, std::to_string(records.size()) + " records, " + std::to_string(cfg.per_setup_count) +
                    " per setup, 50/50, unique, reverified on both backends, rerun byte-identical"};
}

Outcome illustrated_instances() {
  Checker checker(Backend::both);
  // Three-person forehead instance, Herbert = agent 0.
  const auto obs3 = ObservabilityMatrix::ones_minus_identity(3);
  const std::vector<Formula> anns3{parse_formula("p0 | p1 | p2", 3), parse_formula("Kw[0] (p0 | p1 | p2)", 3)};
  const auto hyp3 = parse_formula("K[0] p0", 3);
  // Two-person mirror instance, Robert = agent 0.
  const auto obs2 = ObservabilityMatrix::ones(2);
  const std::vector<Formula> anns2{parse_formula("p0 | p1", 2), parse_formula("~(p0 & p1)", 2),
                                   parse_formula("~(p0 & p1)", 2)};
  const auto hyp2 = parse_formula("Kw[0] (p0 & p1)", 2);

  const auto l3 = checker.label(obs3, anns3, hyp3);
  const auto l2 = checker.label(obs2, anns2, hyp2);
  const bool oracle = !testing::naive_valid_after(testing::NaiveModel::full(obs3), anns3, hyp3) &&
                      testing::naive_valid_after(testing::NaiveModel::full(obs2), anns2, hyp2);
  return {l3 == Label::False && l2 == Label::True && oracle,
          std::string("forehead instance ") + std::string(to_string(l3)) + ", mirror instance " +
              std::string(to_string(l2))};
}

Outcome monte_carlo() {
  Rng rng(8);
  const int n = 3;
  long total = 0;
  for (int i = 0; i < monte_carlo_draws; ++i) {
    total += sample_observability(SetupKind::explicit_card, n, rng).entry_sum();
  }
  const double mean = static_cast<double>(total) / monte_carlo_draws;

  const GenConfig cfg;
  int knowledge = 0, negated = 0;
  while (knowledge < monte_carlo_draws) {
    const auto a = sample_announcement(rng, n, cfg);
    if (!a.belief) continue;
    ++knowledge;
    negated += a.belief->negated;
  }
  const double rate = static_cast<double>(negated) / knowledge;
  const bool ok = std::abs(mean - n) < entry_sum_tolerance && std::abs(rate - negation_rate) < negation_tolerance;
  return {ok, fmt("mean entry sum %.4f (N=3), knowledge negation rate %.4f", mean, rate)};
}

}  // namespace

int main() {
  report(1, "muddy children golden pair", golden);
  report(2, "generalized muddy children", generalized_puzzle);
  report(3, "explicit vs symbolic cross-check", backend_crosscheck);
  report(4, "reduction axioms preserve truth", reduction_soundness);
  report(5, "S5 axioms", s5_axioms);
  report(6, "default dataset contract", dataset_contract);
  report(7, "illustrated instances", illustrated_instances);
  report(8, "sampling parameters", monte_carlo);
  return failures == 0 ? 0 : 1;
}
