#include "epistle/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "epistle/errors.hpp"
#include "epistle/syntax.hpp"
#include "epistle/verbalizer.hpp"

namespace epistle {

void GenConfig::validate() const {
  auto probability = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must be in [0,1]");
  };
  probability(p_negate_announcement_knowledge, "p_negate_announcement_knowledge");
  probability(p_negate_other, "p_negate_other");
  if (n_agents_choices.empty()) throw std::invalid_argument("n_agents_choices is empty");
  for (int n : n_agents_choices) {
    if (n < 2 || n > KripkeModel::max_agents) throw std::invalid_argument("agent count out of range");
  }
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (per_setup_count < 0 || per_setup_count % 2 != 0) {
    throw std::invalid_argument("per_setup_count must be a non-negative even number");
  }
  if (setups.empty()) throw std::invalid_argument("no setups selected");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

StatementSpec sample_statement(Rng& rng, int n, double negation_prob) {
  const auto category = static_cast<int>(rng.below(static_cast<std::size_t>(n) + 3));
  StatementSpec s;
  if (category < n) {
    s.subject = QuantifiedSubject::single(AgentId{category});
  } else if (category == n) {
    s.subject = QuantifiedSubject::everyone();
  } else if (category == n + 1) {
    s.subject = QuantifiedSubject::not_everyone();
  } else {
    s.subject = QuantifiedSubject::nobody();
  }
  s.negated = rng.bernoulli(negation_prob);
  return s;
}

namespace {

BeliefLayer sample_layer(Rng& rng, int n, double negation_prob) {
  BeliefLayer layer;
  layer.knower = AgentId{static_cast<int>(rng.below(static_cast<std::size_t>(n)))};
  layer.whether = rng.below(2) == 1;
  layer.negated = rng.bernoulli(negation_prob);
  return layer;
}

}  // namespace

AnnouncementSpec sample_announcement(Rng& rng, int n, const GenConfig& cfg) {
  AnnouncementSpec a;
  if (rng.below(2) == 1) a.belief = sample_layer(rng, n, cfg.p_negate_announcement_knowledge);
  a.statement = sample_statement(rng, n, cfg.p_negate_other);
  return a;
}

HypothesisSpec sample_hypothesis(Rng& rng, int n, const GenConfig& cfg) {
  if (cfg.max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  HypothesisSpec h;
  const auto order = 1 + rng.below(static_cast<std::size_t>(cfg.max_order));
  for (std::size_t i = 0; i < order; ++i) h.layers.push_back(sample_layer(rng, n, cfg.p_negate_other));
  h.base = sample_statement(rng, n, cfg.p_negate_other);
  return h;
}

Draw assemble_problem(SetupKind setup, std::vector<std::string> names, ObservabilityMatrix obs,
                      const std::vector<AnnouncementSpec>& announcements, const HypothesisSpec& hypothesis,
                      Checker& checker) {
  ProblemInstance p;
  p.setup = setup;
  p.n_agents = obs.size();
  p.names = std::move(names);
  p.obs = std::move(obs);
  for (const auto& spec : announcements) {
    p.announcements.push_back(
        {spec, to_formula(spec, p.n_agents), render_announcement(setup, spec, p.names)});
  }
  p.hypothesis = Hypothesis{hypothesis, to_formula(hypothesis, p.n_agents),
                            render_hypothesis(setup, hypothesis, p.names, !announcements.empty())};
  const auto anns = p.announcement_formulas();
  if (checker.is_contradictory(p.obs, anns)) return Rejected{0, "contradictory premise"};
  p.label = checker.label(p.obs, anns, p.hyp().formula);
  return p;
}

Draw make_problem(Rng& rng, const GenConfig& cfg, Checker& checker, std::uint64_t draw_index) {
  const auto setup = cfg.setups[rng.below(cfg.setups.size())];
  const int n = cfg.n_agents_choices[rng.below(cfg.n_agents_choices.size())];
  auto obs = sample_observability(setup, n, rng);
  auto names = NamePool::builtin().draw(rng, n);

  std::vector<AnnouncementSpec> anns{existential_announcement()};
  const auto extra = rng.below(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < extra; ++i) anns.push_back(sample_announcement(rng, n, cfg));
  const auto hyp = sample_hypothesis(rng, n, cfg);

  auto draw = assemble_problem(setup, std::move(names), std::move(obs), anns, hyp, checker);
  if (auto* p = std::get_if<ProblemInstance>(&draw)) {
    p->seed = cfg.seed;
    p->draw_index = draw_index;
  } else {
    std::get<Rejected>(draw).draw_index = draw_index;
  }
  return draw;
}

Rng draw_stream(const GenConfig& cfg, SetupKind setup, std::uint64_t index) {
  return Rng::substream(cfg.seed, static_cast<std::uint64_t>(setup_ordinal(setup)), index);
}

std::string dedup_key(const ProblemInstance& p) {
  std::string key(setup_tag(p.setup));
  key += '/';
  key += std::to_string(p.n_agents);
  for (const auto& a : p.announcements) key += '\n' + print_formula(a.formula);
  key += "\n?" + print_formula(p.hyp().formula);
  return key;
}

namespace {

// Draws [first, first + count) for one setup, fanned out over the checkers.
std::vector<Draw> draw_batch(const GenConfig& cfg, SetupKind setup, std::uint64_t first,
                             std::size_t count, std::vector<Checker>& checkers) {
  std::vector<std::optional<Draw>> slots(count);
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < count; i += checkers.size()) {
      auto rng = draw_stream(cfg, setup, first + i);
      slots[i] = make_problem(rng, cfg, checkers[worker], first + i);
    }
  };
  if (checkers.size() == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < checkers.size(); ++w) pool.emplace_back(work, w);
  }
  std::vector<Draw> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<ProblemInstance> generate_balanced(const GenConfig& cfg, GenerationStats* stats) {
  cfg.validate();
  GenerationStats local;
  std::vector<Checker> checkers;
  for (int i = 0; i < cfg.threads; ++i) checkers.emplace_back(cfg.backend, cfg.node_capacity);

  const auto want = static_cast<std::size_t>(cfg.per_setup_count / 2);
  const std::size_t batch = 64 * static_cast<std::size_t>(cfg.threads);
  std::vector<ProblemInstance> out;

  for (auto setup : cfg.setups) {
    GenConfig single = cfg;
    single.setups = {setup};
    std::vector<ProblemInstance> buckets[2];
    std::unordered_set<std::string> seen;
    std::uint64_t index = 0;
    auto filled = [&] { return buckets[0].size() >= want && buckets[1].size() >= want; };

    while (!filled()) {
      if (index >= cfg.max_draws) {
        throw GenerationStall("setup " + std::string(setup_tag(setup)) + ": " +
                              std::to_string(cfg.max_draws) + " draws did not fill both label buckets");
      }
      const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(batch, cfg.max_draws - index));
      for (auto& d : draw_batch(single, setup, index, count, checkers)) {
        if (filled()) break;
        ++local.draws;
        if (std::holds_alternative<Rejected>(d)) {
          ++local.rejected;
          continue;
        }
        auto& p = std::get<ProblemInstance>(d);
        if (!seen.insert(dedup_key(p)).second) {
          ++local.duplicates;
          continue;
        }
        auto& bucket = buckets[p.label == Label::True ? 1 : 0];
        if (bucket.size() >= want) {
          ++local.discarded;
          continue;
        }
        bucket.push_back(std::move(p));
      }
      index += count;
    }

    std::vector<ProblemInstance> merged;
    merged.reserve(2 * want);
    std::merge(std::make_move_iterator(buckets[0].begin()), std::make_move_iterator(buckets[0].end()),
               std::make_move_iterator(buckets[1].begin()), std::make_move_iterator(buckets[1].end()),
               std::back_inserter(merged),
               [](const ProblemInstance& a, const ProblemInstance& b) { return a.draw_index < b.draw_index; });
    for (auto& p : merged) out.push_back(std::move(p));
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace epistle
