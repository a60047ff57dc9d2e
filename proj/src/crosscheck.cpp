#include "epistle/crosscheck.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "epistle/generator.hpp"
#include "epistle/syntax.hpp"

namespace epistle {

namespace {

constexpr std::uint64_t crosscheck_stream = 0xC0FFEE;

TimingSummary summarize(std::vector<double> samples) {
  TimingSummary t;
  if (samples.empty()) return t;
  std::sort(samples.begin(), samples.end());
  auto at = [&](double q) {
    const auto i = static_cast<std::size_t>(q * static_cast<double>(samples.size() - 1));
    return samples[i];
  };
  t.p50_us = at(0.50);
  t.p90_us = at(0.90);
  t.p99_us = at(0.99);
  t.max_us = samples.back();
  return t;
}

template <typename F>
double timed_us(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CrosscheckReport crosscheck(std::uint64_t count, std::uint64_t seed, const Labeler& lhs, const Labeler& rhs) {
  CrosscheckReport report;
  GenConfig cfg;
  cfg.seed = seed;
  Checker filter(Backend::explicit_model);
  std::vector<double> lhs_times, rhs_times;

  for (std::uint64_t index = 0; report.instances < count; ++index) {
    auto rng = Rng::substream(seed, crosscheck_stream, index);
    auto draw = make_problem(rng, cfg, filter, index);
    if (std::holds_alternative<Rejected>(draw)) {
      ++report.rejected;
      continue;
    }
    const auto& p = std::get<ProblemInstance>(draw);
    const auto anns = p.announcement_formulas();
    Label a{}, b{};
    lhs_times.push_back(timed_us([&] { a = lhs(p.obs, anns, p.hyp().formula); }));
    rhs_times.push_back(timed_us([&] { b = rhs(p.obs, anns, p.hyp().formula); }));
    ++report.instances;
    if (a != b) {
      ++report.mismatches;
      if (report.examples.size() < 5) {
        std::string e = "obs=" + p.obs.to_rows();
        for (const auto& f : anns) e += " [! " + print_formula(f) + "]";
        e += " ? " + print_formula(p.hyp().formula);
        e += std::string(" lhs=") + to_string(a) + " rhs=" + to_string(b);
        report.examples.push_back(std::move(e));
      }
    }
  }
  report.lhs = summarize(std::move(lhs_times));
  report.rhs = summarize(std::move(rhs_times));
  return report;
}

CrosscheckReport crosscheck(std::uint64_t count, std::uint64_t seed, std::size_t node_capacity) {
  auto checker = std::make_shared<Checker>(Backend::both, node_capacity);
  return crosscheck(
      count, seed,
      [checker](const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp) {
        return checker->label_explicit(obs, anns, hyp);
      },
      [checker](const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp) {
        return checker->label_symbolic(obs, anns, hyp);
      });
}

int crosscheck_exit_code(const CrosscheckReport& report) { return report.mismatches == 0 ? 0 : 5; }

}  // namespace epistle
