#pragma once

#include <random>

#include "epistle/formula.hpp"

namespace epistle::testing {

struct FormulaShape {
  int n = 3;
  int max_modal_depth = 3;
  int max_announcements = 2;
  int max_height = 4;
};

/// Random formula trees for property tests.
class RandomFormulas {
 public:
  explicit RandomFormulas(std::uint64_t seed) : rng_(seed) {}

  Formula next(const FormulaShape& shape) {
    int anns = shape.max_announcements;
    return gen(shape, shape.max_height, shape.max_modal_depth, anns);
  }

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  Formula gen(const FormulaShape& s, int height, int modal, int& anns) {
    if (height <= 0 || below(5) == 0) return Formula::atom(PropId{below(s.n)});
    for (;;) {
      switch (below(8)) {
        case 0:
          return Formula::atom(PropId{below(s.n)});
        case 1:
          return Formula::negation(gen(s, height - 1, modal, anns));
        case 2:
        case 3: {
          std::vector<Formula> parts;
          const int k = 2 + below(2);
          for (int i = 0; i < k; ++i) parts.push_back(gen(s, height - 1, modal, anns));
          return below(2) ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
        }
        case 4:
          return Formula::implication(gen(s, height - 1, modal, anns), gen(s, height - 1, modal, anns));
        case 5:
        case 6:
          if (modal == 0) break;
          if (below(2)) return Formula::knows(AgentId{below(s.n)}, gen(s, height - 1, modal - 1, anns));
          return Formula::knows_whether(AgentId{below(s.n)}, gen(s, height - 1, modal - 1, anns));
        case 7: {
          if (anns == 0) break;
          --anns;
          // The announced formula's modalities count toward the depth too.
          auto a = gen(s, height - 1, modal, anns);
          return Formula::announced(std::move(a), gen(s, height - 1, modal, anns));
        }
      }
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace epistle::testing
