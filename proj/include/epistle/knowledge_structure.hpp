#pragma once

#include <memory>
#include <span>
#include <vector>

#include "epistle/bdd.hpp"
#include "epistle/kripke.hpp"

namespace epistle {

/// Symbolic S5 model: vocabulary p0..p(n-1), a state law over it, and the
/// variables each agent observes. States are the satisfying assignments of
/// the law; agent a cannot tell apart states agreeing on its observables.
class KnowledgeStructure {
 public:
  static constexpr int max_agents = 64;

  /// Law `true`; observables taken from the matrix rows.
  KnowledgeStructure(std::shared_ptr<DdStore> store, const ObservabilityMatrix& obs);

  int vocabulary_size() const { return n_; }
  Dd state_law() const { return law_; }
  std::span<const PropId> observables(AgentId a) const {
    return observables_[static_cast<std::size_t>(a.index)];
  }
  /// Vocabulary minus the agent's observables.
  std::span<const PropId> hidden(AgentId a) const { return hidden_[static_cast<std::size_t>(a.index)]; }
  DdStore& store() const { return *store_; }

  KnowledgeStructure with_law(Dd law) const;

 private:
  std::shared_ptr<DdStore> store_;
  int n_;
  Dd law_;
  std::vector<std::vector<PropId>> observables_;
  std::vector<std::vector<PropId>> hidden_;
};

/// Boolean function of the states where f holds (relative to the law).
Dd translate(const KnowledgeStructure& ks, const Formula& f);

/// Conjoins the translated announcement into the state law.
KnowledgeStructure announce_symbolic(const KnowledgeStructure& ks, const Formula& psi);

bool is_contradictory_symbolic(const KnowledgeStructure& ks0, std::span<const Formula> anns);

/// Same contract as `label`. Throws ContradictoryPremise.
Label label_symbolic(const KnowledgeStructure& ks0, std::span<const Formula> anns, const Formula& hyp);

}  // namespace epistle
