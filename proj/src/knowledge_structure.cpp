#include "epistle/knowledge_structure.hpp"

#include <cassert>

#include "epistle/errors.hpp"

namespace epistle {

KnowledgeStructure::KnowledgeStructure(std::shared_ptr<DdStore> store, const ObservabilityMatrix& obs)
    : store_(std::move(store)), n_(obs.size()), law_(store_->constant(true)) {
  if (n_ < 1 || n_ > max_agents) {
    throw SizeLimit("symbolic backend supports 1.." + std::to_string(max_agents) + " agents, got " +
                    std::to_string(n_));
  }
  for (int i = 0; i < n_; ++i) {
    std::vector<PropId> seen, unseen;
    for (int j = 0; j < n_; ++j) {
      (obs.observes(AgentId{i}, PropId{j}) ? seen : unseen).push_back(PropId{j});
    }
    observables_.push_back(std::move(seen));
    hidden_.push_back(std::move(unseen));
  }
}

KnowledgeStructure KnowledgeStructure::with_law(Dd law) const {
  KnowledgeStructure out = *this;
  out.law_ = law;
  return out;
}

namespace {

Dd knows(const KnowledgeStructure& ks, AgentId a, Dd inner) {
  auto& dd = ks.store();
  return dd.forall(ks.hidden(a), dd.implies(ks.state_law(), inner));
}

}  // namespace

Dd translate(const KnowledgeStructure& ks, const Formula& f) {
  auto& dd = ks.store();
  switch (f.kind()) {
    case Connective::atom:
      if (f.prop().index >= ks.vocabulary_size()) throw IndexOutOfRange("atom outside vocabulary");
      return dd.var(f.prop());
    case Connective::negation:
      return dd.negate(translate(ks, f.child(0)));
    case Connective::conjunction: {
      Dd acc = dd.constant(true);
      for (const auto& c : f.children()) acc = dd.conj(acc, translate(ks, c));
      return acc;
    }
    case Connective::disjunction: {
      Dd acc = dd.constant(false);
      for (const auto& c : f.children()) acc = dd.disj(acc, translate(ks, c));
      return acc;
    }
    case Connective::implication:
      return dd.implies(translate(ks, f.child(0)), translate(ks, f.child(1)));
    case Connective::knows:
      return knows(ks, f.agent(), translate(ks, f.child(0)));
    case Connective::knows_whether: {
      const Dd inner = translate(ks, f.child(0));
      return dd.disj(knows(ks, f.agent(), inner), knows(ks, f.agent(), dd.negate(inner)));
    }
    case Connective::announcement: {
      const Dd ann = translate(ks, f.child(0));
      const auto after = ks.with_law(dd.conj(ks.state_law(), ann));
      return dd.implies(ann, translate(after, f.child(1)));
    }
  }
  assert(false);
  return dd.constant(false);
}

KnowledgeStructure announce_symbolic(const KnowledgeStructure& ks, const Formula& psi) {
  return ks.with_law(ks.store().conj(ks.state_law(), translate(ks, psi)));
}

namespace {

KnowledgeStructure announce_all_symbolic(const KnowledgeStructure& ks0, std::span<const Formula> anns) {
  KnowledgeStructure ks = ks0;
  for (const auto& a : anns) ks = announce_symbolic(ks, a);
  return ks;
}

}  // namespace

bool is_contradictory_symbolic(const KnowledgeStructure& ks0, std::span<const Formula> anns) {
  return announce_all_symbolic(ks0, anns).state_law().is_false();
}

Label label_symbolic(const KnowledgeStructure& ks0, std::span<const Formula> anns, const Formula& hyp) {
  const auto ks = announce_all_symbolic(ks0, anns);
  if (ks.state_law().is_false()) throw ContradictoryPremise();
  auto& dd = ks.store();
  return to_label(dd.implies(ks.state_law(), translate(ks, hyp)).is_true());
}

}  // namespace epistle
