#include "epistle/formula.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace epistle {

Formula Formula::make(Connective kind, int index, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{kind, index, std::move(children)}));
}

Formula Formula::atom(PropId p) { return make(Connective::atom, p.index, {}); }

Formula Formula::negation(Formula f) { return make(Connective::negation, 0, {std::move(f)}); }

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("conjunction needs an operand");
  if (operands.size() == 1) return std::move(operands.front());
  return make(Connective::conjunction, 0, std::move(operands));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) throw std::invalid_argument("disjunction needs an operand");
  if (operands.size() == 1) return std::move(operands.front());
  return make(Connective::disjunction, 0, std::move(operands));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::implication, 0, {std::move(lhs), std::move(rhs)});
}

Formula Formula::knows(AgentId a, Formula f) {
  return make(Connective::knows, a.index, {std::move(f)});
}

Formula Formula::knows_whether(AgentId a, Formula f) {
  return make(Connective::knows_whether, a.index, {std::move(f)});
}

Formula Formula::announced(Formula announcement, Formula continuation) {
  return make(Connective::announcement, 0, {std::move(announcement), std::move(continuation)});
}

Connective Formula::kind() const { return node_->kind; }
PropId Formula::prop() const { return PropId{node_->index}; }
AgentId Formula::agent() const { return AgentId{node_->index}; }
std::span<const Formula> Formula::children() const { return node_->children; }

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  return a.kind == b.kind && a.index == b.index && a.children == b.children;
}

Formula negate(const Formula& f) {
  if (f.kind() == Connective::negation) return f.child(0);
  return Formula::negation(f);
}

int modal_depth(const Formula& f) {
  int deepest = 0;
  for (const auto& c : f.children()) deepest = std::max(deepest, modal_depth(c));
  const bool modal = f.kind() == Connective::knows || f.kind() == Connective::knows_whether;
  return deepest + (modal ? 1 : 0);
}

int announcement_count(const Formula& f) {
  int total = f.kind() == Connective::announcement ? 1 : 0;
  for (const auto& c : f.children()) total += announcement_count(c);
  return total;
}

namespace {

void collect(const Formula& f, std::set<PropId>* atoms, std::set<AgentId>* agents) {
  switch (f.kind()) {
    case Connective::atom:
      if (atoms) atoms->insert(f.prop());
      break;
    case Connective::knows:
    case Connective::knows_whether:
      if (agents) agents->insert(f.agent());
      break;
    default:
      break;
  }
  for (const auto& c : f.children()) collect(c, atoms, agents);
}

std::vector<Formula> map_children(const Formula& f, Formula (*fn)(const Formula&)) {
  std::vector<Formula> out;
  out.reserve(f.children().size());
  for (const auto& c : f.children()) out.push_back(fn(c));
  return out;
}

}  // namespace

std::set<PropId> atoms_of(const Formula& f) {
  std::set<PropId> atoms;
  collect(f, &atoms, nullptr);
  return atoms;
}

std::set<AgentId> agents_of(const Formula& f) {
  std::set<AgentId> agents;
  collect(f, nullptr, &agents);
  return agents;
}

Formula expand_knows_whether(const Formula& f) {
  switch (f.kind()) {
    case Connective::atom:
      return f;
    case Connective::negation:
      return Formula::negation(expand_knows_whether(f.child(0)));
    case Connective::conjunction:
      return Formula::conjunction(map_children(f, expand_knows_whether));
    case Connective::disjunction:
      return Formula::disjunction(map_children(f, expand_knows_whether));
    case Connective::implication:
      return Formula::implication(expand_knows_whether(f.child(0)),
                                  expand_knows_whether(f.child(1)));
    case Connective::knows:
      return Formula::knows(f.agent(), expand_knows_whether(f.child(0)));
    case Connective::knows_whether: {
      auto inner = expand_knows_whether(f.child(0));
      return Formula::disjunction({Formula::knows(f.agent(), inner),
                                   Formula::knows(f.agent(), Formula::negation(inner))});
    }
    case Connective::announcement:
      return Formula::announced(expand_knows_whether(f.child(0)),
                                expand_knows_whether(f.child(1)));
  }
  assert(false);
  return f;
}

Formula desugar_subject(const QuantifiedSubject& subject, bool negate_predicate, int n) {
  if (n < 1) throw std::invalid_argument("desugar_subject: need at least one agent");
  auto literal = [&](int i) {
    auto a = Formula::atom(PropId{i});
    return negate_predicate ? Formula::negation(a) : a;
  };
  auto literals = [&](bool flip) {
    std::vector<Formula> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(flip ? negate(literal(i)) : literal(i));
    return out;
  };
  using Kind = QuantifiedSubject::Kind;
  switch (subject.kind) {
    case Kind::agent:
      return literal(subject.agent.index);
    case Kind::everyone:
      return Formula::conjunction(literals(false));
    case Kind::nobody:
      return Formula::conjunction(literals(true));
    case Kind::not_everyone:
      return negate(Formula::conjunction(literals(false)));
    case Kind::someone:
      return Formula::disjunction(literals(false));
  }
  assert(false);
  return literal(0);
}

}  // namespace epistle
