#include "epistle/formula.hpp"

#include <cassert>

namespace epistle {

namespace {

// [!ann] f for an announcement-free, knows_whether-free f.
Formula push(const Formula& ann, const Formula& f) {
  auto each = [&] {
    std::vector<Formula> out;
    out.reserve(f.children().size());
    for (const auto& c : f.children()) out.push_back(push(ann, c));
    return out;
  };
  switch (f.kind()) {
    case Connective::atom:
      return Formula::implication(ann, f);
    case Connective::negation:
      return Formula::implication(ann, Formula::negation(push(ann, f.child(0))));
    case Connective::conjunction:
      return Formula::conjunction(each());
    case Connective::disjunction:
      return Formula::disjunction(each());
    case Connective::implication:
      return Formula::implication(push(ann, f.child(0)), push(ann, f.child(1)));
    case Connective::knows:
      return Formula::implication(ann, Formula::knows(f.agent(), push(ann, f.child(0))));
    case Connective::knows_whether:
    case Connective::announcement:
      break;
  }
  assert(false && "push expects a reduced operand");
  return f;
}

Formula reduce(const Formula& f) {
  auto each = [&] {
    std::vector<Formula> out;
    out.reserve(f.children().size());
    for (const auto& c : f.children()) out.push_back(reduce(c));
    return out;
  };
  switch (f.kind()) {
    case Connective::atom:
      return f;
    case Connective::negation:
      return Formula::negation(reduce(f.child(0)));
    case Connective::conjunction:
      return Formula::conjunction(each());
    case Connective::disjunction:
      return Formula::disjunction(each());
    case Connective::implication:
      return Formula::implication(reduce(f.child(0)), reduce(f.child(1)));
    case Connective::knows:
      return Formula::knows(f.agent(), reduce(f.child(0)));
    case Connective::knows_whether:
      return reduce(expand_knows_whether(f));
    case Connective::announcement:
      return push(reduce(f.child(0)), reduce(f.child(1)));
  }
  assert(false);
  return f;
}

}  // namespace

Formula reduce_announcements(const Formula& f) { return reduce(f); }

}  // namespace epistle
