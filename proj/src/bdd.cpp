#include "epistle/bdd.hpp"

#include <algorithm>
#include <cmath>

#include "epistle/errors.hpp"

namespace epistle {

namespace {

constexpr std::size_t computed_limit = std::size_t{1} << 22;

}  // namespace

DdStore::DdStore(std::size_t capacity) : capacity_(std::max<std::size_t>(capacity, 2)) {
  nodes_.push_back({terminal_var, 0, 0});
  nodes_.push_back({terminal_var, 1, 1});
}

Dd DdStore::make(int var, Dd low, Dd high) {
  if (low == high) return low;
  const Key key{static_cast<std::uint64_t>(var), (std::uint64_t{low.id_} << 32) | high.id_};
  if (auto it = unique_.find(key); it != unique_.end()) return Dd(it->second);
  if (nodes_.size() >= capacity_) throw StoreCapacity(capacity_);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({var, low.id_, high.id_});
  unique_.emplace(key, id);
  return Dd(id);
}

Dd DdStore::var(PropId p) {
  if (p.index < 0 || p.index >= terminal_var) throw IndexOutOfRange("bad decision diagram variable");
  return make(p.index, constant(false), constant(true));
}

void DdStore::remember(const Key& key, Dd result) {
  if (computed_.size() >= computed_limit) computed_.clear();
  computed_.emplace(key, result.id_);
}

Dd DdStore::negate(Dd x) {
  if (x.is_terminal()) return constant(x.is_false());
  const Key key{static_cast<std::uint64_t>(Op::negate), x.id_};
  if (auto it = computed_.find(key); it != computed_.end()) return Dd(it->second);
  const auto n = nodes_[x.id_];
  const Dd lo = negate(Dd(n.low));
  const Dd hi = negate(Dd(n.high));
  const Dd result = make(n.var, lo, hi);
  remember(key, result);
  return result;
}

Dd DdStore::apply(Op op, Dd x, Dd y) {
  switch (op) {
    case Op::conj:
      if (x.is_false() || y.is_false()) return constant(false);
      if (x.is_true()) return y;
      if (y.is_true() || x == y) return x;
      if (x.id_ > y.id_) std::swap(x, y);
      break;
    case Op::disj:
      if (x.is_true() || y.is_true()) return constant(true);
      if (x.is_false()) return y;
      if (y.is_false() || x == y) return x;
      if (x.id_ > y.id_) std::swap(x, y);
      break;
    case Op::implies:
      if (x.is_false() || y.is_true() || x == y) return constant(true);
      if (x.is_true()) return y;
      if (y.is_false()) return negate(x);
      break;
    default:
      break;
  }
  const Key key{(static_cast<std::uint64_t>(op) << 32) | x.id_, y.id_};
  if (auto it = computed_.find(key); it != computed_.end()) return Dd(it->second);

  const auto nx = nodes_[x.id_];
  const auto ny = nodes_[y.id_];
  const int top = std::min(nx.var, ny.var);
  const Dd x0 = nx.var == top ? Dd(nx.low) : x;
  const Dd x1 = nx.var == top ? Dd(nx.high) : x;
  const Dd y0 = ny.var == top ? Dd(ny.low) : y;
  const Dd y1 = ny.var == top ? Dd(ny.high) : y;
  const Dd lo = apply(op, x0, y0);
  const Dd hi = apply(op, x1, y1);
  const Dd result = make(top, lo, hi);
  remember(key, result);
  return result;
}

Dd DdStore::conj(Dd x, Dd y) { return apply(Op::conj, x, y); }
Dd DdStore::disj(Dd x, Dd y) { return apply(Op::disj, x, y); }
Dd DdStore::implies(Dd x, Dd y) { return apply(Op::implies, x, y); }

Dd DdStore::ite(Dd c, Dd t, Dd e) {
  if (c.is_true()) return t;
  if (c.is_false()) return e;
  if (t == e) return t;
  if (t.is_true() && e.is_false()) return c;
  if (t.is_false() && e.is_true()) return negate(c);
  const Key key{(static_cast<std::uint64_t>(Op::ite) << 32) | c.id_,
                (std::uint64_t{t.id_} << 32) | e.id_};
  if (auto it = computed_.find(key); it != computed_.end()) return Dd(it->second);
  const auto nc = nodes_[c.id_];
  const auto nt = nodes_[t.id_];
  const auto ne = nodes_[e.id_];
  const int top = std::min({nc.var, nt.var, ne.var});
  auto cof = [&](Dd x, const Node& n, bool hi) { return n.var == top ? Dd(hi ? n.high : n.low) : x; };
  const Dd lo = ite(cof(c, nc, false), cof(t, nt, false), cof(e, ne, false));
  const Dd hi = ite(cof(c, nc, true), cof(t, nt, true), cof(e, ne, true));
  const Dd result = make(top, lo, hi);
  remember(key, result);
  return result;
}

Dd DdStore::exists_rec(std::span<const PropId> vars, std::size_t from, Dd x,
                       std::unordered_map<std::uint32_t, std::uint32_t>& memo) {
  if (x.is_terminal()) return x;
  const auto n = nodes_[x.id_];
  while (from < vars.size() && vars[from].index < n.var) ++from;
  if (from == vars.size()) return x;
  if (auto it = memo.find(x.id_); it != memo.end()) return Dd(it->second);
  const Dd lo = exists_rec(vars, from, Dd(n.low), memo);
  const Dd hi = exists_rec(vars, from, Dd(n.high), memo);
  const Dd result = vars[from].index == n.var ? disj(lo, hi) : make(n.var, lo, hi);
  memo.emplace(x.id_, result.id_);
  return result;
}

Dd DdStore::exists(std::span<const PropId> vars, Dd x) {
  std::vector<PropId> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  return exists_rec(sorted, 0, x, memo);
}

Dd DdStore::forall(std::span<const PropId> vars, Dd x) { return negate(exists(vars, negate(x))); }

bool DdStore::evaluate(Dd x, std::uint64_t assignment) const {
  while (!x.is_terminal()) {
    const auto& n = nodes_[x.id_];
    x = Dd(((assignment >> n.var) & 1u) ? n.high : n.low);
  }
  return x.is_true();
}

double DdStore::sat_count(Dd x, int vars) const {
  std::unordered_map<std::uint32_t, double> memo;
  // Count over the variables at or below the root's level, then scale.
  auto level = [&](Dd d) { return d.is_terminal() ? vars : nodes_[d.id_].var; };
  auto rec = [&](auto&& self, Dd d) -> double {
    if (d.is_terminal()) return d.is_true() ? 1.0 : 0.0;
    if (auto it = memo.find(d.id_); it != memo.end()) return it->second;
    const auto& n = nodes_[d.id_];
    const double lo = self(self, Dd(n.low)) * std::ldexp(1.0, level(Dd(n.low)) - n.var - 1);
    const double hi = self(self, Dd(n.high)) * std::ldexp(1.0, level(Dd(n.high)) - n.var - 1);
    memo.emplace(d.id_, lo + hi);
    return lo + hi;
  };
  return rec(rec, x) * std::ldexp(1.0, level(x));
}

bool DdStore::well_formed() const {
  for (std::size_t i = 2; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.low == n.high) return false;
    if (nodes_[n.low].var <= n.var || nodes_[n.high].var <= n.var) return false;
  }
  return unique_.size() + 2 == nodes_.size();
}

}  // namespace epistle
