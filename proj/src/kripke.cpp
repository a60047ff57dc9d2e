#include "epistle/kripke.hpp"

#include <cassert>
#include <unordered_map>

#include "epistle/errors.hpp"

namespace epistle {

ObservabilityMatrix::ObservabilityMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

ObservabilityMatrix ObservabilityMatrix::ones(int n) {
  ObservabilityMatrix m(n);
  std::fill(m.bits_.begin(), m.bits_.end(), 1);
  return m;
}

ObservabilityMatrix ObservabilityMatrix::identity(int n) {
  ObservabilityMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(AgentId{i}, PropId{i}, true);
  return m;
}

ObservabilityMatrix ObservabilityMatrix::ones_minus_identity(int n) {
  auto m = ones(n);
  for (int i = 0; i < n; ++i) m.set(AgentId{i}, PropId{i}, false);
  return m;
}

ObservabilityMatrix ObservabilityMatrix::from_rows(const std::string& rows) {
  std::vector<std::string> parsed;
  std::string row;
  for (char c : rows) {
    if (c == ',') {
      parsed.push_back(row);
      row.clear();
    } else if (c == '0' || c == '1') {
      row += c;
    } else if (c != ' ') {
      throw std::invalid_argument("observability rows may only contain 0, 1 and commas");
    }
  }
  parsed.push_back(row);
  const int n = static_cast<int>(parsed.size());
  ObservabilityMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(parsed[static_cast<std::size_t>(i)].size()) != n) {
      throw std::invalid_argument("observability matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      m.set(AgentId{i}, PropId{j}, parsed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == '1');
    }
  }
  return m;
}

std::string ObservabilityMatrix::to_rows() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    for (int j = 0; j < n_; ++j) out += observes(AgentId{i}, PropId{j}) ? '1' : '0';
  }
  return out;
}

bool ObservabilityMatrix::observes(AgentId agent, PropId prop) const {
  return bits_[static_cast<std::size_t>(agent.index * n_ + prop.index)] != 0;
}

void ObservabilityMatrix::set(AgentId agent, PropId prop, bool value) {
  if (agent.index < 0 || agent.index >= n_ || prop.index < 0 || prop.index >= n_) {
    throw IndexOutOfRange("observability entry out of range");
  }
  bits_[static_cast<std::size_t>(agent.index * n_ + prop.index)] = value ? 1 : 0;
}

std::vector<PropId> ObservabilityMatrix::observed_by(AgentId agent) const {
  std::vector<PropId> out;
  for (int j = 0; j < n_; ++j) {
    if (observes(agent, PropId{j})) out.push_back(PropId{j});
  }
  return out;
}

int ObservabilityMatrix::entry_sum() const {
  int total = 0;
  for (auto b : bits_) total += b;
  return total;
}

KripkeModel::KripkeModel(const ObservabilityMatrix& obs) : obs_(obs) {
  const int n = obs.size();
  if (n < 1 || n > max_agents) {
    throw SizeLimit("explicit backend supports 1.." + std::to_string(max_agents) + " agents, got " +
                    std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    std::uint32_t mask = 0;
    for (auto p : obs.observed_by(AgentId{i})) mask |= 1u << p.index;
    masks_.push_back(mask);
  }
  live_.assign(std::size_t{1} << n, 1);
  live_count_ = live_.size();
}

std::vector<World> KripkeModel::live_worlds() const {
  std::vector<World> out;
  out.reserve(live_count_);
  for (std::uint32_t w = 0; w < live_.size(); ++w) {
    if (live_[w]) out.push_back(World{w});
  }
  return out;
}

bool KripkeModel::indistinguishable(AgentId a, World w, World v) const {
  const auto mask = observed_mask(a);
  return is_live(w) && is_live(v) && (w.bits & mask) == (v.bits & mask);
}

KripkeModel KripkeModel::restricted(const WorldSet& keep) const {
  KripkeModel out = *this;
  out.live_count_ = 0;
  for (std::size_t w = 0; w < live_.size(); ++w) {
    out.live_[w] = live_[w] && keep[w];
    out.live_count_ += out.live_[w];
  }
  return out;
}

KripkeModel build_initial_model(int n, const ObservabilityMatrix& obs) {
  if (n < 1 || n > KripkeModel::max_agents) {
    throw SizeLimit("explicit backend supports 1.." + std::to_string(KripkeModel::max_agents) +
                    " agents, got " + std::to_string(n));
  }
  if (obs.size() != n) throw std::invalid_argument("observability matrix size differs from agent count");
  return KripkeModel(obs);
}

namespace {

// Bottom-up evaluation over all live worlds. Shared subformulas are evaluated
// once per model.
class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m) {}

  const WorldSet& operator()(const Formula& f) {
    if (auto it = memo_.find(f.identity()); it != memo_.end()) return it->second;
    auto result = compute(f);
    return memo_.emplace(f.identity(), std::move(result)).first->second;
  }

 private:
  WorldSet compute(const Formula& f) {
    const auto& live = m_.live();
    const std::size_t size = live.size();
    WorldSet out(size, 0);
    switch (f.kind()) {
      case Connective::atom: {
        const auto bit = static_cast<unsigned>(f.prop().index);
        for (std::size_t w = 0; w < size; ++w) out[w] = live[w] && ((w >> bit) & 1u);
        break;
      }
      case Connective::negation: {
        const auto& x = (*this)(f.child(0));
        for (std::size_t w = 0; w < size; ++w) out[w] = live[w] && !x[w];
        break;
      }
      case Connective::conjunction: {
        out = live;
        for (const auto& c : f.children()) {
          const auto& x = (*this)(c);
          for (std::size_t w = 0; w < size; ++w) out[w] &= x[w];
        }
        break;
      }
      case Connective::disjunction: {
        for (const auto& c : f.children()) {
          const auto& x = (*this)(c);
          for (std::size_t w = 0; w < size; ++w) out[w] |= x[w];
        }
        break;
      }
      case Connective::implication: {
        const auto& x = (*this)(f.child(0));
        const auto& y = (*this)(f.child(1));
        for (std::size_t w = 0; w < size; ++w) out[w] = live[w] && (!x[w] || y[w]);
        break;
      }
      case Connective::knows:
      case Connective::knows_whether: {
        // Worlds in one class share the observed bits, so the masked
        // valuation names the class.
        const auto& x = (*this)(f.child(0));
        const auto mask = m_.observed_mask(f.agent());
        std::vector<std::uint8_t> all_true(size, 1), all_false(size, 1);
        for (std::size_t w = 0; w < size; ++w) {
          if (!live[w]) continue;
          if (x[w]) {
            all_false[w & mask] = 0;
          } else {
            all_true[w & mask] = 0;
          }
        }
        const bool whether = f.kind() == Connective::knows_whether;
        for (std::size_t w = 0; w < size; ++w) {
          if (!live[w]) continue;
          out[w] = all_true[w & mask] || (whether && all_false[w & mask]);
        }
        break;
      }
      case Connective::announcement: {
        const auto& ann = (*this)(f.child(0));
        const auto after = m_.restricted(ann);
        const auto cont = Evaluator(after)(f.child(1));
        for (std::size_t w = 0; w < size; ++w) out[w] = live[w] && (!ann[w] || cont[w]);
        break;
      }
    }
    return out;
  }

  const KripkeModel& m_;
  std::unordered_map<const void*, WorldSet> memo_;
};

bool holds_everywhere(const KripkeModel& m, const WorldSet& truth) {
  const auto& live = m.live();
  for (std::size_t w = 0; w < live.size(); ++w) {
    if (live[w] && !truth[w]) return false;
  }
  return true;
}

}  // namespace

WorldSet extension(const KripkeModel& m, const Formula& f) { return Evaluator(m)(f); }

bool eval(const KripkeModel& m, World w, const Formula& f) {
  if (!m.is_live(w)) throw DeadWorld("world " + std::to_string(w.bits) + " is not live");
  return extension(m, f)[w.bits] != 0;
}

KripkeModel announce(const KripkeModel& m, const Formula& psi) { return m.restricted(extension(m, psi)); }

KripkeModel announce_all(const KripkeModel& m, std::span<const Formula> anns) {
  KripkeModel current = m;
  for (const auto& a : anns) current = announce(current, a);
  return current;
}

bool is_contradictory(const KripkeModel& m0, std::span<const Formula> anns) {
  // Restriction is monotone: an empty step stays empty.
  return announce_all(m0, anns).empty();
}

Label label(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp) {
  const auto final_model = announce_all(m0, anns);
  if (final_model.empty()) throw ContradictoryPremise();
  return to_label(holds_everywhere(final_model, extension(final_model, hyp)));
}

Formula announcement_prefixed(std::span<const Formula> anns, const Formula& hyp) {
  Formula f = hyp;
  for (auto it = anns.rbegin(); it != anns.rend(); ++it) f = Formula::announced(*it, f);
  return f;
}

Label label_by_prefix(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp) {
  if (is_contradictory(m0, anns)) throw ContradictoryPremise();
  return to_label(holds_everywhere(m0, extension(m0, announcement_prefixed(anns, hyp))));
}

Label label_by_reduction(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp) {
  if (is_contradictory(m0, anns)) throw ContradictoryPremise();
  const auto reduced = reduce_announcements(announcement_prefixed(anns, hyp));
  return to_label(holds_everywhere(m0, extension(m0, reduced)));
}

}  // namespace epistle
