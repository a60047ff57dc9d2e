#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epistle/formula.hpp"

namespace epistle {

/// Entry (i, j) set means agent i initially knows whether predicate j holds.
class ObservabilityMatrix {
 public:
  explicit ObservabilityMatrix(int n = 0);

  static ObservabilityMatrix ones(int n);
  static ObservabilityMatrix identity(int n);
  static ObservabilityMatrix ones_minus_identity(int n);

  /// Rows separated by commas, e.g. "011,101,110".
  static ObservabilityMatrix from_rows(const std::string& rows);
  std::string to_rows() const;

  int size() const { return n_; }
  bool observes(AgentId agent, PropId prop) const;
  void set(AgentId agent, PropId prop, bool value);
  std::vector<PropId> observed_by(AgentId agent) const;
  int entry_sum() const;

  bool operator==(const ObservabilityMatrix&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Valuation; bit j is the truth of predicate j.
struct World {
  std::uint32_t bits = 0;
  bool holds(PropId p) const { return (bits >> p.index) & 1u; }
  auto operator<=>(const World&) const = default;
};

/// Per-world truth table indexed by World::bits.
using WorldSet = std::vector<std::uint8_t>;

/// Explicit S5 model over all 2^n valuations. Agent i cannot tell apart two
/// live worlds that agree on every predicate i observes.
class KripkeModel {
 public:
  static constexpr int max_agents = 20;

  explicit KripkeModel(const ObservabilityMatrix& obs);

  int agents() const { return obs_.size(); }
  const ObservabilityMatrix& observability() const { return obs_; }
  std::size_t universe_size() const { return live_.size(); }
  std::size_t live_count() const { return live_count_; }
  bool empty() const { return live_count_ == 0; }
  bool is_live(World w) const { return w.bits < live_.size() && live_[w.bits]; }
  const WorldSet& live() const { return live_; }
  std::vector<World> live_worlds() const;

  /// Bitmask of the predicates agent a observes.
  std::uint32_t observed_mask(AgentId a) const { return masks_[static_cast<std::size_t>(a.index)]; }
  bool indistinguishable(AgentId a, World w, World v) const;

  /// Model restricted to the worlds marked in `keep`.
  KripkeModel restricted(const WorldSet& keep) const;

 private:
  ObservabilityMatrix obs_;
  std::vector<std::uint32_t> masks_;
  WorldSet live_;
  std::size_t live_count_ = 0;
};

enum class Label : std::uint8_t { False, True };
inline const char* to_string(Label l) { return l == Label::True ? "True" : "False"; }
inline Label to_label(bool b) { return b ? Label::True : Label::False; }

/// Throws SizeLimit when n exceeds KripkeModel::max_agents.
KripkeModel build_initial_model(int n, const ObservabilityMatrix& obs);

/// Truth value of f at every live world (dead entries are 0).
WorldSet extension(const KripkeModel& m, const Formula& f);

/// Throws DeadWorld if w is not live in m.
bool eval(const KripkeModel& m, World w, const Formula& f);

/// Keeps the worlds where psi holds. May produce an empty model.
KripkeModel announce(const KripkeModel& m, const Formula& psi);

/// Applies announcements left to right.
KripkeModel announce_all(const KripkeModel& m, std::span<const Formula> anns);

bool is_contradictory(const KripkeModel& m0, std::span<const Formula> anns);

/// True iff hyp holds at every world surviving the announcements.
/// Throws ContradictoryPremise when no world survives.
Label label(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp);

/// Nests the announcements around hyp: [!a1]...[!ak] hyp.
Formula announcement_prefixed(std::span<const Formula> anns, const Formula& hyp);

/// Second route to `label`: checks the announcement-prefixed formula at every
/// initial world without restricting the model step by step.
Label label_by_prefix(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp);

/// Third route: eliminates announcements with the reduction axioms and
/// checks the result on the initial model.
Label label_by_reduction(const KripkeModel& m0, std::span<const Formula> anns, const Formula& hyp);

}  // namespace epistle
