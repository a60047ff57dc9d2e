#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace epistle {

struct AgentId {
  int index = 0;
  auto operator<=>(const AgentId&) const = default;
};

/// Predicate `index` is the one about agent `index`.
struct PropId {
  int index = 0;
  auto operator<=>(const PropId&) const = default;
};

enum class Connective : std::uint8_t {
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  knows,
  knows_whether,
  announcement,
};

/// Immutable epistemic formula. Copies share structure.
///
/// Conjunction and disjunction are n-ary; the factories collapse a single
/// operand to the operand itself, so stored nodes always have two or more
/// children. Announcement children are (announced formula, continuation).
class Formula {
 public:
  static Formula atom(PropId p);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula knows(AgentId a, Formula f);
  static Formula knows_whether(AgentId a, Formula f);
  static Formula announced(Formula announcement, Formula continuation);

  Connective kind() const;
  /// Only meaningful for atoms.
  PropId prop() const;
  /// Only meaningful for knows / knows_whether.
  AgentId agent() const;
  std::span<const Formula> children() const;
  const Formula& child(std::size_t i) const { return children()[i]; }

  /// Address of the shared node; equal for copies of the same value.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, int index, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  int index;
  std::vector<Formula> children;
};

/// Negation that cancels an outer negation instead of stacking a second one.
Formula negate(const Formula& f);

/// Maximum nesting of knows / knows_whether. Announced formulas count too.
int modal_depth(const Formula& f);
int announcement_count(const Formula& f);
std::set<PropId> atoms_of(const Formula& f);
std::set<AgentId> agents_of(const Formula& f);

/// Rewrites every Kw[a] f into K[a] f | K[a] ~f.
Formula expand_knows_whether(const Formula& f);

/// Eliminates announcements with the public-announcement reduction axioms.
/// The result is announcement-free and knows_whether-free.
Formula reduce_announcements(const Formula& f);

/// Subject of a setup predicate.
struct QuantifiedSubject {
  enum class Kind : std::uint8_t { agent, everyone, not_everyone, nobody, someone };

  Kind kind = Kind::everyone;
  AgentId agent{};

  static QuantifiedSubject single(AgentId a) { return {Kind::agent, a}; }
  static QuantifiedSubject everyone() { return {Kind::everyone, {}}; }
  static QuantifiedSubject not_everyone() { return {Kind::not_everyone, {}}; }
  static QuantifiedSubject nobody() { return {Kind::nobody, {}}; }
  static QuantifiedSubject someone() { return {Kind::someone, {}}; }

  bool operator==(const QuantifiedSubject& o) const {
    return kind == o.kind && (kind != Kind::agent || agent == o.agent);
  }
};

/// Boolean formula over the n atoms for "<subject> <predicate>", with the
/// predicate negated when `negate_predicate` is set.
Formula desugar_subject(const QuantifiedSubject& subject, bool negate_predicate, int n);

}  // namespace epistle
