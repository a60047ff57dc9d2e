#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "epistle/formula.hpp"

namespace epistle {

/// Handle to a node of a DdStore. Handles from different stores must not be
/// mixed.
class Dd {
 public:
  Dd() = default;
  std::uint32_t id() const { return id_; }
  bool is_false() const { return id_ == 0; }
  bool is_true() const { return id_ == 1; }
  bool is_terminal() const { return id_ < 2; }
  bool operator==(const Dd&) const = default;

 private:
  friend class DdStore;
  explicit Dd(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

/// Reduced ordered BDD node store with hash-consing. Variable order is the
/// predicate index order. Nodes are never freed; exceeding the capacity
/// throws StoreCapacity.
///
/// Not thread-safe; use one store per thread.
class DdStore {
 public:
  static constexpr std::size_t default_capacity = std::size_t{1} << 22;

  explicit DdStore(std::size_t capacity = default_capacity);

  Dd constant(bool value) const { return Dd(value ? 1u : 0u); }
  Dd var(PropId p);
  Dd negate(Dd x);
  Dd conj(Dd x, Dd y);
  Dd disj(Dd x, Dd y);
  Dd implies(Dd x, Dd y);
  Dd ite(Dd c, Dd t, Dd e);
  Dd exists(std::span<const PropId> vars, Dd x);
  Dd forall(std::span<const PropId> vars, Dd x);

  /// Variable at the root; terminals report a value past every variable.
  int var_of(Dd x) const { return nodes_[x.id_].var; }
  Dd low(Dd x) const { return Dd(nodes_[x.id_].low); }
  Dd high(Dd x) const { return Dd(nodes_[x.id_].high); }

  /// Evaluates x under the assignment whose bit j is variable j.
  bool evaluate(Dd x, std::uint64_t assignment) const;
  /// Number of satisfying assignments over variables 0..vars-1.
  double sat_count(Dd x, int vars) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t capacity() const { return capacity_; }

  /// Checks ordering and reduction of every stored node.
  bool well_formed() const;

 private:
  static constexpr int terminal_var = 1 << 30;

  struct Node {
    int var;
    std::uint32_t low;
    std::uint32_t high;
  };

  struct Key {
    std::uint64_t a;
    std::uint64_t b;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull;
      h ^= (k.b + 0x7F4A7C159E3779B9ull) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  enum class Op : std::uint8_t { negate, conj, disj, implies, ite };

  Dd make(int var, Dd low, Dd high);
  Dd apply(Op op, Dd x, Dd y);
  Dd exists_rec(std::span<const PropId> vars, std::size_t from, Dd x,
                std::unordered_map<std::uint32_t, std::uint32_t>& memo);
  void remember(const Key& key, Dd result);

  std::size_t capacity_;
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> unique_;
  std::unordered_map<Key, std::uint32_t, KeyHash> computed_;
};

}  // namespace epistle
