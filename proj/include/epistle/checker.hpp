#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "epistle/knowledge_structure.hpp"
#include "epistle/kripke.hpp"

namespace epistle {

enum class Backend : std::uint8_t { explicit_model, symbolic, both };

std::string_view to_string(Backend b);
/// Accepts "explicit", "symbolic", "both".
std::optional<Backend> parse_backend(std::string_view text);

/// Labels problems with the selected backend. Owns one node store, so a
/// checker must stay on one thread.
class Checker {
 public:
  explicit Checker(Backend backend = Backend::explicit_model,
                   std::size_t node_capacity = DdStore::default_capacity);

  Backend backend() const { return backend_; }

  bool is_contradictory(const ObservabilityMatrix& obs, std::span<const Formula> anns);

  /// Throws ContradictoryPremise; under Backend::both throws BackendMismatch
  /// if the two labels differ.
  Label label(const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp);

  Label label_explicit(const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp);
  Label label_symbolic(const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp);

  const std::shared_ptr<DdStore>& store() const { return store_; }

 private:
  Backend backend_;
  std::shared_ptr<DdStore> store_;
};

/// Node capacity from EPISTLE_NODE_LIMIT, or the default when unset.
/// Throws std::invalid_argument on a malformed value.
std::size_t node_capacity_from_env();

}  // namespace epistle
