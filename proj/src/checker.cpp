#include "epistle/checker.hpp"

#include <cstdlib>
#include <string>

#include "epistle/errors.hpp"

namespace epistle {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::explicit_model:
      return "explicit";
    case Backend::symbolic:
      return "symbolic";
    case Backend::both:
      return "both";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view text) {
  if (text == "explicit") return Backend::explicit_model;
  if (text == "symbolic") return Backend::symbolic;
  if (text == "both") return Backend::both;
  return std::nullopt;
}

Checker::Checker(Backend backend, std::size_t node_capacity)
    : backend_(backend), store_(std::make_shared<DdStore>(node_capacity)) {}

bool Checker::is_contradictory(const ObservabilityMatrix& obs, std::span<const Formula> anns) {
  if (backend_ == Backend::symbolic) {
    return is_contradictory_symbolic(KnowledgeStructure(store_, obs), anns);
  }
  return epistle::is_contradictory(build_initial_model(obs.size(), obs), anns);
}

Label Checker::label_explicit(const ObservabilityMatrix& obs, std::span<const Formula> anns,
                              const Formula& hyp) {
  return epistle::label(build_initial_model(obs.size(), obs), anns, hyp);
}

Label Checker::label_symbolic(const ObservabilityMatrix& obs, std::span<const Formula> anns,
                              const Formula& hyp) {
  return epistle::label_symbolic(KnowledgeStructure(store_, obs), anns, hyp);
}

Label Checker::label(const ObservabilityMatrix& obs, std::span<const Formula> anns, const Formula& hyp) {
  switch (backend_) {
    case Backend::explicit_model:
      return label_explicit(obs, anns, hyp);
    case Backend::symbolic:
      return label_symbolic(obs, anns, hyp);
    case Backend::both: {
      const auto a = label_explicit(obs, anns, hyp);
      const auto b = label_symbolic(obs, anns, hyp);
      if (a != b) {
        throw BackendMismatch(std::string("explicit says ") + to_string(a) + ", symbolic says " + to_string(b));
      }
      return a;
    }
  }
  return Label::False;
}

std::size_t node_capacity_from_env() {
  const char* raw = std::getenv("EPISTLE_NODE_LIMIT");
  if (!raw || !*raw) return DdStore::default_capacity;
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value < 2) throw std::invalid_argument("EPISTLE_NODE_LIMIT must be an integer >= 2");
  return static_cast<std::size_t>(value);
}

}  // namespace epistle
