#include "epistle/setup.hpp"

#include <stdexcept>

namespace epistle {

std::string_view setup_tag(SetupKind kind) {
  switch (kind) {
    case SetupKind::forehead_mud:
      return "forehead-mud";
    case SetupKind::forehead_mud_mirror:
      return "forehead-mud-mirror";
    case SetupKind::thirst:
      return "thirst";
    case SetupKind::explicit_card:
      return "explicit";
  }
  return "?";
}

std::optional<SetupKind> parse_setup_tag(std::string_view tag) {
  for (auto kind : all_setups) {
    if (setup_tag(kind) == tag) return kind;
  }
  return std::nullopt;
}

int setup_ordinal(SetupKind kind) { return static_cast<int>(kind); }

ObservabilityMatrix sample_observability(SetupKind kind, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_observability: need at least one agent");
  switch (kind) {
    case SetupKind::forehead_mud:
      return ObservabilityMatrix::ones_minus_identity(n);
    case SetupKind::forehead_mud_mirror:
      return ObservabilityMatrix::ones(n);
    case SetupKind::thirst:
      return ObservabilityMatrix::identity(n);
    case SetupKind::explicit_card:
      break;
  }
  ObservabilityMatrix m(n);
  const double p = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(AgentId{i}, PropId{j}, rng.bernoulli(p));
  }
  return m;
}

}  // namespace epistle
