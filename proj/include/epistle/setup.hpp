#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "epistle/kripke.hpp"
#include "epistle/rng.hpp"

namespace epistle {

/// A predicate family paired with the observability structure it implies.
enum class SetupKind : std::uint8_t {
  forehead_mud,         // others see your forehead, you don't
  forehead_mud_mirror,  // everyone sees every forehead
  thirst,               // each person knows only their own thirst
  explicit_card,        // random card reveals
};

inline constexpr std::array<SetupKind, 4> all_setups{
    SetupKind::forehead_mud, SetupKind::forehead_mud_mirror, SetupKind::thirst,
    SetupKind::explicit_card};

/// "forehead-mud", "forehead-mud-mirror", "thirst", "explicit".
std::string_view setup_tag(SetupKind kind);
std::optional<SetupKind> parse_setup_tag(std::string_view tag);
/// Position in all_setups.
int setup_ordinal(SetupKind kind);

/// Fixed matrices for the first three setups; the explicit setup draws each
/// entry independently with probability 1/n.
ObservabilityMatrix sample_observability(SetupKind kind, int n, Rng& rng);

}  // namespace epistle
