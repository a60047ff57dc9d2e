#pragma once

#include <string>
#include <string_view>

#include "epistle/formula.hpp"

namespace epistle {

/// Parses the formula DSL:
///
///   atom `p3`, negation `~f`, `f & g`, `f | g`, `f -> g` (right associative),
///   knowledge `K[1] f`, knows-whether `Kw[1] f`, announcement `[! f] g`.
///
/// Prefix operators bind tightest, then `&`, `|`, `->`. Agent and predicate
/// indices must be below `n_agents`.
///
/// Throws SyntaxError or IndexOutOfRange.
Formula parse_formula(std::string_view text, int n_agents);

/// Canonical rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace epistle
