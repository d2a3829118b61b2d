#pragma once

// Named orders on multi-indices, built from the built-in relations on N.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monorder/family.hpp"
#include "monorder/lex.hpp"

namespace monorder {

enum class Mode { strict, nonstrict };

std::optional<Mode> mode_from_string(std::string_view s);

/// lex, colex, symlex, revlex, grlex, grcolex, grsymlex, grevlex.
const std::vector<std::string>& named_order_names();

/// The named order over (N, +) with `<` (strict) or `<=` (nonstrict) as
/// scalar relation. Returns nothing for unknown names.
std::optional<VectorRelation<Nat>> named_order(std::string_view name, Mode mode = Mode::strict);

}  // namespace monorder
