#pragma once

#include "pvi/rational_function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pvi {

/// Parse an expression:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' nonneg-integer)?
///   atom   := integer | integer '/' positive-integer | identifier | '(' expr ')'
/// Symbols outside `universe` are rejected unless the universe is empty.
/// Throws ParseError (with position) or MathError (division by zero).
RationalFunction parse(std::string_view text, const std::vector<std::string> &universe = {});

/// Canonical text: "N" or "N/D" with integer-coefficient N and D.
std::string to_string(const RationalFunction &f);

} // namespace pvi
