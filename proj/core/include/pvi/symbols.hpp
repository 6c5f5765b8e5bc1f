#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pvi {

// Global variable order used by every canonical form:
//   x > z > t > t1 > t2 > t3 > lambda > mu > b > a > c > (other names, alphabetically)
// The order is a pure function of the names, so no registry is needed.

/// Rank of a symbol in the fixed order, or -1 for auxiliary symbols.
int symbol_rank(std::string_view name) noexcept;

/// Strict "comes before" in the global order (earlier = more significant in lex).
bool symbol_before(std::string_view lhs, std::string_view rhs) noexcept;

/// Merge two sorted symbol lists into their sorted union.
std::vector<std::string> merge_symbols(const std::vector<std::string> &lhs,
                                       const std::vector<std::string> &rhs);

/// Sort and deduplicate a list of symbols in the global order.
std::vector<std::string> sorted_symbols(std::vector<std::string> names);

/// True if `name` matches [a-zA-Z][a-zA-Z0-9_]*.
bool is_identifier(std::string_view name) noexcept;

} // namespace pvi
