#include "pvi/symbols.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace pvi {

namespace {

constexpr std::array<std::string_view, 11> kFixedOrder = {
    "x", "z", "t", "t1", "t2", "t3", "lambda", "mu", "b", "a", "c"};

} // namespace

int symbol_rank(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < kFixedOrder.size(); ++i) {
        if (kFixedOrder[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool symbol_before(std::string_view lhs, std::string_view rhs) noexcept
{
    const int rl = symbol_rank(lhs);
    const int rr = symbol_rank(rhs);
    if (rl >= 0 && rr >= 0) return rl < rr;
    if (rl >= 0) return true;
    if (rr >= 0) return false;
    return lhs < rhs;
}

std::vector<std::string> merge_symbols(const std::vector<std::string> &lhs,
                                       const std::vector<std::string> &rhs)
{
    std::vector<std::string> out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (lhs[i] == rhs[j]) {
            out.push_back(lhs[i]);
            ++i;
            ++j;
        } else if (symbol_before(lhs[i], rhs[j])) {
            out.push_back(lhs[i++]);
        } else {
            out.push_back(rhs[j++]);
        }
    }
    for (; i < lhs.size(); ++i) out.push_back(lhs[i]);
    for (; j < rhs.size(); ++j) out.push_back(rhs[j]);
    return out;
}

std::vector<std::string> sorted_symbols(std::vector<std::string> names)
{
    std::sort(names.begin(), names.end(),
              [](const std::string &l, const std::string &r) { return symbol_before(l, r); });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

bool is_identifier(std::string_view name) noexcept
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

} // namespace pvi
