#pragma once

#include "pvi/rational_function.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvi {

struct Root {
    RationalFunction value;
    int multiplicity = 1;
};

/// Roots in `var` of p over the field of the remaining symbols. Every root
/// must be rational in those symbols; candidates are +-(divisor of the
/// trailing coefficient)/(divisor of the leading coefficient). Roots come out
/// in the order they are found (linear factors first, then candidates).
/// Throws MathError if some factor has no rational root of this shape.
std::vector<Root> rational_roots(const Polynomial &p, const std::string &var);
/// Same search, but factors without such roots are skipped instead of raising.
std::vector<Root> find_rational_roots(const Polynomial &p, const std::string &var);

/// Factors f with multiplicity k such that p = c * prod f^k, with c rational.
/// The factors are not necessarily irreducible: content, monomials, small
/// integer primes, square-free parts and linear factors with roots of
/// candidate shape (searched one level deep for multivariate pieces) are split.
std::vector<std::pair<Polynomial, int>> partial_factor(const Polynomial &p);

/// s with s^2 = p, leading coefficient positive; nullopt if p is not a square.
std::optional<Polynomial> exact_sqrt(const Polynomial &p);
/// Square root of a rational function whose numerator has a positive square
/// root form; the returned numerator has positive leading coefficient.
std::optional<RationalFunction> exact_sqrt(const RationalFunction &f);

} // namespace pvi
