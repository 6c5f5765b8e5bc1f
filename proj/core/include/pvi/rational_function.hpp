#pragma once

#include "pvi/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace pvi {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and the
/// denominator has integer coefficients, content 1 and a positive leading
/// coefficient. Canonical forms are unique, so == is structural.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(const Polynomial &p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational &q) : num_(q), den_(1) {}    // NOLINT
    RationalFunction(long n) : num_(n), den_(1) {}               // NOLINT

    /// num/den, reduced to canonical form. Throws MathError if den is zero.
    static RationalFunction fraction(const Polynomial &num, const Polynomial &den);
    static RationalFunction variable(const std::string &name) { return Polynomial::variable(name); }

    const Polynomial &numerator() const noexcept { return num_; }
    const Polynomial &denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    std::vector<std::string> variables() const;
    bool contains(std::string_view var) const { return num_.contains(var) || den_.contains(var); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction &lhs, const RationalFunction &rhs);
    friend RationalFunction operator-(const RationalFunction &lhs, const RationalFunction &rhs);
    friend RationalFunction operator*(const RationalFunction &lhs, const RationalFunction &rhs);
    friend RationalFunction operator/(const RationalFunction &lhs, const RationalFunction &rhs);
    RationalFunction &operator+=(const RationalFunction &rhs) { return *this = *this + rhs; }
    RationalFunction &operator-=(const RationalFunction &rhs) { return *this = *this - rhs; }
    RationalFunction &operator*=(const RationalFunction &rhs) { return *this = *this * rhs; }
    RationalFunction &operator/=(const RationalFunction &rhs) { return *this = *this / rhs; }
    friend bool operator==(const RationalFunction &lhs, const RationalFunction &rhs) = default;

    RationalFunction inverse() const;
    RationalFunction pow(int exponent) const;

    RationalFunction derivative(std::string_view var) const;

    /// Value at a point; throws MathError on a pole or an unbound symbol.
    Rational evaluate(const std::map<std::string, Rational> &values) const;
    /// Simultaneous substitution var -> value; throws MathError if a
    /// denominator becomes identically zero.
    RationalFunction substitute(const std::map<std::string, RationalFunction> &values) const;
    RationalFunction substitute(const std::string &var, const RationalFunction &value) const
    {
        return substitute(std::map<std::string, RationalFunction>{{var, value}});
    }

private:
    Polynomial num_;
    Polynomial den_{1};

    RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
    static RationalFunction from_coprime(Polynomial num, Polynomial den);
};

using RF = RationalFunction;

/// Numerator and denominator scaled to integer coefficients; the result is
/// N/D with content(D) adjusted so both are integral and D has positive leading coefficient.
std::pair<Polynomial, Polynomial> integral_parts(const RationalFunction &f);

} // namespace pvi
