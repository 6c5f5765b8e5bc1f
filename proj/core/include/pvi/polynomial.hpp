#pragma once

#include "pvi/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pvi {

/// Sparse multivariate polynomial over the rationals.
///
/// Invariants: `variables()` is sorted in the global symbol order and every
/// listed variable occurs with positive degree in some term; terms are stored
/// in strictly decreasing lexicographic order; no stored coefficient is zero.
/// The zero polynomial has no terms and no variables. Two polynomials are
/// equal iff their representations are identical.
class Polynomial {
public:
    using Exponent = std::uint32_t;

    Polynomial() = default;
    Polynomial(const Rational &constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

    static Polynomial variable(const std::string &name, Exponent power = 1);

    /// Build from (exponent vector, coefficient) pairs over `vars`, which must
    /// be sorted in the global order. Terms may be unsorted or repeated.
    static Polynomial from_terms(std::vector<std::string> vars,
                                 std::vector<std::pair<std::vector<Exponent>, Rational>> terms);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return vars_.empty(); }
    /// Constant term value; only meaningful when is_constant().
    Rational constant_value() const;
    /// Coefficient of the monomial 1.
    Rational constant_term() const;

    const std::vector<std::string> &variables() const noexcept { return vars_; }
    bool contains(std::string_view var) const noexcept;
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    const Rational &coefficient(std::size_t term) const { return coeffs_[term]; }
    std::span<const Exponent> exponents(std::size_t term) const
    {
        return {exps_.data() + term * vars_.size(), vars_.size()};
    }

    const Rational &leading_coefficient() const;
    int degree(std::string_view var) const;
    int min_degree(std::string_view var) const;
    int total_degree() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial &lhs, const Polynomial &rhs);
    friend Polynomial operator-(const Polynomial &lhs, const Polynomial &rhs);
    friend Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs);
    Polynomial &operator+=(const Polynomial &rhs) { return *this = *this + rhs; }
    Polynomial &operator-=(const Polynomial &rhs) { return *this = *this - rhs; }
    Polynomial &operator*=(const Polynomial &rhs) { return *this = *this * rhs; }
    friend bool operator==(const Polynomial &lhs, const Polynomial &rhs) = default;

    Polynomial scaled(const Rational &factor) const;
    Polynomial pow(unsigned exponent) const;

    /// Quotient when `divisor` divides *this exactly, otherwise nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial &divisor) const;
    /// Like divide_exact but throws MathError when the division is not exact.
    Polynomial exact_quotient(const Polynomial &divisor) const;

    Polynomial derivative(std::string_view var) const;

    /// Coefficients in `var`: result[k] is the coefficient of var^k.
    std::vector<Polynomial> coefficients_in(std::string_view var) const;
    static Polynomial from_coefficients(const std::string &var, const std::vector<Polynomial> &coeffs);

    /// Value with every variable bound; throws MathError if one is unbound.
    Rational evaluate(const std::map<std::string, Rational> &values) const;
    /// Bind only the listed variables, keeping the rest symbolic.
    Polynomial partial_evaluate(const std::map<std::string, Rational> &values) const;
    /// Simultaneous polynomial substitution var -> polynomial.
    Polynomial compose(const std::map<std::string, Polynomial> &values) const;

    /// Rational content: positive rational c with (*this)/c integral of content 1.
    Rational content() const;
    /// Scale to integer coefficients, content 1 and positive leading coefficient.
    /// Returns (scale, normalized) with *this == normalized * scale.
    std::pair<Rational, Polynomial> normalize() const;
    Polynomial normalized() const { return normalize().second; }

    /// Largest monomial dividing every term (coefficient 1).
    Polynomial monomial_content() const;

private:
    std::vector<std::string> vars_;
    std::vector<Rational> coeffs_;
    std::vector<Exponent> exps_;

    std::size_t nvars() const noexcept { return vars_.size(); }
    Polynomial with_variables(const std::vector<std::string> &superset) const;
    void prune();

    friend class PolynomialBuilder;
};

/// Accumulates terms over a fixed variable list and emits a canonical Polynomial.
class PolynomialBuilder {
public:
    explicit PolynomialBuilder(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    void add(std::span<const Polynomial::Exponent> exps, const Rational &coeff);
    Polynomial build() &&;
    /// Terms were added in strictly decreasing order with no repeats.
    Polynomial build_sorted() &&;

private:
    std::vector<std::string> vars_;
    std::vector<Polynomial::Exponent> exps_;
    std::vector<Rational> coeffs_;
};

/// Greatest common divisor, normalized (integer coefficients, content 1,
/// positive leading coefficient). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &lhs, const Polynomial &rhs);

/// gcd of the coefficients of p viewed as a polynomial in var (normalized).
Polynomial content_in(const Polynomial &p, std::string_view var);

/// Square-free decomposition in `var`: factors f_i with p = c * prod f_i^i,
/// where c is free of var. Entry k of the result holds f_{k+1}.
std::vector<Polynomial> squarefree_decomposition(const Polynomial &p, const std::string &var);

std::string to_string(const Polynomial &p);

} // namespace pvi
