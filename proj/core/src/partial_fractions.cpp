#include "pvi/partial_fractions.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"

namespace pvi {

Polynomial linear_factor(const std::string &v, const RationalFunction &p)
{
    if (p.contains(v)) throw MathError("pole location depends on " + v);
    return p.denominator() * Polynomial::variable(v) - p.numerator();
}

int pole_order(const RationalFunction &f, const std::string &v, const RationalFunction &p)
{
    const Polynomial lin = linear_factor(v, p);
    Polynomial d = f.denominator();
    int order = 0;
    while (auto q = d.divide_exact(lin)) {
        d = std::move(*q);
        ++order;
    }
    return order;
}

RationalFunction PartialFractionDecomposition::resum() const
{
    const RationalFunction x = RationalFunction::variable(variable);
    RationalFunction sum = polynomial_part;
    for (const auto &pole : poles) {
        const RationalFunction inv = (x - pole.location).inverse();
        RationalFunction power = inv;
        for (const auto &c : pole.coefficients) {
            sum += c * power;
            power = power * inv;
        }
    }
    return sum;
}

RationalFunction PartialFractionDecomposition::residue(const RationalFunction &location) const
{
    for (const auto &pole : poles) {
        if (pole.location == location) return pole.coefficients.empty() ? RationalFunction() : pole.coefficients[0];
    }
    return {};
}

std::vector<RationalFunction> principal_part(const RationalFunction &f, const std::string &v,
                                             const RationalFunction &p)
{
    const int order = pole_order(f, v, p);
    std::vector<RationalFunction> coeffs(static_cast<std::size_t>(order));
    if (order == 0) return coeffs;
    // g = f (v - p)^order is regular at p; its Taylor coefficients give the principal part.
    RationalFunction g = f * (RationalFunction::variable(v) - p).pow(order);
    Rational factorial = 1;
    for (int j = 0; j < order; ++j) {
        if (j > 0) factorial *= j;
        // coefficient of (v - p)^j in g multiplies 1/(v - p)^(order - j)
        coeffs[static_cast<std::size_t>(order - j - 1)] = g.substitute(v, p) * RationalFunction(Rational(1) / factorial);
        if (j + 1 < order) g = g.derivative(v);
    }
    return coeffs;
}

RationalFunction residue(const RationalFunction &f, const std::string &v, const RationalFunction &p)
{
    auto c = principal_part(f, v, p);
    return c.empty() ? RationalFunction() : c.front();
}

PartialFractionDecomposition partial_fractions(const RationalFunction &f, const std::string &v,
                                               const std::vector<RationalFunction> &poles)
{
    PartialFractionDecomposition out;
    out.variable = v;
    const RationalFunction x = RationalFunction::variable(v);
    Polynomial rest = f.denominator();
    RationalFunction remainder = f;
    for (const auto &p : poles) {
        const Polynomial lin = linear_factor(v, p);
        int order = 0;
        while (auto q = rest.divide_exact(lin)) {
            rest = std::move(*q);
            ++order;
        }
        PoleTerm term{p, order, {}};
        if (order > 0) {
            term.coefficients = principal_part(f, v, p);
            for (int k = 0; k < order; ++k) {
                remainder -= term.coefficients[static_cast<std::size_t>(k)] * (x - p).pow(-(k + 1));
            }
        }
        out.poles.push_back(std::move(term));
    }
    if (rest.degree(v) > 0) {
        throw MathError("denominator factor " + to_string(rest) + " is not covered by the pole list");
    }
    if (remainder.denominator().degree(v) > 0) {
        throw MathError("partial fraction remainder is not polynomial in " + v);
    }
    out.polynomial_part = remainder;
    return out;
}

Matrix residue_matrix(const Matrix &a, const std::string &v, const RationalFunction &p)
{
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c).is_zero()) continue;
            out(r, c) = residue(a(r, c), v, p);
        }
    }
    return out;
}

} // namespace pvi
