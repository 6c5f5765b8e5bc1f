#include "pvi/rational_function.hpp"

#include "pvi/error.hpp"
#include "pvi/symbols.hpp"

namespace pvi {

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den)
{
    if (num.is_zero()) return {};
    auto [scale, dn] = den.normalize();
    if (scale != 1) num = num.scaled(Rational(1) / scale);
    return RationalFunction(std::move(num), std::move(dn), 0);
}

RationalFunction RationalFunction::fraction(const Polynomial &num, const Polynomial &den)
{
    if (den.is_zero()) throw MathError("division by zero");
    if (num.is_zero()) return {};
    if (den.is_constant()) return RationalFunction(num.scaled(Rational(1) / den.constant_value()), Polynomial(1), 0);
    const Polynomial g = gcd(num, den);
    if (g.is_constant()) return from_coprime(num, den);
    return from_coprime(num.exact_quotient(g), den.exact_quotient(g));
}

Rational RationalFunction::constant_value() const
{
    if (!is_constant()) throw MathError("expression is not constant");
    return num_.constant_value() / den_.constant_value();
}

std::vector<std::string> RationalFunction::variables() const
{
    return merge_symbols(num_.variables(), den_.variables());
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction operator+(const RationalFunction &lhs, const RationalFunction &rhs)
{
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    if (lhs.den_ == rhs.den_) {
        if (lhs.den_.is_constant()) return RationalFunction(lhs.num_ + rhs.num_, lhs.den_, 0);
        return RationalFunction::fraction(lhs.num_ + rhs.num_, lhs.den_);
    }
    if (lhs.den_.is_constant()) return RationalFunction(lhs.num_ * rhs.den_ + rhs.num_, rhs.den_, 0);
    if (rhs.den_.is_constant()) return RationalFunction(lhs.num_ + rhs.num_ * lhs.den_, lhs.den_, 0);
    // Henrici: only the common part of the denominators can cancel.
    const Polynomial g = gcd(lhs.den_, rhs.den_);
    if (g.is_constant()) {
        return RationalFunction::from_coprime(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_,
                                              lhs.den_ * rhs.den_);
    }
    const Polynomial ld = lhs.den_.exact_quotient(g), rd = rhs.den_.exact_quotient(g);
    Polynomial num = lhs.num_ * rd + rhs.num_ * ld;
    if (num.is_zero()) return {};
    Polynomial den = ld * rhs.den_;
    const Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
        num = num.exact_quotient(h);
        den = den.exact_quotient(h);
    }
    return RationalFunction::from_coprime(std::move(num), std::move(den));
}

RationalFunction operator-(const RationalFunction &lhs, const RationalFunction &rhs) { return lhs + (-rhs); }

RationalFunction operator*(const RationalFunction &lhs, const RationalFunction &rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (lhs.is_constant()) return RationalFunction(rhs.num_.scaled(lhs.constant_value()), rhs.den_, 0);
    if (rhs.is_constant()) return RationalFunction(lhs.num_.scaled(rhs.constant_value()), lhs.den_, 0);
    Polynomial a = lhs.num_, b = lhs.den_, c = rhs.num_, d = rhs.den_;
    if (!d.is_constant() && !a.is_constant()) {
        const Polynomial g = gcd(a, d);
        if (!g.is_constant()) {
            a = a.exact_quotient(g);
            d = d.exact_quotient(g);
        }
    }
    if (!b.is_constant() && !c.is_constant()) {
        const Polynomial g = gcd(c, b);
        if (!g.is_constant()) {
            c = c.exact_quotient(g);
            b = b.exact_quotient(g);
        }
    }
    return RationalFunction::from_coprime(a * c, b * d);
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero()) throw MathError("division by zero");
    return from_coprime(den_, num_);
}

RationalFunction operator/(const RationalFunction &lhs, const RationalFunction &rhs)
{
    return lhs * rhs.inverse();
}

RationalFunction RationalFunction::pow(int exponent) const
{
    if (exponent < 0) return inverse().pow(-exponent);
    const auto e = static_cast<unsigned>(exponent);
    return RationalFunction(num_.pow(e), den_.pow(e), 0);
}

RationalFunction RationalFunction::derivative(std::string_view var) const
{
    if (!contains(var)) return {};
    if (den_.is_constant()) return RationalFunction(num_.derivative(var), den_, 0);
    // (n/d)' = (n' d - n d') / d^2; dividing by g = gcd(d, d') first keeps
    // the result small: (n' (d/g) - n (d'/g)) / (d * d/g).
    const Polynomial dd = den_.derivative(var);
    const Polynomial g = gcd(den_, dd);
    const Polynomial dg = den_.exact_quotient(g);
    const Polynomial ddg = dd.exact_quotient(g);
    return fraction(num_.derivative(var) * dg - num_ * ddg, den_ * dg);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational> &values) const
{
    const Rational d = den_.evaluate(values);
    if (d == 0) throw MathError("evaluation at a pole");
    return num_.evaluate(values) / d;
}

namespace {

// p(x_i -> n_i/d_i) * prod d_i^deg_i(p), as a polynomial.
Polynomial homogenized(const Polynomial &p, const std::vector<std::string> &vars,
                       const std::vector<const RationalFunction *> &vals, std::vector<int> &degs)
{
    degs.assign(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) degs[i] = std::max(p.degree(vars[i]), 0);
    // Group by powers: substitute x_i -> n_i and multiply each term by d_i^(D_i - e_i).
    // Do it term-wise over the substituted variables only.
    std::vector<std::vector<Polynomial>> npow(vars.size()), dpow(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        npow[i].push_back(Polynomial(1));
        dpow[i].push_back(Polynomial(1));
        for (int k = 1; k <= degs[i]; ++k) {
            npow[i].push_back(npow[i].back() * vals[i]->numerator());
            dpow[i].push_back(dpow[i].back() * vals[i]->denominator());
        }
    }
    // Split p into (monomial over kept vars) x (exponents of substituted vars).
    std::map<std::vector<Polynomial::Exponent>, Polynomial> groups;
    const auto &pv = p.variables();
    std::vector<int> which(pv.size(), -1);
    for (std::size_t j = 0; j < pv.size(); ++j) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (pv[j] == vars[i]) which[j] = static_cast<int>(i);
        }
    }
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        auto e = p.exponents(t);
        std::vector<Polynomial::Exponent> key(vars.size(), 0);
        std::vector<Polynomial::Exponent> rest(e.begin(), e.end());
        for (std::size_t j = 0; j < pv.size(); ++j) {
            if (which[j] >= 0) {
                key[static_cast<std::size_t>(which[j])] = e[j];
                rest[j] = 0;
            }
        }
        groups[key] += Polynomial::from_terms(pv, {{rest, p.coefficient(t)}});
    }
    Polynomial out;
    for (const auto &[key, coeff] : groups) {
        Polynomial term = coeff;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            term = term * npow[i][key[i]];
            term = term * dpow[i][static_cast<std::size_t>(degs[i]) - key[i]];
        }
        out += term;
    }
    return out;
}

} // namespace

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction> &values) const
{
    std::vector<std::string> vars;
    std::vector<const RationalFunction *> vals;
    for (const auto &[name, value] : values) {
        if (contains(name)) {
            vars.push_back(name);
            vals.push_back(&value);
        }
    }
    if (vars.empty()) return *this;
    std::vector<int> dn, dd;
    Polynomial n = homogenized(num_, vars, vals, dn);
    Polynomial d = homogenized(den_, vars, vals, dd);
    if (d.is_zero()) throw MathError("substitution makes a denominator vanish");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Polynomial &q = vals[i]->denominator();
        if (dd[i] > dn[i]) n = n * q.pow(static_cast<unsigned>(dd[i] - dn[i]));
        else if (dn[i] > dd[i]) d = d * q.pow(static_cast<unsigned>(dn[i] - dd[i]));
    }
    return fraction(n, d);
}

std::pair<Polynomial, Polynomial> integral_parts(const RationalFunction &f)
{
    const Rational c = f.numerator().content();
    if (f.is_zero()) return {Polynomial{}, Polynomial(1)};
    // numerator / content is integral with content 1; fold the denominator of c into D.
    const Polynomial n = f.numerator().scaled(Rational(1) / c);
    Rational num_part(c.get_num()), den_part(c.get_den());
    return {n.scaled(num_part), f.denominator().scaled(den_part)};
}

} // namespace pvi
