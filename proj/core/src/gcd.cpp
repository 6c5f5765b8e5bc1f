#include "pvi/error.hpp"
#include "pvi/polynomial.hpp"
#include "pvi/symbols.hpp"

#include <algorithm>
#include <random>

namespace pvi {

namespace {

using Exp = Polynomial::Exponent;
using UPoly = std::vector<Polynomial>;  // coefficients in the main variable, low to high

constexpr unsigned long kPrime = 2147483647UL;

unsigned long pow_mod(unsigned long base, unsigned long e)
{
    unsigned long long r = 1, b = base % kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return static_cast<unsigned long>(r);
}

unsigned long inv_mod(unsigned long a) { return pow_mod(a, kPrime - 2); }

void trim(std::vector<unsigned long> &u)
{
    while (!u.empty() && u.back() == 0) u.pop_back();
}

// Image of p in F_p[var] with the other variables bound to `point`.
bool image(const Polynomial &p, const std::string &var, const std::map<std::string, unsigned long> &point,
           std::vector<unsigned long> &out)
{
    const auto &vars = p.variables();
    const int deg = p.degree(var);
    out.assign(static_cast<std::size_t>(std::max(deg, 0)) + 1, 0);
    std::vector<unsigned long> vals(vars.size(), 0);
    std::size_t main = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == var) main = i;
        else vals[i] = point.at(vars[i]);
    }
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        unsigned long c;
        if (!reduce_mod(p.coefficient(t), kPrime, c)) return false;
        unsigned long long acc = c;
        auto e = p.exponents(t);
        std::size_t d = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i == main) d = e[i];
            else if (e[i]) acc = acc * pow_mod(vals[i], e[i]) % kPrime;
        }
        out[d] = static_cast<unsigned long>((out[d] + acc) % kPrime);
    }
    return true;
}

std::size_t gcd_degree_mod(std::vector<unsigned long> a, std::vector<unsigned long> b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const unsigned long inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            const unsigned long long f = static_cast<unsigned long long>(a.back()) * inv % kPrime;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] = static_cast<unsigned long>(
                    (a[i + shift] + kPrime - f * b[i] % kPrime) % kPrime);
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Degree in var of gcd(a, b) after a random specialization of the other
// variables, or -1 if the specialization is unlucky (leading terms vanish).
int modular_gcd_degree(const Polynomial &a, const Polynomial &b, const std::string &var)
{
    std::mt19937_64 rng(0x5eed1234ULL + a.term_count() * 31 + b.term_count());
    std::uniform_int_distribution<unsigned long> dist(2, kPrime - 1);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::map<std::string, unsigned long> point;
        for (const auto &v : merge_symbols(a.variables(), b.variables())) {
            if (v != var) point[v] = dist(rng);
        }
        std::vector<unsigned long> ia, ib;
        if (!image(a, var, point, ia) || !image(b, var, point, ib)) continue;
        if (ia.back() == 0 || ib.back() == 0) continue;
        return static_cast<int>(gcd_degree_mod(std::move(ia), std::move(ib)));
    }
    return -1;
}

UPoly to_upoly(const Polynomial &p, const std::string &var) { return p.coefficients_in(var); }

void trim(UPoly &u)
{
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const UPoly &u) { return static_cast<int>(u.size()) - 1; }

UPoly prem(UPoly a, const UPoly &b)
{
    const int db = udeg(b);
    const int da = udeg(a);
    const Polynomial &lb = b.back();
    int steps = 0;
    while (udeg(a) >= db) {
        const Polynomial lr = a.back();
        const std::size_t shift = static_cast<std::size_t>(udeg(a) - db);
        for (auto &c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lr * b[i];
        trim(a);
        ++steps;
        if (a.empty()) break;
    }
    const int missing = da - db + 1 - steps;
    if (missing > 0 && !a.empty()) {
        const Polynomial f = lb.pow(static_cast<unsigned>(missing));
        for (auto &c : a) c = c * f;
    }
    return a;
}

Polynomial gcd_core(Polynomial a, Polynomial b);

Polynomial content_of(const UPoly &coeffs)
{
    Polynomial g;
    for (const auto &c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.normalized() : gcd_core(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

Polynomial primitive_part(const Polynomial &p, const std::string &var)
{
    const Polynomial c = content_of(to_upoly(p, var));
    return c.is_constant() ? p.normalized() : p.exact_quotient(c).normalized();
}

// gcd of two primitive polynomials in var via the subresultant PRS.
Polynomial subresultant_gcd(const Polynomial &pa, const Polynomial &pb, const std::string &var)
{
    UPoly f1 = to_upoly(pa, var), f2 = to_upoly(pb, var);
    if (udeg(f1) < udeg(f2)) std::swap(f1, f2);
    Polynomial g(1), h(1);
    for (;;) {
        const int d = udeg(f1) - udeg(f2);
        UPoly r = prem(f1, f2);
        if (r.empty()) return primitive_part(Polynomial::from_coefficients(var, f2), var);
        if (udeg(r) == 0) return Polynomial(1);
        const Polynomial div = g * h.pow(static_cast<unsigned>(d));
        for (auto &c : r) c = c.exact_quotient(div);
        f1 = std::move(f2);
        f2 = std::move(r);
        g = f1.back();
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            h = g.pow(static_cast<unsigned>(d)).exact_quotient(h.pow(static_cast<unsigned>(d - 1)));
        }
    }
}

// gcd of two nonzero polynomials free of monomial content.
Polynomial gcd_core(Polynomial a, Polynomial b)
{
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    // A variable present in only one argument can be eliminated by content.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &v : a.variables()) {
            if (!b.contains(v)) {
                a = content_of(to_upoly(a, v));
                changed = true;
                break;
            }
        }
        if (a.is_constant()) return Polynomial(1);
        for (const auto &v : b.variables()) {
            if (!a.contains(v)) {
                b = content_of(to_upoly(b, v));
                changed = true;
                break;
            }
        }
        if (b.is_constant()) return Polynomial(1);
    }
    if (a == b) return a.normalized();

    // Main variable: the one with the smallest degree.
    std::string var;
    int best = -1;
    for (const auto &v : a.variables()) {
        const int d = std::max(a.degree(v), b.degree(v));
        if (best < 0 || d < best) {
            best = d;
            var = v;
        }
    }

    const int mdeg = modular_gcd_degree(a, b, var);
    if (mdeg > 0) {
        if (mdeg == b.degree(var)) {
            if (a.divide_exact(b)) return b.normalized();
        }
        if (mdeg == a.degree(var)) {
            if (b.divide_exact(a)) return a.normalized();
        }
    }

    const UPoly ua = to_upoly(a, var), ub = to_upoly(b, var);
    const Polynomial ca = content_of(ua), cb = content_of(ub);
    const Polynomial c = gcd_core(ca, cb);
    // The image gcd bounds the degree of gcd of the primitive parts.
    if (mdeg == 0) return c;
    const Polynomial pa = ca.is_constant() ? a : a.exact_quotient(ca);
    const Polynomial pb = cb.is_constant() ? b : b.exact_quotient(cb);
    return (c * subresultant_gcd(pa, pb, var)).normalized();
}

Polynomial monomial_gcd(const Polynomial &ma, const Polynomial &mb)
{
    const auto vars = merge_symbols(ma.variables(), mb.variables());
    std::vector<Exp> e(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        e[i] = static_cast<Exp>(std::min(std::max(ma.degree(vars[i]), 0), std::max(mb.degree(vars[i]), 0)));
    }
    return Polynomial::from_terms(vars, {{e, Rational(1)}});
}

} // namespace

Polynomial gcd(const Polynomial &lhs, const Polynomial &rhs)
{
    if (lhs.is_zero()) return rhs.normalized();
    if (rhs.is_zero()) return lhs.normalized();
    if (lhs.is_constant() || rhs.is_constant()) return Polynomial(1);
    const Polynomial ma = lhs.monomial_content(), mb = rhs.monomial_content();
    const Polynomial a = ma.is_constant() ? lhs : lhs.exact_quotient(ma);
    const Polynomial b = mb.is_constant() ? rhs : rhs.exact_quotient(mb);
    return (monomial_gcd(ma, mb) * gcd_core(a, b)).normalized();
}

Polynomial content_in(const Polynomial &p, std::string_view var)
{
    if (p.is_zero()) return {};
    const Polynomial c = content_of(p.coefficients_in(var));
    return c.normalized();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial &p, const std::string &var)
{
    if (p.is_zero()) throw MathError("square-free decomposition of zero");
    std::vector<Polynomial> out;
    if (p.degree(var) <= 0) return out;
    const Polynomial prim = primitive_part(p, var);
    // Yun's algorithm
    Polynomial d = prim.derivative(var);
    Polynomial g = gcd(prim, d);
    Polynomial b = prim.exact_quotient(g);
    Polynomial c = d.exact_quotient(g) - b.derivative(var);
    while (b.degree(var) > 0) {
        const Polynomial a = c.is_zero() ? b.normalized() : gcd(b, c);
        out.push_back(a);
        b = b.exact_quotient(a);
        c = c.exact_quotient(a) - b.derivative(var);
    }
    while (!out.empty() && out.back().degree(var) <= 0) out.pop_back();
    for (auto &f : out) {
        if (f.degree(var) <= 0) f = Polynomial(1);
    }
    return out;
}

} // namespace pvi
