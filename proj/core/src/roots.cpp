#include "pvi/roots.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"
#include "pvi/partial_fractions.hpp"
#include "pvi/symbols.hpp"

#include <algorithm>
#include <random>

namespace pvi {

namespace {

constexpr unsigned long kPrime = 1000000007UL;

// Images of polynomials at a fixed random point modulo a prime.
class ModPoint {
public:
    explicit ModPoint(const std::vector<std::string> &vars)
    {
        std::mt19937_64 rng(0x7007ULL);
        std::uniform_int_distribution<unsigned long> dist(2, kPrime - 1);
        for (const auto &v : vars) values_[v] = dist(rng);
    }

    std::optional<unsigned long> eval(const Polynomial &p) const
    {
        unsigned long long sum = 0;
        const auto &vars = p.variables();
        for (std::size_t t = 0; t < p.term_count(); ++t) {
            unsigned long c;
            if (!reduce_mod(p.coefficient(t), kPrime, c)) return std::nullopt;
            unsigned long long acc = c;
            auto e = p.exponents(t);
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = values_.find(vars[i]);
                if (it == values_.end()) return std::nullopt;
                acc = acc * pow_mod(it->second, e[i]) % kPrime;
            }
            sum = (sum + acc) % kPrime;
        }
        return static_cast<unsigned long>(sum);
    }

    static unsigned long pow_mod(unsigned long base, unsigned long e)
    {
        unsigned long long r = 1, b = base % kPrime;
        while (e) {
            if (e & 1) r = r * b % kPrime;
            b = b * b % kPrime;
            e >>= 1;
        }
        return static_cast<unsigned long>(r);
    }

private:
    std::map<std::string, unsigned long> values_;
};

std::vector<std::pair<Integer, int>> factor_integer(Integer n)
{
    std::vector<std::pair<Integer, int>> out;
    if (n < 0) n = -n;
    for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; ++p) {
        int k = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++k;
        }
        if (k) out.emplace_back(Integer(p), k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

void add_factor(std::vector<std::pair<Polynomial, int>> &out, const Polynomial &f, int k)
{
    for (auto &[g, m] : out) {
        if (g == f) {
            m += k;
            return;
        }
    }
    out.emplace_back(f, k);
}

// Products of all sub-multisets of the factors, deduplicated.
std::vector<Polynomial> divisors(const std::vector<std::pair<Polynomial, int>> &factors)
{
    std::vector<Polynomial> out{Polynomial(1)};
    for (const auto &[f, k] : factors) {
        const std::size_t n = out.size();
        Polynomial power(1);
        for (int j = 1; j <= k; ++j) {
            power = power * f;
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
        }
    }
    std::vector<Polynomial> unique;
    for (auto &d : out) {
        if (std::find(unique.begin(), unique.end(), d) == unique.end()) unique.push_back(std::move(d));
    }
    return unique;
}

std::vector<Root> roots_of_squarefree(Polynomial f, const std::string &var, int multiplicity, int depth, bool strict);

std::vector<std::pair<Polynomial, int>> partial_factor_impl(const Polynomial &p, int depth)
{
    if (p.is_zero()) throw MathError("cannot factor the zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    // integer content of the integral form
    auto [scale, prim] = p.normalize();
    for (auto &[q, k] : factor_integer(scale.get_num())) add_factor(out, Polynomial(Rational(q)), k);
    // monomials
    const Polynomial mono = prim.monomial_content();
    for (const auto &v : mono.variables()) add_factor(out, Polynomial::variable(v), mono.degree(v));
    Polynomial rest = mono.is_constant() ? prim : prim.exact_quotient(mono);
    if (rest.is_constant()) return out;
    // Peel square-free parts variable by variable.
    std::vector<std::pair<Polynomial, int>> pending{{rest, 1}};
    for (const auto &v : rest.variables()) {
        std::vector<std::pair<Polynomial, int>> next;
        for (const auto &[f, k] : pending) {
            if (f.degree(v) <= 0) {
                next.emplace_back(f, k);
                continue;
            }
            const Polynomial c = content_in(f, v);
            if (!c.is_constant()) next.emplace_back(c, k);
            const auto sqf = squarefree_decomposition(f, v);
            for (std::size_t i = 0; i < sqf.size(); ++i) {
                if (!sqf[i].is_constant()) next.emplace_back(sqf[i], k * static_cast<int>(i + 1));
            }
        }
        pending = std::move(next);
    }
    for (const auto &[f, k] : pending) {
        const auto &vars = f.variables();
        Polynomial g = f;
        // Split off linear factors: always for univariate pieces, one level
        // deep for multivariate ones (roots constant or of candidate shape).
        if (vars.size() == 1 || depth > 0) {
            for (const auto &v : vars) {
                if (g.degree(v) < 2) continue;
                for (const auto &r : roots_of_squarefree(g, v, 1, depth - 1, false)) {
                    const Polynomial lin = linear_factor(v, r.value).normalized();
                    add_factor(out, lin, k);
                    g = g.exact_quotient(lin);
                }
            }
        }
        if (!g.is_constant()) add_factor(out, g.normalized(), k);
    }
    return out;
}

} // namespace

std::vector<std::pair<Polynomial, int>> partial_factor(const Polynomial &p) { return partial_factor_impl(p, 1); }

namespace {

std::vector<Root> roots_of_squarefree(Polynomial f, const std::string &var, int multiplicity, int depth, bool strict)
{
    std::vector<Root> out;
    while (f.degree(var) > 0) {
        auto coeffs = f.coefficients_in(var);
        if (coeffs.front().is_zero()) {
            out.push_back({RationalFunction(0), multiplicity});
            f = f.exact_quotient(Polynomial::variable(var));
            continue;
        }
        if (coeffs.size() == 2) {
            out.push_back({-RationalFunction::fraction(coeffs[0], coeffs[1]), multiplicity});
            return out;
        }
        const ModPoint point(f.variables());
        std::vector<unsigned long> image;
        bool image_ok = true;
        for (const auto &c : coeffs) {
            auto v = point.eval(c);
            if (!v) {
                image_ok = false;
                break;
            }
            image.push_back(*v);
        }
        const int inner = depth < 0 ? 0 : depth;
        const auto lead = divisors(partial_factor_impl(coeffs.back(), inner));
        const auto trail = divisors(partial_factor_impl(coeffs.front(), inner));
        bool found = false;
        for (const auto &dt : trail) {
            for (const auto &dl : lead) {
                for (int sign : {1, -1}) {
                    if (image_ok) {
                        // f(candidate) = 0 mod p must hold
                        auto n = point.eval(dt), d = point.eval(dl);
                        if (n && d && *d != 0) {
                            unsigned long long r = *n * ModPoint::pow_mod(*d, kPrime - 2) % kPrime;
                            if (sign < 0) r = (kPrime - r) % kPrime;
                            unsigned long long acc = 0;
                            for (std::size_t k = image.size(); k-- > 0;) acc = (acc * r + image[k]) % kPrime;
                            if (acc != 0) continue;
                        }
                    }
                    RationalFunction cand = RationalFunction::fraction(dt.scaled(sign), dl);
                    const Polynomial lin = linear_factor(var, cand);
                    if (auto q = f.divide_exact(lin)) {
                        out.push_back({std::move(cand), multiplicity});
                        f = std::move(*q);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            if (!strict) return out;
            throw MathError("factor " + to_string(f) + " has a non-rational root in " + var);
        }
    }
    return out;
}

} // namespace

std::vector<Root> rational_roots(const Polynomial &p, const std::string &var)
{
    if (p.is_zero()) throw MathError("roots of the zero polynomial");
    std::vector<Root> out;
    if (p.degree(var) <= 0) return out;
    const auto sqf = squarefree_decomposition(p, var);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree(var) <= 0) continue;
        for (auto &r : roots_of_squarefree(sqf[i], var, static_cast<int>(i + 1), 1, true)) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Root> find_rational_roots(const Polynomial &p, const std::string &var)
{
    if (p.is_zero()) throw MathError("roots of the zero polynomial");
    std::vector<Root> out;
    if (p.degree(var) <= 0) return out;
    const auto sqf = squarefree_decomposition(p, var);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree(var) <= 0) continue;
        for (auto &r : roots_of_squarefree(sqf[i], var, static_cast<int>(i + 1), 1, false)) out.push_back(std::move(r));
    }
    return out;
}

std::optional<Polynomial> exact_sqrt(const Polynomial &p)
{
    if (p.is_zero()) return Polynomial{};
    const Rational &lc = p.leading_coefficient();
    if (lc < 0) return std::nullopt;
    Integer rn, rd;
    if (!mpz_perfect_square_p(lc.get_num_mpz_t()) || !mpz_perfect_square_p(lc.get_den_mpz_t())) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), lc.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), lc.get_den_mpz_t());
    const auto &vars = p.variables();
    std::vector<Polynomial::Exponent> half(vars.size());
    std::vector<Polynomial::Exponent> bound(vars.size());
    auto e0 = p.exponents(0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (e0[i] % 2) return std::nullopt;
        half[i] = e0[i] / 2;
        bound[i] = static_cast<Polynomial::Exponent>(p.degree(vars[i]) / 2);
    }
    Rational root_lc(rn, rd);
    root_lc.canonicalize();
    const Polynomial lead = Polynomial::from_terms(vars, {{half, root_lc}});
    Polynomial s = lead;
    Polynomial r = p - lead * lead;
    std::vector<Polynomial::Exponent> e(vars.size());
    while (!r.is_zero()) {
        // next term of s = LT(r) / (2 LT(s))
        const auto &rv = r.variables();
        auto er = r.exponents(0);
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t j = 0; j < rv.size(); ++j) {
            auto it = std::find(vars.begin(), vars.end(), rv[j]);
            if (it == vars.end()) return std::nullopt;
            e[static_cast<std::size_t>(it - vars.begin())] = er[j];
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] < half[i]) return std::nullopt;
            e[i] -= half[i];
            if (e[i] > bound[i]) return std::nullopt;
        }
        const Polynomial t = Polynomial::from_terms(vars, {{e, r.leading_coefficient() / (2 * root_lc)}});
        if (!t.is_constant() || !lead.is_constant()) {
            // the new term must be strictly smaller than the leading one
            if (t.variables() == lead.variables() && t.exponents(0).size() == lead.exponents(0).size() &&
                std::equal(t.exponents(0).begin(), t.exponents(0).end(), lead.exponents(0).begin())) {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
        r = r - (s.scaled(2) + t) * t;
        s = s + t;
    }
    return s;
}

std::optional<RationalFunction> exact_sqrt(const RationalFunction &f)
{
    auto n = exact_sqrt(f.numerator());
    if (!n) return std::nullopt;
    auto d = exact_sqrt(f.denominator());
    if (!d) return std::nullopt;
    return RationalFunction::fraction(*n, *d);
}

} // namespace pvi
