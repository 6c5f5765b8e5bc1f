#include "pvi/polynomial.hpp"

#include "pvi/error.hpp"
#include "pvi/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pvi {

namespace {

using Exp = Polynomial::Exponent;

// Lexicographic comparison of two exponent rows: <0, 0, >0.
int compare_exps(std::span<const Exp> a, std::span<const Exp> b) noexcept
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::size_t index_of(const std::vector<std::string> &vars, std::string_view var)
{
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == var) return i;
    }
    return vars.size();
}

} // namespace

bool reduce_mod(const Rational &q, unsigned long p, unsigned long &out)
{
    const unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) return false;
    const unsigned long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    // inverse of den by Fermat
    unsigned long long inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    out = static_cast<unsigned long>(static_cast<unsigned long long>(num) * inv % p);
    return true;
}

// ---------------------------------------------------------------------------
// PolynomialBuilder

void PolynomialBuilder::add(std::span<const Exp> exps, const Rational &coeff)
{
    if (coeff == 0) return;
    exps_.insert(exps_.end(), exps.begin(), exps.end());
    coeffs_.push_back(coeff);
}

Polynomial PolynomialBuilder::build() &&
{
    const std::size_t nv = vars_.size();
    const std::size_t n = coeffs_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto row = [&](std::size_t i) { return std::span<const Exp>(exps_.data() + i * nv, nv); };
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return compare_exps(row(l), row(r)) > 0; });

    Polynomial out;
    out.vars_ = std::move(vars_);
    out.coeffs_.reserve(n);
    out.exps_.reserve(n * nv);
    for (std::size_t k = 0; k < n;) {
        Rational sum = coeffs_[order[k]];
        std::size_t j = k + 1;
        while (j < n && compare_exps(row(order[k]), row(order[j])) == 0) {
            sum += coeffs_[order[j]];
            ++j;
        }
        if (sum != 0) {
            auto r = row(order[k]);
            out.exps_.insert(out.exps_.end(), r.begin(), r.end());
            out.coeffs_.push_back(std::move(sum));
        }
        k = j;
    }
    out.prune();
    return out;
}

Polynomial PolynomialBuilder::build_sorted() &&
{
    Polynomial out;
    out.vars_ = std::move(vars_);
    out.coeffs_ = std::move(coeffs_);
    out.exps_ = std::move(exps_);
    out.prune();
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial basics

Polynomial::Polynomial(const Rational &constant)
{
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::variable(const std::string &name, Exponent power)
{
    if (!is_identifier(name)) throw MathError("invalid symbol name '" + name + "'");
    Polynomial p;
    if (power == 0) return Polynomial(1);
    p.vars_ = {name};
    p.coeffs_ = {Rational(1)};
    p.exps_ = {power};
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars,
                                  std::vector<std::pair<std::vector<Exponent>, Rational>> terms)
{
    PolynomialBuilder builder(std::move(vars));
    for (auto &[exps, coeff] : terms) builder.add(exps, coeff);
    return std::move(builder).build();
}

Rational Polynomial::constant_value() const
{
    if (!is_constant()) throw MathError("polynomial is not constant: " + to_string(*this));
    return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

Rational Polynomial::constant_term() const
{
    if (coeffs_.empty()) return 0;
    const std::size_t last = coeffs_.size() - 1;
    auto e = exponents(last);
    if (std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; })) return coeffs_[last];
    return 0;
}

bool Polynomial::contains(std::string_view var) const noexcept
{
    return index_of(vars_, var) < vars_.size();
}

const Rational &Polynomial::leading_coefficient() const
{
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.front();
}

int Polynomial::degree(std::string_view var) const
{
    if (is_zero()) return -1;
    const std::size_t k = index_of(vars_, var);
    if (k == vars_.size()) return 0;
    Exp best = 0;
    for (std::size_t t = 0; t < term_count(); ++t) best = std::max(best, exps_[t * nvars() + k]);
    return static_cast<int>(best);
}

int Polynomial::min_degree(std::string_view var) const
{
    if (is_zero()) return -1;
    const std::size_t k = index_of(vars_, var);
    if (k == vars_.size()) return 0;
    Exp best = exps_[k];
    for (std::size_t t = 0; t < term_count(); ++t) best = std::min(best, exps_[t * nvars() + k]);
    return static_cast<int>(best);
}

int Polynomial::total_degree() const
{
    if (is_zero()) return -1;
    Exp best = 0;
    for (std::size_t t = 0; t < term_count(); ++t) {
        auto e = exponents(t);
        best = std::max(best, std::accumulate(e.begin(), e.end(), Exp{0}));
    }
    return static_cast<int>(best);
}

Polynomial Polynomial::with_variables(const std::vector<std::string> &superset) const
{
    if (superset == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = index_of(superset, vars_[i]);
    Polynomial out;
    out.vars_ = superset;
    out.coeffs_ = coeffs_;
    out.exps_.assign(term_count() * superset.size(), 0);
    for (std::size_t t = 0; t < term_count(); ++t) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            out.exps_[t * superset.size() + pos[i]] = exps_[t * vars_.size() + i];
        }
    }
    return out;
}

void Polynomial::prune()
{
    const std::size_t nv = nvars();
    if (nv == 0) return;
    std::vector<bool> used(nv, false);
    for (std::size_t t = 0; t < term_count(); ++t) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (exps_[t * nv + i] != 0) used[i] = true;
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < nv; ++i) {
        if (used[i]) vars.push_back(vars_[i]);
    }
    std::vector<Exp> exps;
    exps.reserve(term_count() * vars.size());
    for (std::size_t t = 0; t < term_count(); ++t) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (used[i]) exps.push_back(exps_[t * nv + i]);
        }
    }
    vars_ = std::move(vars);
    exps_ = std::move(exps);
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

// Merge-add two polynomials that share a variable layout (sign = +1 or -1 for rhs).
Polynomial merge_add(const Polynomial &a, const Polynomial &b, int sign,
                     const std::vector<std::string> &vars)
{
    PolynomialBuilder builder(vars);
    std::size_t i = 0, j = 0;
    while (i < a.term_count() || j < b.term_count()) {
        int cmp;
        if (i == a.term_count()) cmp = -1;
        else if (j == b.term_count()) cmp = 1;
        else cmp = compare_exps(a.exponents(i), b.exponents(j));
        if (cmp > 0) {
            builder.add(a.exponents(i), a.coefficient(i));
            ++i;
        } else if (cmp < 0) {
            builder.add(b.exponents(j), sign > 0 ? b.coefficient(j) : Rational(-b.coefficient(j)));
            ++j;
        } else {
            Rational s = sign > 0 ? Rational(a.coefficient(i) + b.coefficient(j))
                                  : Rational(a.coefficient(i) - b.coefficient(j));
            builder.add(a.exponents(i), s);
            ++i;
            ++j;
        }
    }
    return std::move(builder).build_sorted();
}

} // namespace

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(const Polynomial &lhs, const Polynomial &rhs)
{
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    const auto vars = merge_symbols(lhs.vars_, rhs.vars_);
    return merge_add(lhs.with_variables(vars), rhs.with_variables(vars), +1, vars);
}

Polynomial operator-(const Polynomial &lhs, const Polynomial &rhs)
{
    if (rhs.is_zero()) return lhs;
    if (lhs.is_zero()) return -rhs;
    const auto vars = merge_symbols(lhs.vars_, rhs.vars_);
    return merge_add(lhs.with_variables(vars), rhs.with_variables(vars), -1, vars);
}

Polynomial operator*(const Polynomial &lhs, const Polynomial &rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (lhs.is_constant()) return rhs.scaled(lhs.coeffs_.front());
    if (rhs.is_constant()) return lhs.scaled(rhs.coeffs_.front());
    const auto vars = merge_symbols(lhs.vars_, rhs.vars_);
    const Polynomial a = lhs.term_count() <= rhs.term_count() ? lhs.with_variables(vars)
                                                               : rhs.with_variables(vars);
    const Polynomial b = lhs.term_count() <= rhs.term_count() ? rhs.with_variables(vars)
                                                               : lhs.with_variables(vars);
    const std::size_t nv = vars.size();

    // Multiplying a sorted polynomial by one monomial keeps it sorted; sum the
    // shifted copies pairwise.
    std::vector<Polynomial> parts;
    parts.reserve(a.term_count());
    for (std::size_t i = 0; i < a.term_count(); ++i) {
        Polynomial part;
        part.vars_ = vars;
        part.coeffs_.reserve(b.term_count());
        part.exps_.resize(b.term_count() * nv);
        auto ea = a.exponents(i);
        for (std::size_t j = 0; j < b.term_count(); ++j) {
            part.coeffs_.push_back(a.coefficient(i) * b.coefficient(j));
            auto eb = b.exponents(j);
            for (std::size_t k = 0; k < nv; ++k) part.exps_[j * nv + k] = ea[k] + eb[k];
        }
        parts.push_back(std::move(part));
    }
    while (parts.size() > 1) {
        std::vector<Polynomial> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            next.push_back(merge_add(parts[i], parts[i + 1], +1, vars).with_variables(vars));
        }
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    Polynomial out = std::move(parts.front());
    out.prune();
    return out;
}

Polynomial Polynomial::scaled(const Rational &factor) const
{
    if (factor == 0) return {};
    Polynomial out = *this;
    for (auto &c : out.coeffs_) c *= factor;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial &divisor) const
{
    if (divisor.is_zero()) throw MathError("division by the zero polynomial");
    if (is_zero()) return Polynomial{};
    if (divisor.is_constant()) return scaled(Rational(1) / divisor.coeffs_.front());
    for (const auto &v : divisor.vars_) {
        if (degree(v) < divisor.degree(v)) return std::nullopt;
    }
    const auto &vars = vars_;
    const std::size_t nv = vars.size();
    const Polynomial d = divisor.with_variables(vars);
    const Rational lead_inv = Rational(1) / d.coeffs_.front();
    auto d_lead = d.exponents(0);

    Polynomial rem = *this;
    PolynomialBuilder quotient(vars);
    std::vector<Exp> shift(nv);
    while (!rem.is_zero()) {
        auto r_lead = rem.exponents(0);
        for (std::size_t k = 0; k < nv; ++k) {
            if (r_lead[k] < d_lead[k]) return std::nullopt;
            shift[k] = r_lead[k] - d_lead[k];
        }
        const Rational factor = rem.coeffs_.front() * lead_inv;
        quotient.add(shift, factor);

        Polynomial sub;
        sub.vars_ = vars;
        sub.coeffs_.reserve(d.term_count());
        sub.exps_.resize(d.term_count() * nv);
        for (std::size_t j = 0; j < d.term_count(); ++j) {
            sub.coeffs_.push_back(d.coeffs_[j] * factor);
            auto e = d.exponents(j);
            for (std::size_t k = 0; k < nv; ++k) sub.exps_[j * nv + k] = e[k] + shift[k];
        }
        rem = merge_add(rem.with_variables(vars), sub, -1, vars);
        if (!rem.is_zero() && rem.vars_ != vars) {
            // A variable dropped out of the remainder; the divisor's leading
            // monomial still involves the full layout, so re-expand.
            rem = rem.with_variables(vars);
        }
    }
    return std::move(quotient).build();
}

Polynomial Polynomial::exact_quotient(const Polynomial &divisor) const
{
    auto q = divide_exact(divisor);
    if (!q) throw MathError("inexact polynomial division: (" + to_string(*this) + ") / (" +
                            to_string(divisor) + ")");
    return std::move(*q);
}

Polynomial Polynomial::derivative(std::string_view var) const
{
    const std::size_t k = index_of(vars_, var);
    if (k == vars_.size()) return {};
    const std::size_t nv = nvars();
    PolynomialBuilder builder(vars_);
    std::vector<Exp> e(nv);
    for (std::size_t t = 0; t < term_count(); ++t) {
        auto src = exponents(t);
        if (src[k] == 0) continue;
        std::copy(src.begin(), src.end(), e.begin());
        e[k] -= 1;
        builder.add(e, coeffs_[t] * src[k]);
    }
    return std::move(builder).build();
}

std::vector<Polynomial> Polynomial::coefficients_in(std::string_view var) const
{
    const std::size_t k = index_of(vars_, var);
    if (k == vars_.size()) return {*this};
    const int deg = degree(var);
    std::vector<PolynomialBuilder> builders(static_cast<std::size_t>(deg) + 1,
                                            PolynomialBuilder(vars_));
    std::vector<Exp> e(nvars());
    for (std::size_t t = 0; t < term_count(); ++t) {
        auto src = exponents(t);
        std::copy(src.begin(), src.end(), e.begin());
        const Exp d = e[k];
        e[k] = 0;
        builders[d].add(e, coeffs_[t]);
    }
    std::vector<Polynomial> out;
    out.reserve(builders.size());
    for (auto &b : builders) out.push_back(std::move(b).build());
    return out;
}

Polynomial Polynomial::from_coefficients(const std::string &var, const std::vector<Polynomial> &coeffs)
{
    Polynomial out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        out += coeffs[k] * Polynomial::variable(var, static_cast<Exp>(k));
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational> &values) const
{
    std::vector<const Rational *> vals(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end()) throw MathError("no value bound for symbol '" + vars_[i] + "'");
        vals[i] = &it->second;
    }
    Rational sum = 0;
    Rational term;
    mpq_class power;
    for (std::size_t t = 0; t < term_count(); ++t) {
        term = coeffs_[t];
        auto e = exponents(t);
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), vals[i]->get_num_mpz_t(), e[i]);
            mpz_pow_ui(power.get_den_mpz_t(), vals[i]->get_den_mpz_t(), e[i]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::partial_evaluate(const std::map<std::string, Rational> &values) const
{
    std::vector<std::string> keep;
    std::vector<std::size_t> keep_idx, bound_idx;
    std::vector<const Rational *> bound_vals;
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end()) {
            keep.push_back(vars_[i]);
            keep_idx.push_back(i);
        } else {
            bound_idx.push_back(i);
            bound_vals.push_back(&it->second);
        }
    }
    if (bound_idx.empty()) return *this;
    PolynomialBuilder builder(keep);
    std::vector<Exp> e(keep.size());
    mpq_class power;
    for (std::size_t t = 0; t < term_count(); ++t) {
        auto src = exponents(t);
        Rational c = coeffs_[t];
        for (std::size_t j = 0; j < bound_idx.size(); ++j) {
            const Exp d = src[bound_idx[j]];
            if (d == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), bound_vals[j]->get_num_mpz_t(), d);
            mpz_pow_ui(power.get_den_mpz_t(), bound_vals[j]->get_den_mpz_t(), d);
            c *= power;
        }
        for (std::size_t j = 0; j < keep_idx.size(); ++j) e[j] = src[keep_idx[j]];
        builder.add(e, c);
    }
    return std::move(builder).build();
}

Polynomial Polynomial::compose(const std::map<std::string, Polynomial> &values) const
{
    // Split variables into substituted and kept ones; group terms by the kept
    // monomial to share the power cache.
    std::vector<std::size_t> sub_idx;
    std::vector<const Polynomial *> sub_vals;
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = values.find(vars_[i]);
        if (it != values.end()) {
            sub_idx.push_back(i);
            sub_vals.push_back(&it->second);
        }
    }
    if (sub_idx.empty()) return *this;
    std::vector<std::vector<Polynomial>> powers(sub_idx.size());
    for (std::size_t j = 0; j < sub_idx.size(); ++j) {
        powers[j].push_back(Polynomial(1));
        const int deg = degree(vars_[sub_idx[j]]);
        for (int d = 1; d <= deg; ++d) powers[j].push_back(powers[j].back() * *sub_vals[j]);
    }
    Polynomial out;
    std::vector<std::pair<std::vector<Exp>, Rational>> kept_term(1);
    for (std::size_t t = 0; t < term_count(); ++t) {
        auto src = exponents(t);
        std::vector<Exp> e(src.begin(), src.end());
        Polynomial factor(coeffs_[t]);
        for (std::size_t j = 0; j < sub_idx.size(); ++j) {
            factor = factor * powers[j][src[sub_idx[j]]];
            e[sub_idx[j]] = 0;
        }
        kept_term[0] = {e, Rational(1)};
        out += factor * Polynomial::from_terms(vars_, kept_term);
    }
    return out;
}

Rational Polynomial::content() const
{
    if (is_zero()) return 0;
    mpz_class g = 0, l = 1;
    for (const auto &c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(g, l);
    out.canonicalize();
    return abs(out);
}

std::pair<Rational, Polynomial> Polynomial::normalize() const
{
    if (is_zero()) return {Rational(1), Polynomial{}};
    Rational scale = content();
    if (coeffs_.front() < 0) scale = -scale;
    if (scale == 1) return {scale, *this};
    return {scale, scaled(Rational(1) / scale)};
}

Polynomial Polynomial::monomial_content() const
{
    if (is_zero()) return {};
    std::vector<Exp> low(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(nvars()));
    for (std::size_t t = 1; t < term_count(); ++t) {
        auto e = exponents(t);
        for (std::size_t i = 0; i < nvars(); ++i) low[i] = std::min(low[i], e[i]);
    }
    return Polynomial::from_terms(vars_, {{low, Rational(1)}});
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Polynomial &p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    const auto &vars = p.variables();
    for (std::size_t t = 0; t < p.term_count(); ++t) {
        Rational c = p.coefficient(t);
        auto e = p.exponents(t);
        const bool has_monomial = std::any_of(e.begin(), e.end(), [](Exp x) { return x != 0; });
        if (c < 0) {
            out << '-';
            c = -c;
        } else if (t > 0) {
            out << '+';
        }
        bool first = true;
        if (!has_monomial || c != 1) {
            out << c.get_str();
            first = false;
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) out << '*';
            out << vars[i];
            if (e[i] != 1) out << '^' << e[i];
            first = false;
        }
    }
    return out.str();
}

} // namespace pvi
