#include "pvi/picard_fuchs.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"
#include "pvi/roots.hpp"

#include <algorithm>

namespace pvi {

namespace {

RationalFunction var(const char *name) { return RationalFunction::variable(name); }

RationalFunction q(long n, long d = 1) { return RationalFunction(Rational(n, d)); }

// dt1 coefficient of the three-point connection.
Matrix three_point_dt1(const RationalFunction &a, const RationalFunction &b, const RationalFunction &c,
                       const RationalFunction &t1, const RationalFunction &t2, const RationalFunction &t3)
{
    const RationalFunction inv = ((t1 - t2) * (t1 - t3)).inverse();
    const RationalFunction h = q(1, 2) * ((b + c - 2) * t1 + (a + c - 1) * t2 + (a + b - 1) * t3);
    return inv * Matrix{{h, -a - b - c + 2}, {a * t2 * t3 + (b - 1) * t1 * t3 + (c - 1) * t1 * t2, -h}};
}

} // namespace

const Matrix &ParametricConnection::coefficient(const std::string &v) const
{
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] == v) return coefficients[i];
    }
    throw MathError("connection has no coefficient for " + v);
}

ParametricConnection general_three_point_connection(const RationalFunction &a, const RationalFunction &b,
                                                    const RationalFunction &c)
{
    const auto t1 = var("t1"), t2 = var("t2"), t3 = var("t3");
    ParametricConnection out;
    out.kind = ConnectionKind::ThreePoint;
    out.base = {"t1", "t2", "t3"};
    out.coefficients = {three_point_dt1(a, b, c, t1, t2, t3), three_point_dt1(b, a, c, t2, t1, t3),
                        three_point_dt1(c, b, a, t3, t2, t1)};
    return out;
}

ParametricConnection cubic_connection(const RationalFunction &a)
{
    const auto t2 = var("t2"), t3 = var("t3");
    const RationalFunction inv = (27 * t3 * t3 - t2.pow(3)).inverse();
    ParametricConnection out;
    out.kind = ConnectionKind::Cubic;
    out.base = {"t2", "t3"};
    out.coefficients = {
        inv * Matrix{{q(1, 4) * t2 * t2, -27 * a * t3 + 18 * t3},
                     {q(-9, 4) * a * t2 * t3 + q(3, 4) * t2 * t3, q(-1, 4) * t2 * t2}},
        inv * Matrix{{q(-9, 2) * t3, 18 * a * t2 - 12 * t2},
                     {q(3, 2) * a * t2 * t2 - q(1, 2) * t2 * t2, q(9, 2) * t3}},
    };
    return out;
}

ParametricConnection quartic_factored_connection(const RationalFunction &a, const RationalFunction &c)
{
    const auto t2 = var("t2"), t3 = var("t3");
    const RationalFunction inv = ((t2 * t2 - 16 * t3) * (t2 * t2 + 2 * t3)).inverse();
    const RationalFunction t2c = t2.pow(3);
    ParametricConnection out;
    out.kind = ConnectionKind::QuarticFactored;
    out.base = {"t2", "t3"};
    const RationalFunction d2 = 6 * a * t2 * t3 - 6 * c * t2 * t3 - q(1, 2) * t2c + 5 * t2 * t3;
    const RationalFunction d3 = -3 * a * t2 * t2 + 3 * c * t2 * t2 + t2 * t2 + 8 * t3;
    out.coefficients = {
        inv * Matrix{{d2, -48 * a * t3 - 96 * c * t3 + 96 * t3},
                     {12 * a * t3 * t3 - 3 * c * t2 * t2 * t3 + t2 * t2 * t3 - 4 * t3 * t3, -d2}},
        inv * Matrix{{d3, 24 * a * t2 + 48 * c * t2 - 48 * t2},
                     {-6 * a * t2 * t3 + q(3, 2) * c * t2c - q(1, 2) * t2c + 2 * t2 * t3, -d3}},
    };
    return out;
}

Matrix flatness_residual(const ParametricConnection &conn, const std::string &u, const std::string &v)
{
    const Matrix &au = conn.coefficient(u);
    const Matrix &av = conn.coefficient(v);
    return av.derivative(u) - au.derivative(v) - (au * av - av * au);
}

bool is_flat(const ParametricConnection &conn)
{
    for (std::size_t i = 0; i < conn.base.size(); ++i) {
        for (std::size_t j = i + 1; j < conn.base.size(); ++j) {
            if (!flatness_residual(conn, conn.base[i], conn.base[j]).is_zero()) return false;
        }
    }
    return true;
}

CurveFamily herfurtner(int family_id)
{
    const auto z = var("z"), b = var("b");
    CurveFamily f;
    f.id = family_id;
    switch (family_id) {
    case 1:
        f.g2 = 3 * (z - 1) * (z - b * b).pow(3);
        f.g3 = (z - 1) * (z - b * b).pow(4) * (z + b);
        break;
    case 2:
        f.g2 = 12 * z * z * (z * z + b * z + 1);
        f.g3 = 4 * z.pow(3) * (2 * z.pow(3) + 3 * b * z * z + 3 * b * z + 2);
        break;
    case 3:
        f.g2 = 12 * z * z * (z * z + 2 * b * z + 1);
        f.g3 = 4 * z.pow(3) * (2 * z.pow(3) + 3 * (b * b + 1) * z * z + 6 * b * z + 2);
        break;
    case 4:
        f.g2 = 3 * z.pow(3) * (z + b);
        f.g3 = z.pow(5) * (z + 1);
        break;
    case 5:
        f.g2 = 3 * z.pow(3) * (z + 2 * b);
        f.g3 = z.pow(4) * (z * z + 3 * b * z + 1);
        break;
    default:
        throw Error("curve family " + std::to_string(family_id) + " out of range 1..5");
    }
    return f;
}

CurveFamily rationalize(const CurveFamily &family)
{
    if (family.rationalized) return family;
    const auto z = var("z"), b = var("b");
    std::map<std::string, RationalFunction> sub;
    switch (family.id) {
    case 1:
        break;
    case 2:
        // z is not rescaled here; the Moebius normalization does it later
        sub["b"] = q(3, 4) * (b + b.inverse()) + q(1, 2);
        break;
    case 3:
        sub["b"] = q(2, 3) * (b + b.inverse()) - q(1, 3);
        sub["z"] = -(b * b + 2 * b) / 3 * z;
        break;
    case 4:
        sub["b"] = q(2, 3) * (b * b - 3) / (b * b + 3) + q(1, 3);
        sub["z"] = -(b.pow(3) - 3 * b * b + 3 * b - 1) / (b.pow(3) - 3 * b * b + 3 * b - 9) * z;
        break;
    case 5:
        sub["b"] = q(1, 4) * (b + 2 * b.inverse());
        sub["z"] = -2 * b.pow(3) / (3 * b * b - 2) * z;
        break;
    default:
        throw Error("curve family " + std::to_string(family.id) + " out of range 1..5");
    }
    CurveFamily out = family;
    if (!sub.empty()) {
        out.g2 = family.g2.substitute(sub);
        out.g3 = family.g3.substitute(sub);
    }
    out.substitution = sub;
    out.rationalized = true;
    return out;
}

RationalFunction discriminant(const CurveFamily &family)
{
    return family.g2.pow(3) - 27 * family.g3 * family.g3;
}

std::array<RationalFunction, 3> discriminant_roots(const CurveFamily &family)
{
    const RationalFunction delta = discriminant(family);
    if (delta.is_zero()) throw MathError("discriminant vanishes identically");
    std::vector<RationalFunction> roots;
    for (const auto &r : rational_roots(delta.numerator(), "z")) roots.push_back(r.value);
    if (roots.size() != 3) {
        throw MathError("discriminant has " + std::to_string(roots.size()) + " distinct finite roots, expected 3");
    }
    const RationalFunction zero, one(1);
    auto take = [&](const RationalFunction &v) {
        auto it = std::find(roots.begin(), roots.end(), v);
        if (it == roots.end()) return false;
        roots.erase(it);
        return true;
    };
    if (!take(zero)) throw MathError("discriminant has no root at z = 0");
    RationalFunction t1, t3;
    if (take(one)) {
        t1 = roots[0];
        t3 = one;
    } else {
        const int d0 = roots[0].denominator().degree("b"), d1 = roots[1].denominator().degree("b");
        t3 = d1 > d0 ? roots[1] : roots[0];
        t1 = d1 > d0 ? roots[0] : roots[1];
    }
    return {t1, zero, t3};
}

std::optional<CubicSplit> factor_cubic(const CurveFamily &family)
{
    if (family.g2.is_zero() && family.g3.is_zero()) return std::nullopt;
    const auto x = var("x");
    const RationalFunction f = 4 * x.pow(3) - family.g2 * x - family.g3;
    const auto roots = find_rational_roots(f.numerator(), "x");
    if (roots.empty()) return std::nullopt;
    CubicSplit out;
    out.g2 = -4 * roots.front().value;
    out.g3 = out.g2 * out.g2 / 4 - family.g2;
    out.quadratic = 4 * x * x - out.g2 * x + out.g3;
    out.linear = x + out.g2 / 4;
    if (out.quadratic * out.linear != f) throw MathError("cubic split does not multiply back");
    return out;
}

FuchsianSystem pullback(const ParametricConnection &conn, const CurveFamily &family)
{
    if (!family.rationalized) throw MathError("pullback needs a rationalized family");
    if (conn.kind == ConnectionKind::ThreePoint) throw MathError("pullback is defined for the (t2, t3) connections");
    RationalFunction g2 = family.g2, g3 = family.g3;
    const auto split = factor_cubic(family);
    if (conn.kind == ConnectionKind::QuarticFactored) {
        if (!split) throw MathError("quartic connection needs a family whose cubic splits");
        g2 = split->g2;
        g3 = split->g3;
    } else if (split) {
        throw MathError("cubic connection needs a family whose cubic does not split");
    }
    const std::map<std::string, RationalFunction> at{{"t2", g2}, {"t3", g3}};
    FuchsianSystem out;
    out.matrix = g2.derivative("z") * conn.coefficient("t2").substitute(at) +
                 g3.derivative("z") * conn.coefficient("t3").substitute(at);
    const auto roots = discriminant_roots(family);
    out.singularities.assign(roots.begin(), roots.end());
    return out;
}

FuchsianSystem derive_system(int family_id)
{
    const CurveFamily f = rationalize(herfurtner(family_id));
    const bool split = factor_cubic(f).has_value();
    return pullback(split ? quartic_factored_connection() : cubic_connection(), f);
}

} // namespace pvi
