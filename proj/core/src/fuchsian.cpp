#include "pvi/fuchsian.hpp"

#include "pvi/error.hpp"
#include "pvi/partial_fractions.hpp"
#include "pvi/roots.hpp"

#include <algorithm>

namespace pvi {

namespace {

const RationalFunction kHalf(Rational(1, 2));

// Square root with positive leading numerator coefficient, or MathError.
RationalFunction sqrt_or_throw(const RationalFunction &f, const std::string &what)
{
    auto r = exact_sqrt(f);
    if (!r) throw MathError(what + " does not split: discriminant " + to_string(f.numerator()) + " is not a square");
    return *r;
}

// Coefficient of 1/(z - p)^k, k = 1 or 2; throws if the pole order exceeds max_order.
RationalFunction laurent(const RationalFunction &f, const std::string &z, const RationalFunction &p, int k,
                         int max_order, const char *name)
{
    const auto pp = principal_part(f, z, p);
    if (static_cast<int>(pp.size()) > max_order) {
        throw MathError(std::string(name) + " has a pole of order " + std::to_string(pp.size()) + " at " + z + " = " +
                        to_string(p.numerator()) + "; not Fuchsian");
    }
    return static_cast<int>(pp.size()) >= k ? pp[static_cast<std::size_t>(k - 1)] : RationalFunction();
}

// lim z^2 f for f = O(1/z^2) at infinity.
RationalFunction leading_at_infinity(const RationalFunction &f, const std::string &z)
{
    const int dn = f.numerator().degree(z), dd = f.denominator().degree(z);
    if (f.is_zero() || dn < dd - 2) return {};
    if (dn > dd - 2) throw MathError("expression is not O(1/" + z + "^2) at infinity");
    const auto n = f.numerator().coefficients_in(z);
    const auto d = f.denominator().coefficients_in(z);
    return RationalFunction::fraction(n.back(), d.back());
}

} // namespace

RationalFunction RiemannScheme::fuchs_defect() const
{
    RationalFunction sum;
    for (const auto &c : columns) sum += c.s1 + c.s2;
    return sum - RationalFunction(static_cast<long>(columns.size()) - 2);
}

ScalarODE system_to_scalar(const FuchsianSystem &system, int coordinate)
{
    const Matrix &q = system.matrix;
    if (q.rows() != 2 || q.cols() != 2) throw MathError("system_to_scalar needs a 2x2 system");
    if (coordinate != 1 && coordinate != 2) throw MathError("coordinate must be 1 or 2");
    const std::size_t i = coordinate == 1 ? 0 : 1, j = 1 - i;
    const RationalFunction &off = q(i, j);
    const RationalFunction &diag = q(i, i);
    if (off.is_zero()) throw MathError("off-diagonal entry vanishes identically");
    const std::string &z = system.z;
    const RationalFunction dlog = off.derivative(z) / off;
    ScalarODE out;
    out.z = z;
    out.p1 = -dlog - q.trace();
    out.p2 = det(q) - diag.derivative(z) + diag * dlog;
    out.singularities = system.singularities;
    out.off_diagonal = off;
    return out;
}

SLForm sl_form(const ScalarODE &ode)
{
    SLForm out;
    out.z = ode.z;
    out.p = -ode.p2 + ode.p1 * ode.p1 / 4 + ode.p1.derivative(ode.z) / 2;
    out.singularities = ode.singularities;
    return out;
}

ScalarODE as_ode(const SLForm &sl)
{
    ScalarODE out;
    out.z = sl.z;
    out.p2 = -sl.p;
    out.singularities = sl.singularities;
    return out;
}

RiemannScheme riemann_scheme(const ScalarODE &ode)
{
    const std::string &z = ode.z;
    // every pole must be a declared point and both coefficients must vanish at infinity
    if (!partial_fractions(ode.p1, z, ode.singularities).polynomial_part.is_zero() ||
        !partial_fractions(ode.p2, z, ode.singularities).polynomial_part.is_zero()) {
        throw MathError("coefficients do not vanish at infinity; not Fuchsian");
    }
    RiemannScheme scheme;
    RationalFunction sum_a, sum_b, sum_ct, sum_c;
    for (const auto &t : ode.singularities) {
        const RationalFunction a = laurent(ode.p1, z, t, 1, 1, "p1");
        const RationalFunction b = laurent(ode.p2, z, t, 2, 2, "p2");
        const RationalFunction c = laurent(ode.p2, z, t, 1, 2, "p2");
        sum_a += a;
        sum_b += b;
        sum_c += c;
        sum_ct += c * t;
        // s^2 + (a - 1) s + b = 0
        const RationalFunction r = sqrt_or_throw((a - 1) * (a - 1) - 4 * b, "exponent quadratic");
        scheme.columns.push_back({t, ((1 - a) - r) * kHalf, ((1 - a) + r) * kHalf});
    }
    if (!sum_c.is_zero()) throw MathError("p2 is not O(1/z^2) at infinity; not Fuchsian");
    // s^2 + (1 - sum a) s + (sum b + sum c t) = 0
    const RationalFunction B = 1 - sum_a;
    const RationalFunction r = sqrt_or_throw(B * B - 4 * (sum_b + sum_ct), "exponent quadratic at infinity");
    scheme.columns.push_back({std::nullopt, (-B - r) * kHalf, (-B + r) * kHalf});
    return scheme;
}

std::vector<ApparentPoint> apparent_singularities(const ScalarODE &ode,
                                                  const std::vector<RationalFunction> &true_singular)
{
    if (!ode.off_diagonal) throw MathError("equation carries no off-diagonal entry");
    std::vector<ApparentPoint> out;
    const Polynomial &num = ode.off_diagonal->numerator();
    if (num.degree(ode.z) <= 0) return out;
    for (const auto &r : rational_roots(num, ode.z)) {
        if (std::find(true_singular.begin(), true_singular.end(), r.value) != true_singular.end()) {
            throw MathError("zero of the off-diagonal entry at the singular point " + to_string(r.value.numerator()));
        }
        out.push_back({r.value, r.multiplicity, RationalFunction(), RationalFunction(r.multiplicity + 1)});
    }
    return out;
}

RationalFunction theta_from_coefficient(const RationalFunction &ai, const std::optional<RationalFunction> &hint)
{
    const RationalFunction r = sqrt_or_throw(4 * ai + 1, "theta^2 = 4 a + 1");
    if (hint && (*hint == r || *hint == -r)) return *hint;
    return r;
}

RationalFunction sl_template(const std::string &z, const std::array<RationalFunction, 3> &points,
                             const RationalFunction &lambda, const AccessoryData &data)
{
    const RationalFunction x = RationalFunction::variable(z);
    const RationalFunction &t1 = points[0], &t3 = points[2];
    const auto &th = data.theta;
    RationalFunction p;
    RationalFunction sum_sq;
    for (std::size_t i = 0; i < 3; ++i) {
        const RationalFunction ai = (th[i] * th[i] - 1) / 4;
        p += ai * (x - points[i]).pow(-2);
        sum_sq += th[i] * th[i];
    }
    const RationalFunction a4 = -(sum_sq - th[3] * th[3] - 1) / 4 - kHalf;
    p += a4 / (x * (x - t3));
    p += (t1 * (t1 - t3) / t3 * data.L) / (x * (x - t1) * (x - t3));
    p += RationalFunction(Rational(3, 4)) * (x - lambda).pow(-2);
    p -= (lambda * (lambda - t3) / t3 * data.nu) / (x * (x - t3) * (x - lambda));
    return p;
}

AccessoryData accessory_parameters(const SLForm &sl, const std::array<RationalFunction, 3> &points,
                                   const RationalFunction &lambda,
                                   const std::optional<std::array<RationalFunction, 4>> &theta_hint)
{
    if (!points[1].is_zero()) throw MathError("accessory parameters need t2 = 0");
    const std::string &z = sl.z;
    const RationalFunction &p = sl.p;
    AccessoryData out;
    auto hint = [&](std::size_t i) -> std::optional<RationalFunction> {
        if (theta_hint) return (*theta_hint)[i];
        return std::nullopt;
    };
    for (std::size_t i = 0; i < 3; ++i) {
        out.theta[i] = theta_from_coefficient(laurent(p, z, points[i], 2, 2, "p"), hint(i));
    }
    out.theta[3] = theta_from_coefficient(leading_at_infinity(p, z), hint(3));
    const auto at_lambda = principal_part(p, z, lambda);
    if (at_lambda.size() != 2 || at_lambda[1] != RationalFunction(Rational(3, 4))) {
        throw MathError("SL-form does not have the apparent-point term 3/4 (z - lambda)^-2");
    }
    out.L = points[2] * laurent(p, z, points[0], 1, 2, "p");
    out.nu = -points[2] * at_lambda[0];
    if (sl_template(z, points, lambda, out) != p) throw MathError("SL-form does not match the four-point template");
    return out;
}

RationalFunction mu_from_nu(const std::array<RationalFunction, 4> &theta, const std::array<RationalFunction, 3> &points,
                            const RationalFunction &lambda, const RationalFunction &nu)
{
    RationalFunction s;
    for (std::size_t i = 0; i < 3; ++i) s += (1 - theta[i]) / (lambda - points[i]);
    return nu - s * kHalf;
}

RationalFunction nu_from_mu(const std::array<RationalFunction, 4> &theta, const std::array<RationalFunction, 3> &points,
                            const RationalFunction &lambda, const RationalFunction &mu)
{
    RationalFunction s;
    for (std::size_t i = 0; i < 3; ++i) s += (1 - theta[i]) / (lambda - points[i]);
    return mu + s * kHalf;
}

} // namespace pvi
