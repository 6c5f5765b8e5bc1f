#include "pvi/painleve.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"
#include "pvi/roots.hpp"

#include <algorithm>

namespace pvi {

namespace {

const RationalFunction kLambda = RationalFunction::variable("lambda");
const RationalFunction kMu = RationalFunction::variable("mu");
const RationalFunction kT = RationalFunction::variable("t");

// t (t - 1) K as a polynomial in lambda, mu, t
RationalFunction scaled_hamiltonian(const std::array<RationalFunction, 4> &th, const RationalFunction &l,
                                    const RationalFunction &m, const RationalFunction &t)
{
    return l * (l - 1) * (l - t) * m * m -
           (th[1] * (l - 1) * (l - t) + th[2] * l * (l - t) + (th[0] - 1) * l * (l - 1)) * m + kappa(th) * (l - t);
}

} // namespace

RationalFunction kappa(const std::array<RationalFunction, 4> &theta)
{
    const RationalFunction s = theta[0] + theta[1] + theta[2] - 1;
    return (s * s - theta[3] * theta[3]) / 4;
}

RationalFunction hamiltonian(const std::array<RationalFunction, 4> &theta)
{
    return scaled_hamiltonian(theta, kLambda, kMu, kT) / (kT * (kT - 1));
}

PVIResidual pvi_residual(const std::array<RationalFunction, 4> &theta, const RationalFunction &lambda,
                         const RationalFunction &mu, const RationalFunction &t, const std::string &parameter)
{
    for (const auto *name : {"lambda", "mu", "t"}) {
        for (const auto &th : theta) {
            if (th.contains(name)) throw MathError(std::string("theta must not contain the symbol ") + name);
        }
    }
    const RationalFunction k = hamiltonian(theta);
    const std::map<std::string, RationalFunction> at{{"lambda", lambda}, {"mu", mu}, {"t", t}};
    const RationalFunction dt = t.derivative(parameter);
    if (dt.is_zero()) throw MathError("t does not depend on " + parameter);
    PVIResidual r;
    r.r_lambda = lambda.derivative(parameter) - k.derivative("mu").substitute(at) * dt;
    r.r_mu = mu.derivative(parameter) + k.derivative("lambda").substitute(at) * dt;
    return r;
}

PVIResidual verify_solution(const Table1Row &row)
{
    if (row.degenerate) throw MathError("row " + std::to_string(row.id) + " is degenerate (lambda = t)");
    return pvi_residual(row.theta, row.lambda, row.mu, row.t);
}

ScalarODE linear_ode(const PVIData &d, const std::string &z)
{
    const RationalFunction x = RationalFunction::variable(z);
    const auto &th = d.theta;
    const RationalFunction &l = d.lambda, &t = d.t;
    if (l.is_zero() || l == RationalFunction(1) || l == t) throw MathError("lambda coincides with a singular point");
    ScalarODE out;
    out.z = z;
    out.p1 = (1 - th[0]) / (x - t) + (1 - th[1]) / x + (1 - th[2]) / (x - 1) - (x - l).inverse();
    const RationalFunction base = x * (x - 1);
    out.p2 = kappa(th) / base - scaled_hamiltonian(th, l, d.mu, t) / (base * (x - t)) +
             l * (l - 1) * d.mu / (base * (x - l));
    out.singularities = {t, RationalFunction(), RationalFunction(1), l};
    return out;
}

bool check_relation(const RationalFunction &lambda, const RationalFunction &t, const Polynomial &relation)
{
    return RationalFunction(relation).substitute({{"lambda", lambda}, {"t", t}}).is_zero();
}

Matrix reducibility_limit(const Matrix &a, const std::string &var, const RationalFunction &value)
{
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const RationalFunction den = RationalFunction(a(i, j).denominator()).substitute(var, value);
            if (den.is_zero()) {
                throw MathError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has a pole at " +
                                var + " = " + to_string(value));
            }
            out(i, j) = a(i, j).substitute(var, value);
        }
    }
    return out;
}

PipelineResult run_pipeline(int family_id, const std::optional<std::array<RationalFunction, 4>> &theta_hint)
{
    PipelineResult r;
    r.family = rationalize(herfurtner(family_id));
    const bool split = factor_cubic(r.family).has_value();
    r.system = pullback(split ? quartic_factored_connection() : cubic_connection(), r.family);
    r.points = discriminant_roots(r.family);
    r.ode = system_to_scalar(r.system, 1);
    r.sl = sl_form(r.ode);

    std::vector<RationalFunction> candidates;
    for (const auto &root : rational_roots(r.ode.off_diagonal->numerator(), r.ode.z)) {
        if (std::find(r.points.begin(), r.points.end(), root.value) != r.points.end()) continue;
        if (root.multiplicity != 1) throw MathError("apparent point is not a simple zero");
        candidates.push_back(root.value);
    }
    if (candidates.size() != 1) {
        throw MathError("expected one apparent point, found " + std::to_string(candidates.size()));
    }
    r.raw_lambda = candidates.front();
    r.accessory = accessory_parameters(r.sl, r.points, r.raw_lambda, theta_hint);

    const RationalFunction &t3 = r.points[2];
    PVIData &d = r.data;
    d.theta = r.accessory.theta;
    d.t = r.points[0] / t3;
    d.lambda = r.raw_lambda / t3;
    d.nu = r.accessory.nu;
    d.mu = mu_from_nu(d.theta, {d.t, RationalFunction(), RationalFunction(1)}, d.lambda, d.nu);
    d.alpha = alpha_of(d.theta);
    r.schlesinger = build_from_pvi(d);
    return r;
}

} // namespace pvi
