#include "pvi/schlesinger.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"
#include "pvi/partial_fractions.hpp"
#include "pvi/roots.hpp"

namespace pvi {

namespace {

std::array<RationalFunction, 3> m_values(const RationalFunction &lambda, const RationalFunction &t)
{
    return {(lambda - t) / (t * (t - 1)), lambda / t, (lambda - 1) / (1 - t)};
}

Vector normalized_first_nonzero(Vector v)
{
    for (const auto &e : v) {
        if (e.is_zero()) continue;
        const RationalFunction inv = e.inverse();
        for (auto &x : v) x = x * inv;
        break;
    }
    return v;
}

SchlesingerSystem conjugate(const SchlesingerSystem &s, const Matrix &p, const Matrix &p_inv)
{
    SchlesingerSystem out = s;
    for (std::size_t i = 0; i < 3; ++i) out.residues[i] = p_inv * s.residues[i] * p;
    return out;
}

std::optional<RationalFunction> try_apparent(const SchlesingerSystem &s, int coordinate)
{
    try {
        return apparent_point(s, coordinate);
    } catch (const MathError &) {
        return std::nullopt;
    }
}

void check_normalized(const SchlesingerSystem &s)
{
    if (!s.normalized || !s.points[1].is_zero() || s.points[2] != RationalFunction(1)) {
        throw MathError("system is not normalized to singularities (t, 0, 1)");
    }
}

} // namespace

Matrix SchlesingerSystem::combined() const
{
    const RationalFunction x = RationalFunction::variable(z);
    Matrix out(2, 2);
    for (std::size_t i = 0; i < 3; ++i) out += (x - points[i]).inverse() * residues[i];
    return out;
}

Matrix SchlesingerSystem::infinity() const { return -(residues[0] + residues[1] + residues[2]); }

FuchsianSystem SchlesingerSystem::as_fuchsian() const
{
    FuchsianSystem out;
    out.z = z;
    out.singularities.assign(points.begin(), points.end());
    out.matrix = combined();
    return out;
}

RationalFunction alpha_of(const std::array<RationalFunction, 4> &theta)
{
    return -(theta[0] + theta[1] + theta[2] + theta[3] - 1) / 2;
}

SchlesingerSystem to_schlesinger(const FuchsianSystem &system)
{
    if (system.singularities.size() != 3) throw MathError("Schlesinger form needs exactly three finite singularities");
    if (system.matrix.rows() != 2 || system.matrix.cols() != 2) throw MathError("Schlesinger form needs a 2x2 system");
    SchlesingerSystem out;
    out.z = system.z;
    for (std::size_t i = 0; i < 3; ++i) {
        out.points[i] = system.singularities[i];
        out.residues[i] = Matrix(2, 2);
    }
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const auto pf = partial_fractions(system.matrix(r, c), system.z, system.singularities);
            if (!pf.polynomial_part.is_zero()) throw MathError("system has a nonzero polynomial part");
            for (std::size_t i = 0; i < 3; ++i) {
                const auto &pole = pf.poles[i];
                if (pole.order > 1) {
                    throw MathError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") has a pole of order " + std::to_string(pole.order));
                }
                if (pole.order == 1) out.residues[i](r, c) = pole.coefficients[0];
            }
        }
    }
    out.normalized = out.points[1].is_zero() && out.points[2] == RationalFunction(1);
    out.lambda1 = try_apparent(out, 1);
    out.lambda2 = try_apparent(out, 2);
    return out;
}

SchlesingerSystem normalize_moebius(const SchlesingerSystem &s)
{
    if (s.normalized) return s;
    if (!s.points[1].is_zero()) throw MathError("normalization expects the middle singularity at 0");
    const RationalFunction &t3 = s.points[2];
    if (t3.is_zero()) throw MathError("t3 vanishes identically");
    SchlesingerSystem out = s;
    out.points = {s.points[0] / t3, RationalFunction(), RationalFunction(1)};
    out.degenerate = out.points[0] == RationalFunction(1);
    if (s.lambda1) out.lambda1 = *s.lambda1 / t3;
    if (s.lambda2) out.lambda2 = *s.lambda2 / t3;
    out.normalized = true;
    return out;
}

SchlesingerSystem diagonalize_infinity(const SchlesingerSystem &s, const std::optional<RationalFunction> &theta4)
{
    const Matrix n = s.infinity();
    const RationalFunction tr = n.trace(), dt = det(n);
    const RationalFunction disc = tr * tr - 4 * dt;
    RationalFunction delta;  // theta4 - 1
    if (theta4) {
        delta = *theta4 - 1;
        if (delta * delta != disc) throw MathError("theta4 does not match the residue at infinity");
    } else {
        auto r = exact_sqrt(disc);
        if (!r) throw MathError("residue at infinity has no rational eigenvalues");
        delta = *r;
        if ((1 + delta).numerator().leading_coefficient() < 0 && (1 - delta).numerator().leading_coefficient() > 0) {
            delta = -delta;
        }
    }
    if (delta.is_zero()) throw MathError("theta4 = 1: residue at infinity may not be diagonalizable");
    const RationalFunction alpha = (tr - delta) / 2;
    const std::array<RationalFunction, 2> eig{alpha, alpha + delta};
    Matrix p(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto ker = kernel_basis(n - Matrix::scalar(2, eig[k]));
        if (ker.size() != 1) throw MathError("unexpected eigenspace dimension at infinity");
        const Vector v = normalized_first_nonzero(ker.front());
        p(0, k) = v[0];
        p(1, k) = v[1];
    }
    SchlesingerSystem out = conjugate(s, p, inverse(p));
    if (out.infinity() != Matrix::diagonal({eig[0], eig[1]})) throw MathError("diagonalization at infinity failed");
    out.lambda1 = try_apparent(out, 1);
    out.lambda2 = try_apparent(out, 2);
    return out;
}

RationalFunction apparent_point(const SchlesingerSystem &s, int coordinate)
{
    if (coordinate != 1 && coordinate != 2) throw MathError("coordinate must be 1 or 2");
    const Matrix a = s.combined();
    const RationalFunction &e = coordinate == 1 ? a(0, 1) : a(1, 0);
    if (e.is_zero()) throw MathError("off-diagonal entry vanishes identically");
    const auto c = e.numerator().coefficients_in(s.z);
    if (c.size() != 2) {
        throw MathError("off-diagonal entry has " + std::to_string(c.size() - 1) + " zeros in " + s.z +
                        ", expected one simple zero");
    }
    const RationalFunction lambda = -RationalFunction::fraction(c[0], c[1]);
    for (const auto &p : s.points) {
        if (p == lambda) throw MathError("apparent point coincides with a singularity");
    }
    return lambda;
}

PVIData extract_pvi(const SchlesingerSystem &s)
{
    check_normalized(s);
    const Matrix n = s.infinity();
    if (!n(0, 1).is_zero() || !n(1, 0).is_zero()) throw MathError("residue at infinity is not diagonal");
    PVIData d;
    d.t = s.points[0];
    for (std::size_t i = 0; i < 3; ++i) d.theta[i] = s.residues[i].trace();
    d.theta[3] = 1 + n(1, 1) - n(0, 0);
    d.alpha = n(0, 0);
    d.lambda = apparent_point(s, 1);
    const auto m = m_values(d.lambda, d.t);
    if (m[0].is_zero() || m[1].is_zero()) throw MathError("apparent point coincides with a singularity");
    // W1 - W2 = t ((lambda - 1)(mu + alpha/lambda) + alpha/lambda)
    const RationalFunction w12 = s.residues[0](0, 0) / m[0] - s.residues[1](0, 0) / m[1];
    const RationalFunction shifted = (w12 / d.t - d.alpha / d.lambda) / (d.lambda - 1);
    d.mu = shifted - d.alpha / d.lambda;
    d.nu = nu_from_mu(d.theta, s.points, d.lambda, d.mu);
    if (canonical_gauge(s).residues != build_from_pvi(d).residues) {
        throw MathError("system is not of the (lambda, mu) parametrized form");
    }
    return d;
}

SchlesingerSystem build_from_pvi(const PVIData &d)
{
    const auto &th = d.theta;
    if (th[3] == RationalFunction(1)) throw MathError("theta4 = 1 is excluded");
    const RationalFunction &l = d.lambda, &t = d.t;
    if (l.is_zero() || l == RationalFunction(1) || l == t) throw MathError("lambda coincides with a singularity");
    if (t.is_zero() || t == RationalFunction(1)) throw MathError("t coincides with 0 or 1");
    const RationalFunction alpha = alpha_of(th);
    const auto m = m_values(l, t);
    const RationalFunction shifted = d.mu + alpha / l;
    const std::array<RationalFunction, 3> w{l * (l - 1) * shifted, (l - t) * (l - 1) * shifted - t * alpha / l,
                                            l * (l - t) * shifted};
    RationalFunction sum;
    for (std::size_t i = 0; i < 3; ++i) sum += w[i] * (m[i] * w[i] - th[i]);
    const RationalFunction big_w = sum / (th[3] - 1);
    SchlesingerSystem out;
    out.points = {t, RationalFunction(), RationalFunction(1)};
    for (std::size_t i = 0; i < 3; ++i) {
        const RationalFunction u = w[i] - big_w;
        const RationalFunction q11 = m[i] * u;
        out.residues[i] = Matrix{{q11, -m[i]}, {-u * (-q11 + th[i]), th[i] - q11}};
    }
    out.normalized = true;
    out.lambda1 = l;
    return out;
}

SchlesingerSystem canonical_gauge(const SchlesingerSystem &s)
{
    check_normalized(s);
    const RationalFunction lambda = apparent_point(s, 1);
    const RationalFunction m1 = m_values(lambda, s.points[0])[0];
    const RationalFunction &q12 = s.residues[0](0, 1);
    if (q12.is_zero()) throw MathError("q12 of Q1 vanishes identically");
    const RationalFunction d = -m1 / q12;
    SchlesingerSystem out = s;
    for (auto &q : out.residues) {
        q(0, 1) = q(0, 1) * d;
        q(1, 0) = q(1, 0) / d;
    }
    return out;
}

SchlesingerSystem swap_coordinates(const SchlesingerSystem &s)
{
    SchlesingerSystem out = s;
    for (auto &q : out.residues) q = Matrix{{q(1, 1), q(1, 0)}, {q(0, 1), q(0, 0)}};
    std::swap(out.lambda1, out.lambda2);
    return out;
}

PVIData swap_parameters(const PVIData &d) { return extract_pvi(swap_coordinates(build_from_pvi(d))); }

SchlesingerSystem invert_coordinate(const SchlesingerSystem &s)
{
    if (!s.points[1].is_zero()) throw MathError("inversion needs t2 = 0");
    if (s.points[0].is_zero() || s.points[2].is_zero()) throw MathError("inversion needs t1, t3 nonzero");
    SchlesingerSystem out;
    out.z = s.z;
    out.points = {s.points[0].inverse(), RationalFunction(), s.points[2].inverse()};
    out.residues = {s.residues[0], s.infinity(), s.residues[2]};
    out.normalized = out.points[2] == RationalFunction(1);
    out.degenerate = out.points[0] == out.points[2];
    return out;
}

SchlesingerSystem scalar_twist(const SchlesingerSystem &s,
                               const std::vector<std::pair<RationalFunction, RationalFunction>> &shifts)
{
    SchlesingerSystem out = s;
    for (const auto &[p, e] : shifts) {
        std::size_t i = 0;
        while (i < 3 && s.points[i] != p) ++i;
        if (i == 3) {
            throw MathError("shift point " + to_string(p) +
                            " is not a finite singularity; express shifts at infinity via the finite points");
        }
        out.residues[i] += Matrix::scalar(2, e);
    }
    return out;
}

std::array<RationalFunction, 4> twist_theta(const SchlesingerSystem &s, const std::array<RationalFunction, 4> &theta,
                                            const std::vector<std::pair<RationalFunction, RationalFunction>> &shifts)
{
    auto out = theta;
    for (const auto &[p, e] : shifts) {
        std::size_t i = 0;
        while (i < 3 && s.points[i] != p) ++i;
        if (i == 3) throw MathError("shift point " + to_string(p) + " is not a finite singularity");
        out[i] += 2 * e;
    }
    return out;
}

bool satisfies_parametrization(const SchlesingerSystem &s, const std::array<RationalFunction, 4> &theta)
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (s.residues[i].trace() != theta[i] || !det(s.residues[i]).is_zero()) return false;
    }
    const RationalFunction alpha = alpha_of(theta);
    return s.infinity() == Matrix::diagonal({alpha, alpha + theta[3] - 1});
}

} // namespace pvi
