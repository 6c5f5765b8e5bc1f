#pragma once

#include "pvi/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pvi {

/// dY/dz = A(z) Y with the finite singular points listed.
struct FuchsianSystem {
    std::string z = "z";
    std::vector<RationalFunction> singularities;
    Matrix matrix;
};

/// y'' + p1 y' + p2 y = 0.
struct ScalarODE {
    std::string z = "z";
    RationalFunction p1, p2;
    std::vector<RationalFunction> singularities;
    /// Off-diagonal entry the equation was derived from, if any.
    std::optional<RationalFunction> off_diagonal;
};

/// D^2 y = p y.
struct SLForm {
    std::string z = "z";
    RationalFunction p;
    std::vector<RationalFunction> singularities;
};

struct SchemeColumn {
    std::optional<RationalFunction> point;  // nullopt = infinity
    RationalFunction s1, s2;
};

struct RiemannScheme {
    std::vector<SchemeColumn> columns;  // finite points first, infinity last
    /// Sum of all exponents minus (number of finite points - 1).
    RationalFunction fuchs_defect() const;
    bool satisfies_fuchs_relation() const { return fuchs_defect().is_zero(); }
};

struct ApparentPoint {
    RationalFunction location;
    int order = 1;
    RationalFunction s1, s2;  // (0, order + 1)
};

struct AccessoryData {
    std::array<RationalFunction, 4> theta;
    RationalFunction L, nu;
};

/// Equation for the chosen coordinate (1 or 2) of a 2x2 system.
ScalarODE system_to_scalar(const FuchsianSystem &system, int coordinate = 1);
/// p = -p2 + p1^2/4 + p1'/2.
SLForm sl_form(const ScalarODE &ode);
/// The equation y'' = p y as p1 = 0, p2 = -p.
ScalarODE as_ode(const SLForm &sl);

/// Exponents at the declared points and at infinity. Throws MathError if the
/// equation is not Fuchsian there or an exponent quadratic does not split.
RiemannScheme riemann_scheme(const ScalarODE &ode);

/// Zeros of the tracked off-diagonal entry outside `true_singular`.
std::vector<ApparentPoint> apparent_singularities(const ScalarODE &ode,
                                                  const std::vector<RationalFunction> &true_singular);

/// Root of (theta^2 - 1)/4 = a_i: the one whose numerator has a positive
/// leading coefficient, or the one equal to `hint` up to sign.
RationalFunction theta_from_coefficient(const RationalFunction &ai, const std::optional<RationalFunction> &hint = {});

/// Read (theta, L, nu) off an SL-form with singular points (t1, 0, t3) and the
/// apparent point lambda; the template is rebuilt and compared exactly.
AccessoryData accessory_parameters(const SLForm &sl, const std::array<RationalFunction, 3> &points,
                                   const RationalFunction &lambda,
                                   const std::optional<std::array<RationalFunction, 4>> &theta_hint = {});

/// The template p(z) for the given accessory data.
RationalFunction sl_template(const std::string &z, const std::array<RationalFunction, 3> &points,
                             const RationalFunction &lambda, const AccessoryData &data);

/// mu = nu - 1/2 sum (1 - theta_i)/(lambda - t_i), and its inverse.
RationalFunction mu_from_nu(const std::array<RationalFunction, 4> &theta, const std::array<RationalFunction, 3> &points,
                            const RationalFunction &lambda, const RationalFunction &nu);
RationalFunction nu_from_mu(const std::array<RationalFunction, 4> &theta, const std::array<RationalFunction, 3> &points,
                            const RationalFunction &lambda, const RationalFunction &mu);

} // namespace pvi
