#pragma once

#include "pvi/picard_fuchs.hpp"
#include "pvi/schlesinger.hpp"
#include "pvi/table.hpp"

#include <array>
#include <optional>
#include <string>

namespace pvi {

/// ((theta1 + theta2 + theta3 - 1)^2 - theta4^2)/4
RationalFunction kappa(const std::array<RationalFunction, 4> &theta);
/// K(lambda, mu, t) in the symbols "lambda", "mu", "t".
RationalFunction hamiltonian(const std::array<RationalFunction, 4> &theta);

struct PVIResidual {
    RationalFunction r_lambda, r_mu;
    bool is_zero() const { return r_lambda.is_zero() && r_mu.is_zero(); }
};

/// r_lambda = dlambda/db - K_mu dt/db, r_mu = dmu/db + K_lambda dt/db at (lambda(b), mu(b), t(b)).
PVIResidual pvi_residual(const std::array<RationalFunction, 4> &theta, const RationalFunction &lambda,
                         const RationalFunction &mu, const RationalFunction &t, const std::string &parameter = "b");
/// Throws MathError for the degenerate row.
PVIResidual verify_solution(const Table1Row &row);

/// The isomonodromic equation with singularities (t, 0, 1) and the apparent point lambda.
ScalarODE linear_ode(const PVIData &d, const std::string &z = "z");

/// relation(lambda, t) in the symbols "lambda", "t" vanishes identically.
bool check_relation(const RationalFunction &lambda, const RationalFunction &t, const Polynomial &relation);

/// A with var = value; throws MathError if an entry has a pole there.
Matrix reducibility_limit(const Matrix &a, const std::string &var, const RationalFunction &value);

/// Curve family -> system -> scalar equation -> PVI data -> Schlesinger system.
struct PipelineResult {
    CurveFamily family;
    FuchsianSystem system;
    std::array<RationalFunction, 3> points;  // before normalization
    ScalarODE ode;
    SLForm sl;
    RationalFunction raw_lambda;
    AccessoryData accessory;
    PVIData data;
    SchlesingerSystem schlesinger;
};
PipelineResult run_pipeline(int family_id, const std::optional<std::array<RationalFunction, 4>> &theta_hint = {});

} // namespace pvi
