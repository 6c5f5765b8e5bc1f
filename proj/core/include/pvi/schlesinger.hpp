#pragma once

#include "pvi/fuchsian.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvi {

/// DY = sum_i Q_i/(z - t_i) Y with (t1, t2 = 0, t3), or (t, 0, 1) once normalized.
struct SchlesingerSystem {
    std::string z = "z";
    std::array<RationalFunction, 3> points;
    std::array<Matrix, 3> residues;
    bool normalized = false;
    bool degenerate = false;  // t1 == t3
    /// Apparent singularities of the first and second coordinate.
    std::optional<RationalFunction> lambda1, lambda2;

    Matrix combined() const;
    /// -(Q1 + Q2 + Q3)
    Matrix infinity() const;
    FuchsianSystem as_fuchsian() const;
};

/// (theta_1..theta_4, lambda, mu, t, nu, alpha) with 2 alpha + sum theta = 1.
struct PVIData {
    std::array<RationalFunction, 4> theta;
    RationalFunction lambda, mu, t, nu, alpha;
};

RationalFunction alpha_of(const std::array<RationalFunction, 4> &theta);

/// Residues at the three declared points; the polynomial part must vanish
/// and every pole must be simple.
SchlesingerSystem to_schlesinger(const FuchsianSystem &system);

/// z -> z t3: singularities become (t1/t3, 0, 1); residues are unchanged.
SchlesingerSystem normalize_moebius(const SchlesingerSystem &s);

/// Conjugate so that -(Q1+Q2+Q3) = diag(alpha, alpha + theta4 - 1). Without
/// theta4 the root with positive leading numerator coefficient is used.
SchlesingerSystem diagonalize_infinity(const SchlesingerSystem &s,
                                       const std::optional<RationalFunction> &theta4 = {});

/// Read the PVI data off a normalized system with diagonal residue at infinity.
PVIData extract_pvi(const SchlesingerSystem &s);

/// Q_i from (theta, lambda, mu, t); q12 of Q_i is -M_i.
SchlesingerSystem build_from_pvi(const PVIData &d);

/// Diagonal conjugation making q12 of Q_1 equal to -M_1 (the gauge of build_from_pvi).
SchlesingerSystem canonical_gauge(const SchlesingerSystem &s);

/// z -> 1/z: Q1, Q3 move to 1/t1, 1/t3, the new residue at 0 is -(Q1+Q2+Q3)
/// and Q2 becomes the residue at infinity. Needs t1, t3 nonzero.
SchlesingerSystem invert_coordinate(const SchlesingerSystem &s);

/// Conjugation by [[0,1],[1,0]].
SchlesingerSystem swap_coordinates(const SchlesingerSystem &s);
PVIData swap_parameters(const PVIData &d);

/// A -> A + sum e_i/(z - p_i) I for points among the declared singularities.
SchlesingerSystem scalar_twist(const SchlesingerSystem &s,
                               const std::vector<std::pair<RationalFunction, RationalFunction>> &shifts);
/// theta_i -> theta_i + 2 e_i at the shifted points; theta4 kept.
std::array<RationalFunction, 4> twist_theta(const SchlesingerSystem &s, const std::array<RationalFunction, 4> &theta,
                                            const std::vector<std::pair<RationalFunction, RationalFunction>> &shifts);

/// Zero of the combined (1,2) entry (coordinate 1) or (2,1) entry (coordinate 2).
RationalFunction apparent_point(const SchlesingerSystem &s, int coordinate = 1);

/// trace(Q_i) = theta_i, det(Q_i) = 0 and -(sum Q) = diag(alpha, alpha + theta4 - 1).
bool satisfies_parametrization(const SchlesingerSystem &s, const std::array<RationalFunction, 4> &theta);

} // namespace pvi
