#pragma once

#include "pvi/fuchsian.hpp"
#include "pvi/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvi {

enum class ConnectionKind { ThreePoint, Cubic, QuarticFactored };

/// Flat connection dY = (sum_v A_v dv) Y over a list of base variables.
struct ParametricConnection {
    ConnectionKind kind = ConnectionKind::ThreePoint;
    std::vector<std::string> base;
    std::vector<Matrix> coefficients;

    const Matrix &coefficient(const std::string &var) const;
};

/// Three-point connection in (t1, t2, t3) with exponents (a, b, c). The dt2 and
/// dt3 coefficients are the dt1 one with (t1, a) <-> (t2, b), resp. (t1, a) <-> (t3, c).
ParametricConnection general_three_point_connection(const RationalFunction &a = RationalFunction::variable("a"),
                                                    const RationalFunction &b = RationalFunction::variable("b"),
                                                    const RationalFunction &c = RationalFunction::variable("c"));
/// Connection in (t2, t3) for the periods of dx / (4x^3 - t2 x - t3)^a.
ParametricConnection cubic_connection(const RationalFunction &a = RationalFunction::variable("a"));
/// Connection in (t2, t3) for dx / ((4x^2 - t2 x + t3)^c (x + t2/4)^a).
ParametricConnection quartic_factored_connection(const RationalFunction &a = RationalFunction::variable("a"),
                                                 const RationalFunction &c = RationalFunction::variable("c"));

/// d_u A_v - d_v A_u - (A_u A_v - A_v A_u); zero for a flat connection.
Matrix flatness_residual(const ParametricConnection &conn, const std::string &u, const std::string &v);
bool is_flat(const ParametricConnection &conn);

/// y^2 = 4x^3 - g2 x - g3 with g2, g3 in (z, b).
struct CurveFamily {
    int id = 0;
    RationalFunction g2, g3;
    /// b and z substitutions already applied (empty before rationalize).
    std::map<std::string, RationalFunction> substitution;
    bool rationalized = false;
};

/// Families 1..5 of deformable elliptic curves with four singular fibres.
CurveFamily herfurtner(int family_id);
/// Apply the stored rationalizing substitution of the family.
CurveFamily rationalize(const CurveFamily &family);

/// g2^3 - 27 g3^2.
RationalFunction discriminant(const CurveFamily &family);
/// (t1, 0, t3): the three distinct finite roots of the discriminant in z.
/// t3 = 1 when 1 is a root, otherwise the root whose denominator has the
/// larger degree in b. Throws MathError on non-rational or extra roots.
std::array<RationalFunction, 3> discriminant_roots(const CurveFamily &family);

/// f = 4x^3 - g2 x - g3 = (4x^2 - G2 x + G3)(x + G2/4).
struct CubicSplit {
    RationalFunction g2, g3;           // G2, G3
    RationalFunction quadratic, linear;  // in the symbol x
};
/// The split above when f has a root rational in (z, b); nullopt otherwise.
std::optional<CubicSplit> factor_cubic(const CurveFamily &family);

/// A(z) = sum_v A_v(g) dg_v/dz. The quartic connection needs a family whose
/// cubic splits (its G2, G3 are used); the cubic one needs a non-split family.
FuchsianSystem pullback(const ParametricConnection &conn, const CurveFamily &family);

/// Rationalize, pick the matching connection and pull back.
FuchsianSystem derive_system(int family_id);

} // namespace pvi
