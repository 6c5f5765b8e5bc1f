#pragma once

#include "pvi/matrix.hpp"

#include <string>
#include <vector>

namespace pvi {

struct PoleTerm {
    RationalFunction location;
    int order = 0;
    /// coefficients[k] multiplies 1/(v - location)^(k+1)
    std::vector<RationalFunction> coefficients;
};

struct PartialFractionDecomposition {
    std::string variable;
    std::vector<PoleTerm> poles;
    /// Polynomial in `variable` (coefficients may depend on other symbols).
    RationalFunction polynomial_part;

    RationalFunction resum() const;
    /// Coefficient of 1/(v - location); zero if the pole is absent.
    RationalFunction residue(const RationalFunction &location) const;
};

/// Decompose f in v over the given pole locations. Throws MathError if the
/// denominator has a factor in v not of the form (v - pole).
PartialFractionDecomposition partial_fractions(const RationalFunction &f, const std::string &v,
                                               const std::vector<RationalFunction> &poles);

/// Linear factor (den(p) v - num(p)) of the pole v = p.
Polynomial linear_factor(const std::string &v, const RationalFunction &p);

/// Multiplicity of the pole v = p in the denominator of f.
int pole_order(const RationalFunction &f, const std::string &v, const RationalFunction &p);

/// Laurent coefficients of f at v = p: entry k multiplies 1/(v - p)^(k+1).
std::vector<RationalFunction> principal_part(const RationalFunction &f, const std::string &v,
                                             const RationalFunction &p);
/// Coefficient of 1/(v - p) in the Laurent expansion of f at p.
RationalFunction residue(const RationalFunction &f, const std::string &v, const RationalFunction &p);

/// Matrix of residues (coefficients of 1/(v - p)) of each entry.
Matrix residue_matrix(const Matrix &a, const std::string &v, const RationalFunction &p);

} // namespace pvi
