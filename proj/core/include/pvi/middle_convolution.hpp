#pragma once

#include "pvi/schlesinger.hpp"

#include <array>
#include <vector>

namespace pvi {

/// (y I - T) DY = B Y with B's (j, i) block A_i + delta_ij mu_c I.
struct OkuboSystem {
    std::vector<RationalFunction> points;
    std::vector<Matrix> blocks;  // A_i
    RationalFunction mu_c;
    Matrix B, T;

    std::size_t n() const { return blocks.empty() ? 0 : blocks.front().rows(); }
    /// B_i: the i-th block row of B, zero elsewhere.
    std::vector<Matrix> residues() const;
};

struct InvariantSubspaces {
    std::vector<Vector> k;  // sum of the ker A_i, embedded blockwise
    std::vector<Vector> l;  // (v, ..., v) for v in ker(sum A_i + mu_c I)
};

struct ConvolutionResult {
    std::vector<RationalFunction> points;
    std::vector<Matrix> residues;  // quotient residues
    Matrix S;                      // basis: k, l, then the complement
    std::size_t dim_k = 0, dim_l = 0;
    /// n r - sum dim ker A_i - dim ker(sum A_i + mu_c I)
    std::size_t expected_dimension = 0;

    std::size_t dimension() const { return residues.empty() ? 0 : residues.front().rows(); }
    Matrix combined(const std::string &z = "z") const;
};

struct MCParameters {
    std::array<RationalFunction, 4> theta;
    RationalFunction alpha;
};

/// Throws MathError for repeated points or mu_c identically zero.
OkuboSystem okubo_build(const std::vector<RationalFunction> &points, const std::vector<Matrix> &residues,
                        const RationalFunction &mu_c);
OkuboSystem okubo_build(const SchlesingerSystem &s, const RationalFunction &mu_c);

InvariantSubspaces invariant_subspaces(const OkuboSystem &okubo);

/// True iff every B_i maps the span of `basis` into itself.
bool is_invariant(const std::vector<Matrix> &maps, const std::vector<Vector> &basis);

/// Quotient by k + l. The complement is completed greedily with standard
/// basis vectors, scanning from the second block onwards and wrapping around.
ConvolutionResult mc_quotient(const OkuboSystem &okubo, const InvariantSubspaces &subspaces);
ConvolutionResult middle_convolution(const SchlesingerSystem &s, const RationalFunction &mu_c);

/// theta~ = (theta_i + mu_c (i <= 3), theta4 - mu_c + 2 alpha), alpha~ = -mu_c.
MCParameters mc_parameters(const std::array<RationalFunction, 4> &theta, const RationalFunction &alpha,
                           const RationalFunction &mu_c);

/// Conjugate a 2-dimensional quotient by the eigenvector matrix whose columns
/// are (-(M - e I)_12, (M - e I)_11) for M = sum of residues and e in `eigenvalues`.
SchlesingerSystem mc_to_schlesinger(const ConvolutionResult &result, const std::array<RationalFunction, 2> &eigenvalues);
/// Eigenvalues (-alpha~, -(alpha~ + theta~4 - 1)).
SchlesingerSystem mc_to_schlesinger(const ConvolutionResult &result, const MCParameters &parameters);

/// Each candidate list is the spectrum (with multiplicity) of the matching matrix.
bool residue_spectra(const std::vector<Matrix> &residues, const std::vector<std::vector<RationalFunction>> &candidates);

/// Residues at the finite points followed by the one at infinity.
std::vector<Matrix> with_infinity(const std::vector<Matrix> &residues);

} // namespace pvi
