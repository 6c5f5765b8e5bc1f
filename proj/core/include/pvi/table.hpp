#pragma once

#include "pvi/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pvi {

/// One row of the registry of algebraic solutions, parametrized by b.
struct Table1Row {
    int id = 0;
    /// Row 1 only carries the locus {lambda = t = 0} u {lambda = t = 1}; its
    /// theta uses a, b, c as exponents.
    bool degenerate = false;
    std::array<RationalFunction, 4> theta;
    RationalFunction lambda, mu, t;
    /// Text of mu as printed when the stored mu differs from it.
    std::optional<std::string> printed_mu;
    /// Curve family producing the row (rows 3..6).
    std::optional<int> family;
    /// Source row and parameter of the middle convolution relating the rows.
    std::optional<int> mc_source_row;
    std::optional<RationalFunction> mc_mu;
    std::string description;
};

/// Rows 1..6; throws Error for other ids.
Table1Row table1(int row_id);

/// Printed fixtures used by the verification suite.
namespace fixtures {

/// Residues Q1..Q3 of the row-3 Schlesinger system. q22 of Q2 is the
/// trace-corrected entry; row3_q2_printed() keeps the printed one.
std::array<Matrix, 3> row3_residues();
Matrix row3_q2_printed();
RationalFunction row3_lambda_tilde();

/// Residues of the row-4 system and of its convolution with mu_c = -(3a-2).
std::array<Matrix, 3> row4_residues();
std::array<Matrix, 3> convolved_row4_residues();
RationalFunction convolved_row4_lambda();
std::array<RationalFunction, 4> convolved_row4_theta();
Matrix convolved_row4_infinity();

/// The dihedral system: residues at (b^2, 0, 1), combined matrix and data.
std::array<Matrix, 3> dihedral_residues();
Matrix dihedral_matrix();
Matrix dihedral_infinity();
std::array<RationalFunction, 4> dihedral_theta();
std::array<RationalFunction, 4> dihedral_twisted_theta();
RationalFunction dihedral_lambda1();
RationalFunction dihedral_lambda2();
RationalFunction dihedral_mu1();
/// The dihedral matrix at b = 1.
Matrix dihedral_limit();

/// lambda^4 - 2 t lambda^3 - 2 lambda^3 + 6 t lambda^2 - 2 t^2 lambda - 2 t lambda + t^3 - t^2 + t
Polynomial row5_quartic();

/// Eigenvalue pairs after z -> 1/z and the scalar shift (Q1, Q2, Q3, infinity),
/// and the triples of the three-dimensional convolutions with mu_c = -(a-1).
struct ThreeDimensionalCase {
    int source_row;
    std::vector<std::vector<RationalFunction>> pairs;
    std::vector<std::vector<RationalFunction>> triples;
};
std::vector<ThreeDimensionalCase> three_dimensional_cases();

}  // namespace fixtures

} // namespace pvi
