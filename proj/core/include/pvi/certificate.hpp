#pragma once

#include "pvi/middle_convolution.hpp"
#include "pvi/painleve.hpp"

#include <string>
#include <vector>

namespace pvi {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Reported but not counted (known errata of the printed data).
    bool informational = false;
};

struct RowCertificate {
    Table1Row row;
    std::optional<PVIResidual> residual;  // empty for the degenerate row
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Residual, linear-ODE round trip, pipeline reproduction and per-row relations.
RowCertificate certify_row(int row_id);

/// The convolution equivalences (row 3 -> row 2, row 4 -> row 5) and the
/// reducibility / three-dimensional checks.
std::vector<CheckResult> convolution_checks();

/// The Schlesinger system of a registry row (points (t, 0, 1)).
SchlesingerSystem row_system(int row_id);

/// Row 3 convolved with mu_c = -c, and row 4 with mu_c = -(3a-2).
struct ConvolutionRun {
    ConvolutionResult quotient;
    MCParameters parameters;
    SchlesingerSystem system;
    PVIData extracted;
};
ConvolutionRun convolve_row(int row_id, const RationalFunction &mu_c);

/// Row 5 or 6 after z -> 1/z and the scalar shift at 0 that makes that residue rank one.
SchlesingerSystem inverted_shifted_system(int row_id);

}  // namespace pvi
