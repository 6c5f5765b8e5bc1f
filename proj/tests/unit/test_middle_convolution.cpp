#include "support.hpp"

#include "pvi/certificate.hpp"
#include "pvi/error.hpp"

#include <doctest.h>

using namespace pvi;
using pvi::test::e;

TEST_SUITE("middle_convolution") {

TEST_CASE("Okubo blocks")
{
    const SchlesingerSystem s = row_system(3);
    const RationalFunction mu = e("-c");
    const OkuboSystem ok = okubo_build(s, mu);
    REQUIRE(ok.B.rows() == 6);
    for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t i = 0; i < 3; ++i) {
            const Matrix expected = i == j ? s.residues[i] + Matrix::scalar(2, mu) : s.residues[i];
            CHECK(ok.B.block(2 * j, 2 * i, 2, 2) == expected);
        }
        CHECK(ok.T.block(2 * j, 2 * j, 2, 2) == Matrix::scalar(2, s.points[j]));
    }
    // the B_i re-sum to B
    Matrix sum(6, 6);
    for (const auto &b : ok.residues()) sum += b;
    CHECK(sum == ok.B);
}

TEST_CASE("Okubo preconditions")
{
    const SchlesingerSystem s = row_system(3);
    CHECK_THROWS_AS(okubo_build(s, RationalFunction()), MathError);
    CHECK_THROWS_AS(okubo_build({e("b"), e("b")}, {s.residues[0], s.residues[1]}, e("-c")), MathError);
    CHECK_THROWS_AS(okubo_build({e("b")}, {s.residues[0], s.residues[1]}, e("-c")), MathError);
}

TEST_CASE("invariant subspaces and dimension formula")
{
    const SchlesingerSystem s = row_system(3);
    const OkuboSystem ok = okubo_build(s, e("-c"));
    const InvariantSubspaces sub = invariant_subspaces(ok);
    CHECK(sub.k.size() == 3);
    CHECK(sub.l.size() == 1);
    const auto bs = ok.residues();
    CHECK(is_invariant(bs, sub.k));
    CHECK(is_invariant(bs, sub.l));
    const ConvolutionResult r = mc_quotient(ok, sub);
    CHECK(r.dimension() == 2);
    CHECK(r.expected_dimension == 2);
    CHECK(r.dim_k + r.dim_l == 4);
    // a generic vector does not span an invariant line
    Vector v(6);
    v[0] = RationalFunction(1);
    CHECK_FALSE(is_invariant(bs, {v}));
}

TEST_CASE("the complement reproduces the printed basis pattern")
{
    const ConvolutionResult r = middle_convolution(row_system(3), e("-c"));
    // columns 5 and 6 of S are e3 and e5
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(r.S(i, 4) == RationalFunction(i == 2 ? 1 : 0));
        CHECK(r.S(i, 5) == RationalFunction(i == 4 ? 1 : 0));
    }
}

TEST_CASE("parameter law")
{
    const auto th = table1(3).theta;
    const MCParameters p = mc_parameters(th, alpha_of(th), e("-c"));
    CHECK(p.theta == fixtures::dihedral_theta());
    CHECK(p.alpha == e("c"));
    const MCParameters z = mc_parameters(th, alpha_of(th), RationalFunction());
    CHECK(z.theta[0] == th[0]);
    CHECK(z.alpha.is_zero());
}

TEST_CASE("row 3 convolved is the dihedral system")
{
    const ConvolutionRun run = convolve_row(3, e("-c"));
    CHECK(run.system.residues == fixtures::dihedral_residues());
    CHECK(run.extracted.theta == run.parameters.theta);
    CHECK(run.extracted.alpha == run.parameters.alpha);
    CHECK(run.system.lambda1 == fixtures::dihedral_lambda1());
    CHECK(run.system.lambda2 == fixtures::dihedral_lambda2());
}

TEST_CASE("row 4 convolved")
{
    const ConvolutionRun run = convolve_row(4, e("-(3*a-2)"));
    CHECK(run.quotient.dimension() == 2);
    CHECK(run.extracted.theta == fixtures::convolved_row4_theta());
    CHECK(run.extracted.lambda == fixtures::convolved_row4_lambda());
    CHECK(run.system.infinity() == fixtures::convolved_row4_infinity());
    const auto printed = fixtures::convolved_row4_residues();
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(run.system.residues[i](0, 0) == printed[i](0, 0));
        CHECK(run.system.residues[i](1, 1) == printed[i](1, 1));
    }
    CHECK(check_relation(run.extracted.lambda, run.extracted.t, fixtures::row5_quartic()));
}

TEST_CASE("mc_to_schlesinger rejects wrong eigenvalues and dimensions")
{
    const ConvolutionResult r = middle_convolution(row_system(3), e("-c"));
    CHECK_THROWS_AS(mc_to_schlesinger(r, std::array<RationalFunction, 2>{e("a"), e("c")}), MathError);
    ConvolutionResult three = r;
    three.residues.assign(3, Matrix(3, 3));
    CHECK_THROWS_AS(mc_to_schlesinger(three, std::array<RationalFunction, 2>{e("a"), e("c")}), MathError);
}

TEST_CASE("residue spectra")
{
    CHECK(residue_spectra({Matrix::identity(3)}, {{RationalFunction(1), RationalFunction(1), RationalFunction(1)}}));
    CHECK_FALSE(residue_spectra({Matrix::identity(2)}, {{RationalFunction(1), RationalFunction()}}));
    CHECK_FALSE(residue_spectra({Matrix::identity(2)}, {}));
    const auto all = with_infinity({Matrix::identity(2), Matrix::identity(2)});
    CHECK(all.back() == Matrix::scalar(2, RationalFunction(-2)));
}

TEST_CASE("three-dimensional convolutions of rows 5 and 6")
{
    for (const auto &c : fixtures::three_dimensional_cases()) {
        INFO("row " << c.source_row);
        const SchlesingerSystem s = inverted_shifted_system(c.source_row);
        const std::vector<Matrix> res(s.residues.begin(), s.residues.end());
        CHECK(residue_spectra(with_infinity(res), c.pairs));
        const OkuboSystem ok = okubo_build({s.points.begin(), s.points.end()}, res, e("-(a-1)"));
        const ConvolutionResult r = mc_quotient(ok, invariant_subspaces(ok));
        CHECK(r.dimension() == 3);
        CHECK(r.expected_dimension == 3);
        CHECK(residue_spectra(with_infinity(r.residues), c.triples));
    }
    CHECK_THROWS_AS(inverted_shifted_system(3), Error);
}

}
