#include "support.hpp"

#include "pvi/certificate.hpp"
#include "pvi/error.hpp"

#include <doctest.h>

using namespace pvi;
using pvi::test::e;

namespace {

PVIData row3()
{
    const Table1Row r = table1(3);
    PVIData d;
    d.theta = r.theta;
    d.lambda = r.lambda;
    d.mu = r.mu;
    d.t = r.t;
    d.alpha = alpha_of(r.theta);
    d.nu = nu_from_mu(r.theta, {r.t, RationalFunction(), RationalFunction(1)}, r.lambda, r.mu);
    return d;
}

SchlesingerSystem dihedral()
{
    SchlesingerSystem s;
    s.points = {e("b^2"), RationalFunction(), RationalFunction(1)};
    s.residues = fixtures::dihedral_residues();
    s.normalized = true;
    return s;
}

bool same_data(const PVIData &x, const PVIData &y)
{
    return x.theta == y.theta && x.lambda == y.lambda && x.mu == y.mu && x.t == y.t && x.nu == y.nu &&
           x.alpha == y.alpha;
}

}  // namespace

TEST_SUITE("schlesinger") {

TEST_CASE("build_from_pvi reproduces the row-3 residues")
{
    const SchlesingerSystem s = build_from_pvi(row3());
    const auto q = fixtures::row3_residues();
    for (std::size_t i = 0; i < 3; ++i) CHECK(s.residues[i] == q[i]);
    CHECK(s.infinity() == Matrix::diagonal({e("-(a+2*c-2)"), e("-c")}));
    CHECK(satisfies_parametrization(s, row3().theta));
}

TEST_CASE("trace, determinant and residue sum of produced systems")
{
    for (int row = 2; row <= 6; ++row) {
        INFO("row " << row);
        const SchlesingerSystem s = row_system(row);
        const auto th = table1(row).theta;
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(s.residues[i].trace() == th[i]);
            CHECK(det(s.residues[i]).is_zero());
            CHECK(has_spectrum(s.residues[i], {RationalFunction(), th[i]}));
        }
        const RationalFunction alpha = alpha_of(th);
        CHECK(s.infinity() == Matrix::diagonal({alpha, alpha + th[3] - 1}));
        CHECK((s.residues[0] + s.residues[1] + s.residues[2] + s.infinity()).is_zero());
    }
}

TEST_CASE("extract and build are inverse")
{
    const PVIData d = row3();
    CHECK(same_data(extract_pvi(build_from_pvi(d)), d));
    for (int row = 2; row <= 6; ++row) {
        INFO("row " << row);
        const SchlesingerSystem s = row_system(row);
        CHECK(build_from_pvi(extract_pvi(s)).residues == s.residues);
    }
}

TEST_CASE("extract_pvi on the printed systems")
{
    const PVIData d = extract_pvi(dihedral());
    CHECK(d.lambda == fixtures::dihedral_lambda1());
    CHECK(d.t == e("b^2"));
    CHECK(d.theta == fixtures::dihedral_theta());
    SchlesingerSystem conv;
    conv.points = {table1(4).t, RationalFunction(), RationalFunction(1)};
    conv.residues = fixtures::convolved_row4_residues();
    conv.normalized = true;
    CHECK(extract_pvi(conv).lambda == fixtures::convolved_row4_lambda());
    CHECK(conv.infinity() == fixtures::convolved_row4_infinity());
}

TEST_CASE("build_from_pvi preconditions")
{
    PVIData d = row3();
    d.theta[3] = RationalFunction(1);
    CHECK_THROWS_AS(build_from_pvi(d), MathError);
    d = row3();
    d.lambda = d.t;
    CHECK_THROWS_AS(build_from_pvi(d), MathError);
    d = row3();
    d.lambda = RationalFunction();
    CHECK_THROWS_AS(build_from_pvi(d), MathError);
    d = row3();
    d.t = RationalFunction(1);
    CHECK_THROWS_AS(build_from_pvi(d), MathError);
}

TEST_CASE("to_schlesinger reads residues and rejects other shapes")
{
    const SchlesingerSystem s = build_from_pvi(row3());
    const SchlesingerSystem back = to_schlesinger(s.as_fuchsian());
    CHECK(back.residues == s.residues);
    FuchsianSystem bad = s.as_fuchsian();
    bad.matrix(0, 0) += e("1/z^2");
    CHECK_THROWS_AS(to_schlesinger(bad), MathError);
    bad = s.as_fuchsian();
    bad.matrix(0, 1) += e("1");
    CHECK_THROWS_AS(to_schlesinger(bad), MathError);
}

TEST_CASE("Moebius normalization")
{
    SchlesingerSystem s = build_from_pvi(row3());
    s.points = {e("-b"), RationalFunction(), e("-1/b")};
    s.normalized = false;
    s.lambda1 = e("1");
    const SchlesingerSystem n = normalize_moebius(s);
    CHECK(n.points[0] == e("b^2"));
    CHECK(n.points[2] == RationalFunction(1));
    CHECK(n.residues == s.residues);
    CHECK(n.lambda1 == e("-b"));
    CHECK(normalize_moebius(n).points == n.points);
    s.points = {e("b"), RationalFunction(), e("b")};
    CHECK(normalize_moebius(s).degenerate);
    s.points = {e("b"), RationalFunction(), RationalFunction()};
    CHECK_THROWS_AS(normalize_moebius(s), MathError);
}

TEST_CASE("diagonalize_infinity recovers the diagonal form")
{
    const SchlesingerSystem s = build_from_pvi(row3());
    const Matrix p{{e("1"), e("b")}, {e("a"), e("2")}};
    SchlesingerSystem c = s;
    for (auto &q : c.residues) q = inverse(p) * q * p;
    const SchlesingerSystem d = diagonalize_infinity(c, row3().theta[3]);
    CHECK(d.infinity() == s.infinity());
    CHECK(extract_pvi(d).mu == row3().mu);
    // already diagonal
    CHECK(diagonalize_infinity(s, row3().theta[3]).infinity() == s.infinity());
    CHECK_THROWS_AS(diagonalize_infinity(s, RationalFunction(1)), MathError);
}

TEST_CASE("coordinate swap")
{
    const SchlesingerSystem s = build_from_pvi(row3());
    const SchlesingerSystem w = swap_coordinates(s);
    CHECK(swap_coordinates(w).residues == s.residues);
    // zero of A21 built from the printed residues
    const auto q = fixtures::row3_residues();
    const RationalFunction t = e("b^2");
    SchlesingerSystem printed = s;
    printed.residues = q;
    const RationalFunction zero = apparent_point(printed, 2);
    const RationalFunction z = RationalFunction::variable("z");
    CHECK((q[0](1, 0) / (z - t) + q[1](1, 0) / z + q[2](1, 0) / (z - 1)).substitute("z", zero).is_zero());
    CHECK(apparent_point(s, 2) == zero);
    // printed closed form has (b+1)^2 where (b^2+1) belongs in the denominator
    CHECK(zero == e("-b+((-2*a-2*c+4)*(b+1)^2*b)/((a-2)*(a+2*c-3)*(b^2+1)+2*(a^2+2*c*a-5*a+2*c^2-6*c+6)*b)"));
    CHECK_FALSE(zero == fixtures::row3_lambda_tilde());
    const PVIData d = swap_parameters(row3());
    CHECK(d.theta[3] == 2 - row3().theta[3]);
    CHECK(d.lambda == zero);
}

TEST_CASE("dihedral relations")
{
    const SchlesingerSystem s = dihedral();
    const auto th = fixtures::dihedral_theta();
    const RationalFunction t = e("b^2");
    const RationalFunction l1 = apparent_point(s, 1), l2 = apparent_point(s, 2);
    CHECK(l1 == fixtures::dihedral_lambda1());
    CHECK(l2 == fixtures::dihedral_lambda2());
    CHECK(th[3] * th[3] * l1 * l1 == t * th[1] * th[1]);
    CHECK((2 - th[3]) * (2 - th[3]) * l2 * l2 == t * th[1] * th[1]);
    CHECK(s.combined() == fixtures::dihedral_matrix());
    CHECK(s.infinity() == fixtures::dihedral_infinity());
}

TEST_CASE("scalar twist")
{
    const SchlesingerSystem s = dihedral();
    const RationalFunction half(Rational(1, 2));
    CHECK(scalar_twist(s, {}).residues == s.residues);
    const SchlesingerSystem tw = scalar_twist(s, {{s.points[0], half}, {s.points[2], half}});
    CHECK(scalar_twist(tw, {{s.points[0], -half}, {s.points[2], -half}}).residues == s.residues);
    CHECK(twist_theta(s, fixtures::dihedral_theta(), {{s.points[0], half}, {s.points[2], half}}) ==
          fixtures::dihedral_twisted_theta());
    // apparent points are unchanged
    CHECK(apparent_point(tw, 1) == apparent_point(s, 1));
    const PVIData d = extract_pvi(tw);
    CHECK(d.theta == fixtures::dihedral_twisted_theta());
    CHECK(d.mu == fixtures::dihedral_mu1());
    CHECK_THROWS_AS(scalar_twist(s, {{e("7"), half}}), MathError);
}

TEST_CASE("inversion z -> 1/z")
{
    const SchlesingerSystem s = row_system(5);
    const SchlesingerSystem inv = invert_coordinate(s);
    CHECK(inv.points[0] == s.points[0].inverse());
    CHECK(inv.points[2] == RationalFunction(1));
    CHECK(inv.residues[1] == s.infinity());
    CHECK(inv.infinity() == s.residues[1]);
}

}
