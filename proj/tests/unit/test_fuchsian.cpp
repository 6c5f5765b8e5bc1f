#include "support.hpp"

#include "pvi/error.hpp"
#include "pvi/painleve.hpp"
#include "pvi/partial_fractions.hpp"

#include <doctest.h>

using namespace pvi;
using pvi::test::e;

namespace {

bool same_pair(const SchemeColumn &c, const RationalFunction &x, const RationalFunction &y)
{
    return (c.s1 == x && c.s2 == y) || (c.s1 == y && c.s2 == x);
}

FuchsianSystem constant_system(const Matrix &q, std::vector<RationalFunction> points)
{
    FuchsianSystem s;
    s.matrix = q;
    s.singularities = std::move(points);
    return s;
}

}  // namespace

TEST_SUITE("fuchsian") {

TEST_CASE("system to scalar preconditions")
{
    const Matrix diag = Matrix::diagonal({e("a/z"), e("c/(z-1)")});
    CHECK_THROWS_AS(system_to_scalar(constant_system(diag, {}), 1), MathError);
    CHECK_THROWS_AS(system_to_scalar(constant_system(diag, {}), 3), MathError);
    const ScalarODE nil = system_to_scalar(constant_system(Matrix{{e("0"), e("1")}, {e("0"), e("0")}}, {}), 1);
    CHECK(nil.p1.is_zero());
    CHECK(nil.p2.is_zero());
}

TEST_CASE("SL-form formula")
{
    ScalarODE ode;
    ode.p1 = e("1/z");
    CHECK(sl_form(ode).p == e("-1/(4*z^2)"));
    ode.p1 = RationalFunction();
    ode.p2 = e("a/(z-b)");
    CHECK(sl_form(ode).p == -ode.p2);
}

TEST_CASE("SL-form agrees with the gauge y = f w, f'/f = -p1/2")
{
    std::mt19937 rng(pvi::test::seed() + 30);
    INFO("seed " << pvi::test::seed());
    for (int k = 0; k < 5; ++k) {
        ScalarODE ode;
        ode.p1 = pvi::test::random_rf(rng, {"z", "b"});
        ode.p2 = pvi::test::random_rf(rng, {"z", "a"});
        const RationalFunction g = -ode.p1 / 2;  // f'/f
        const RationalFunction direct = -(g.derivative("z") + g * g + ode.p1 * g + ode.p2);
        CHECK(sl_form(ode).p == direct);
    }
}

TEST_CASE("coordinate 2 equals coordinate 1 of the swapped system")
{
    const FuchsianSystem sys = derive_system(2);
    FuchsianSystem swapped = sys;
    swapped.matrix = Matrix{{sys.matrix(1, 1), sys.matrix(1, 0)}, {sys.matrix(0, 1), sys.matrix(0, 0)}};
    const ScalarODE a = system_to_scalar(sys, 2), b = system_to_scalar(swapped, 1);
    CHECK(a.p1 == b.p1);
    CHECK(a.p2 == b.p2);
}

TEST_CASE("row-3 scalar reduction: apparent point, template and accessory parameters")
{
    const PipelineResult p = run_pipeline(2);
    const auto apparent =
        apparent_singularities(p.ode, std::vector<RationalFunction>(p.points.begin(), p.points.end()));
    REQUIRE(apparent.size() == 1);
    CHECK(apparent[0].location == p.raw_lambda);
    CHECK(apparent[0].order == 1);
    CHECK(apparent[0].s1 == RationalFunction());
    CHECK(apparent[0].s2 == RationalFunction(2));
    CHECK(p.accessory.nu == e("-3/(4*b)"));
    CHECK(p.accessory.theta == std::array<RationalFunction, 4>{e("c-1/2"), e("a+c-1"), e("c-1/2"), e("a+c-1")});
    CHECK(sl_template("z", p.points, p.raw_lambda, p.accessory) == p.sl.p);
    // the coefficient of (z - lambda)^-2 is 3/4
    CHECK(principal_part(p.sl.p, "z", p.raw_lambda).size() == 2);
    CHECK(principal_part(p.sl.p, "z", p.raw_lambda)[1] == e("3/4"));
}

TEST_CASE("Riemann schemes of the pipeline equations satisfy the Fuchs relation")
{
    for (int family = 2; family <= 5; ++family) {
        INFO("family " << family);
        const PipelineResult p = run_pipeline(family);
        ScalarODE ode = p.ode;
        ode.singularities.push_back(p.raw_lambda);
        const RiemannScheme scheme = riemann_scheme(ode);
        CHECK(scheme.satisfies_fuchs_relation());
        // apparent point: exponents (0, 2)
        CHECK(same_pair(scheme.columns[3], RationalFunction(), RationalFunction(2)));
        const RiemannScheme sl_scheme = riemann_scheme([&] {
            ScalarODE s = as_ode(p.sl);
            s.singularities.push_back(p.raw_lambda);
            return s;
        }());
        CHECK(sl_scheme.satisfies_fuchs_relation());
        const auto &th = p.data.theta;
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(same_pair(sl_scheme.columns[i], (1 - th[i]) / 2, (1 + th[i]) / 2));
        }
        CHECK(same_pair(sl_scheme.columns[3], e("-1/2"), e("3/2")));
        CHECK(same_pair(sl_scheme.columns[4], (-1 - th[3]) / 2, (-1 + th[3]) / 2));
    }
}

TEST_CASE("trivial Riemann scheme")
{
    ScalarODE ode;
    ode.singularities = {RationalFunction(), RationalFunction(1)};
    const RiemannScheme s = riemann_scheme(ode);
    CHECK(same_pair(s.columns[0], RationalFunction(), RationalFunction(1)));
    CHECK(same_pair(s.columns[1], RationalFunction(), RationalFunction(1)));
}

TEST_CASE("Riemann scheme rejects non-Fuchsian equations")
{
    ScalarODE ode;
    ode.singularities = {RationalFunction()};
    ode.p1 = e("1/z^2");
    CHECK_THROWS_AS(riemann_scheme(ode), MathError);
    ode.p1 = e("1");
    CHECK_THROWS_AS(riemann_scheme(ode), MathError);
    ode.p1 = e("a/z");
    ode.p2 = e("b/z");  // O(1/z) at infinity
    CHECK_THROWS_AS(riemann_scheme(ode), MathError);
    ode.p2 = e("b/z^2");  // exponent quadratic s^2 + (a-1)s + b does not split
    CHECK_THROWS_AS(riemann_scheme(ode), MathError);
}

TEST_CASE("apparent points")
{
    ScalarODE ode;
    ode.z = "z";
    ode.off_diagonal = e("3");
    CHECK(apparent_singularities(ode, {}).empty());
    ode.off_diagonal = e("z*(z-b)/(z-1)");
    CHECK_THROWS_AS(apparent_singularities(ode, {RationalFunction()}), MathError);
    ode.off_diagonal = e("(z-b)^2/(z-1)");
    const auto ap = apparent_singularities(ode, {RationalFunction(1)});
    REQUIRE(ap.size() == 1);
    CHECK(ap[0].order == 2);
    CHECK(ap[0].s2 == RationalFunction(3));
}

TEST_CASE("theta from the double-pole coefficient")
{
    CHECK(theta_from_coefficient(e("-1/4"), std::nullopt).is_zero());
    CHECK(theta_from_coefficient(e("(c^2-c)/1"), std::nullopt) == e("2*c-1"));
    CHECK(theta_from_coefficient(e("(c^2-c)/1"), e("1-2*c")) == e("1-2*c"));
    // a hint that does not match up to sign is ignored
    CHECK(theta_from_coefficient(e("(c^2-c)/1"), e("c")) == e("2*c-1"));
    CHECK_THROWS_AS(theta_from_coefficient(e("c"), std::nullopt), MathError);
}

TEST_CASE("accessory parameters reject template mismatches")
{
    const PipelineResult p = run_pipeline(2);
    SLForm bad = p.sl;
    bad.p += e("1/(z-7)");
    CHECK_THROWS_AS(accessory_parameters(bad, p.points, p.raw_lambda), MathError);
    CHECK_THROWS_AS(accessory_parameters(p.sl, p.points, p.raw_lambda + 1), MathError);
    auto shifted = p.points;
    shifted[1] = RationalFunction(5);
    CHECK_THROWS_AS(accessory_parameters(p.sl, shifted, p.raw_lambda), MathError);
}

TEST_CASE("mu and nu are inverse")
{
    const std::array<RationalFunction, 4> th{e("c-1/2"), e("a+c-1"), e("c-1/2"), e("a+c-1")};
    const std::array<RationalFunction, 3> pts{e("b^2"), RationalFunction(), RationalFunction(1)};
    const RationalFunction mu = e("(-a-2*c+2)/(2*b)");
    CHECK(mu_from_nu(th, pts, e("-b"), nu_from_mu(th, pts, e("-b"), mu)) == mu);
}

}
