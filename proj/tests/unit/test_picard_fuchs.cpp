#include "support.hpp"

#include "pvi/error.hpp"
#include "pvi/picard_fuchs.hpp"

#include <doctest.h>

using namespace pvi;
using pvi::test::e;

TEST_SUITE("picard_fuchs") {

TEST_CASE("three-point connection entries and symmetry")
{
    const auto conn = general_three_point_connection();
    CHECK(conn.coefficient("t1")(0, 1) == e("(-a-b-c+2)/((t1-t2)*(t1-t3))"));
    // dt2 coefficient: dt1 coefficient with t1 <-> t2 and a <-> b
    const Matrix swapped =
        conn.coefficient("t1").substitute({{"t1", e("t2")}, {"t2", e("t1")}, {"a", e("b")}, {"b", e("a")}});
    CHECK(conn.coefficient("t2") == swapped);
    CHECK_THROWS_AS(conn.coefficient("t4"), MathError);
}

TEST_CASE("printed entries of the (t2, t3) connections")
{
    CHECK(cubic_connection().coefficient("t3")(0, 0) == e("(-9/2)*t3/(27*t3^2-t2^3)"));
    CHECK(quartic_factored_connection().coefficient("t2")(0, 1) ==
          e("(-48*a*t3-96*c*t3+96*t3)/((t2^2-16*t3)*(t2^2+2*t3))"));
}

TEST_CASE("all three connections are flat")
{
    for (const auto &conn : {general_three_point_connection(), cubic_connection(), quartic_factored_connection()}) {
        for (std::size_t i = 0; i < conn.base.size(); ++i) {
            for (std::size_t j = i + 1; j < conn.base.size(); ++j) {
                INFO(conn.base[i] << ", " << conn.base[j]);
                CHECK(flatness_residual(conn, conn.base[i], conn.base[j]).is_zero());
            }
        }
        CHECK(is_flat(conn));
    }
}

TEST_CASE("a perturbed connection is not flat")
{
    auto conn = cubic_connection();
    conn.coefficients[0](0, 1) += e("t3");
    CHECK_FALSE(is_flat(conn));
}

TEST_CASE("curve families")
{
    auto f = herfurtner(2);
    CHECK(f.g2 == e("12*z^2*(z^2+b*z+1)"));
    CHECK(f.g3 == e("4*z^3*(2*z^3+3*b*z^2+3*b*z+2)"));
    f = herfurtner(4);
    CHECK(f.g2 == e("3*z^3*(z+b)"));
    CHECK(f.g3 == e("z^5*(z+1)"));
    f = herfurtner(1);
    CHECK(f.g2 == e("3*(z-1)*(z-b^2)^3"));
    CHECK(f.g3 == e("(z-1)*(z-b^2)^4*(z+b)"));
    CHECK_THROWS_AS(herfurtner(0), Error);
    CHECK_THROWS_AS(herfurtner(6), Error);
}

TEST_CASE("discriminant roots")
{
    const auto roots = discriminant_roots(rationalize(herfurtner(2)));
    CHECK(roots[0] == e("-b"));
    CHECK(roots[1] == RationalFunction());
    CHECK(roots[2] == e("-1/b"));
    // irrational before the substitution
    CHECK_THROWS_AS(discriminant_roots(herfurtner(2)), MathError);
    for (int id = 1; id <= 5; ++id) {
        INFO("family " << id);
        const CurveFamily f = rationalize(herfurtner(id));
        const auto r = discriminant_roots(f);
        for (const auto &t : r) CHECK(discriminant(f).substitute("z", t).is_zero());
        CHECK(r[0] != r[2]);
    }
}

TEST_CASE("rationalized families 3..5 land on (t, 0, 1)")
{
    for (int id = 3; id <= 5; ++id) {
        INFO("family " << id);
        CHECK(discriminant_roots(rationalize(herfurtner(id)))[2] == RationalFunction(1));
    }
}

TEST_CASE("the cubic splits only for family 2")
{
    const auto split = factor_cubic(rationalize(herfurtner(2)));
    REQUIRE(split.has_value());
    CHECK(split->g2 == e("4*(z^2+z)"));
    CHECK(split->g3 == e("(-9*b^2*z^3-8*b*z^4+2*b*z^3-8*b*z^2-9*z^3)/b"));
    const auto x = RationalFunction::variable("x");
    const CurveFamily f = rationalize(herfurtner(2));
    CHECK(split->quadratic * split->linear == 4 * x.pow(3) - f.g2 * x - f.g3);
    for (int id : {1, 3, 4, 5}) {
        INFO("family " << id);
        CHECK_FALSE(factor_cubic(rationalize(herfurtner(id))).has_value());
    }
    CurveFamily zero;
    CHECK_FALSE(factor_cubic(zero).has_value());
}

TEST_CASE("pullback pairing and preconditions")
{
    const CurveFamily f2 = rationalize(herfurtner(2));
    const CurveFamily f3 = rationalize(herfurtner(3));
    CHECK_THROWS_AS(pullback(cubic_connection(), f2), MathError);
    CHECK_THROWS_AS(pullback(quartic_factored_connection(), f3), MathError);
    CHECK_THROWS_AS(pullback(general_three_point_connection(), f3), MathError);
    CHECK_THROWS_AS(pullback(cubic_connection(), herfurtner(3)), MathError);
    const FuchsianSystem sys = pullback(quartic_factored_connection(), f2);
    CHECK(sys.singularities.size() == 3);
    CHECK(sys.matrix.rows() == 2);
}

TEST_CASE("pullback commutes with specialization")
{
    std::mt19937 rng(pvi::test::seed() + 20);
    INFO("seed " << pvi::test::seed());
    const CurveFamily f = rationalize(herfurtner(3));
    const FuchsianSystem sys = pullback(cubic_connection(), f);
    for (int k = 0; k < 3; ++k) {
        const RationalFunction a(pvi::test::random_rational(rng));
        CurveFamily g = f;
        const FuchsianSystem special = pullback(cubic_connection(a), g);
        CHECK(special.matrix == sys.matrix.substitute({{"a", a}}));
    }
}

}
