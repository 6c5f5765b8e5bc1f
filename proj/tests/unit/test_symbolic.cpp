#include "support.hpp"

#include "pvi/error.hpp"
#include "pvi/partial_fractions.hpp"
#include "pvi/roots.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pvi;
using pvi::test::e;

TEST_SUITE("symbolic") {

TEST_CASE("parse cancels common factors")
{
    CHECK(e("(b^2-1)/(b-1)") == e("b+1"));
    CHECK(e("3/4*(b+1/b)+1/2") == RationalFunction::fraction(e("3*b^2+2*b+3").numerator(), e("4*b").numerator()));
    CHECK(to_string(e("3/4*(b+1/b)+1/2")) == "(3*b^2+2*b+3)/(4*b)");
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(parse("x^-1"), ParseError);
    CHECK_THROWS_AS(parse("b+"), ParseError);
    CHECK_THROWS_AS(parse("(b"), ParseError);
    CHECK_THROWS_AS(parse("2 b"), ParseError);
    CHECK_THROWS_AS(parse("b", {"a"}), ParseError);
    CHECK_THROWS_AS(parse("1/(b-b)"), ParseError);
    try {
        parse("a+*b");
        FAIL("no exception");
    } catch (const ParseError &err) {
        CHECK(err.position() == 2);
    }
}

TEST_CASE("leading sign and whitespace")
{
    CHECK(parse(" -c") == -RationalFunction::variable("c"));
    CHECK(parse(" a + b ") == e("a+b"));
}

TEST_CASE("print then parse is the identity")
{
    std::mt19937 rng(pvi::test::seed());
    INFO("seed " << pvi::test::seed());
    for (int i = 0; i < 30; ++i) {
        const RationalFunction f = pvi::test::random_rf(rng, {"z", "b", "a"});
        CHECK(parse(to_string(f)) == f);
    }
    for (const char *s : {"(-a-2*c+2)/(2*b)", "(2*b+1)/(b^4+2*b^3)", "lambda^2-t*mu", "-1/2", "0"}) {
        CHECK(to_string(parse(to_string(e(s)))) == to_string(e(s)));
    }
}

TEST_CASE("canonical forms: equal values have identical representations")
{
    const RationalFunction f = e("(a+b)/(a-b)");
    const RationalFunction g = e("(2*a+2*b)/(2*a-2*b)");
    const RationalFunction h = e("(-a-b)/(b-a)");
    CHECK(f == g);
    CHECK(f == h);
    CHECK(f.denominator() == g.denominator());
    CHECK(f.denominator().leading_coefficient() > 0);
}

TEST_CASE("ring axioms on random instances")
{
    std::mt19937 rng(pvi::test::seed() + 1);
    INFO("seed " << pvi::test::seed());
    for (int i = 0; i < 10; ++i) {
        const auto f = pvi::test::random_rf(rng, {"b", "a"});
        const auto g = pvi::test::random_rf(rng, {"b", "c"});
        const auto h = pvi::test::random_rf(rng, {"a", "c"});
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == RationalFunction());
        if (!f.is_zero()) CHECK(f * f.inverse() == RationalFunction(1));
    }
}

TEST_CASE("derivative examples")
{
    CHECK(e("b^2").derivative("b") == e("2*b"));
    CHECK(e("1/(z-t)").derivative("z") == e("-1/(z-t)^2"));
    CHECK(e("a*b").derivative("z").is_zero());
}

TEST_CASE("derivative: Leibniz and linearity")
{
    std::mt19937 rng(pvi::test::seed() + 2);
    INFO("seed " << pvi::test::seed());
    for (int i = 0; i < 10; ++i) {
        const auto f = pvi::test::random_rf(rng, {"b", "a"});
        const auto g = pvi::test::random_rf(rng, {"b", "a"});
        CHECK((f * g).derivative("b") == f.derivative("b") * g + f * g.derivative("b"));
        CHECK((3 * f - g).derivative("b") == 3 * f.derivative("b") - g.derivative("b"));
    }
}

TEST_CASE("derivative agrees with an evaluation oracle at random points")
{
    // f'(p) = lim (f(p+h) - f(p))/h, taken exactly: substitute b -> p + h,
    // cancel h symbolically and set h = 0.
    std::mt19937 rng(pvi::test::seed() + 3);
    INFO("seed " << pvi::test::seed());
    const RationalFunction h = RationalFunction::variable("h");
    std::vector<RationalFunction> cases{e("(2*b+1)/(b^4+2*b^3)"), e("(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)"),
                                        e("(-2*b^2-4)/(b^4-6*b^2)")};
    for (int i = 0; i < 3; ++i) cases.push_back(pvi::test::random_rf(rng, {"b"}));
    for (const auto &f : cases) {
        const RationalFunction df = f.derivative("b");
        int done = 0;
        while (done < 5) {
            const Rational p = pvi::test::random_rational(rng);
            Rational fp, dfp;
            try {
                fp = f.evaluate({{"b", p}});
                dfp = df.evaluate({{"b", p}});
            } catch (const MathError &) {
                continue;  // pole
            }
            const RationalFunction quotient = (f.substitute("b", RationalFunction(p) + h) - RationalFunction(fp)) / h;
            CHECK(quotient.evaluate({{"h", Rational(0)}}) == dfp);
            ++done;
        }
    }
}

TEST_CASE("substitute")
{
    CHECK(e("z").substitute("z", e("z*t3")) == e("z*t3"));
    CHECK_THROWS_AS(e("1/(b-1)").substitute("b", RationalFunction(1)), MathError);
    // simultaneous, not sequential
    CHECK(e("a+2*b").substitute({{"a", e("b")}, {"b", e("a")}}) == e("b+2*a"));
    // the radicand of the row-3 substitution becomes a square up to monomials
    const RationalFunction f = e("b^2-b-2").substitute("b", e("3/4*(b+1/b)+1/2"));
    CHECK(f == e("9*(b-1)^2*(b+1)^2/(16*b^2)"));
    CHECK(exact_sqrt(f).has_value());
}

TEST_CASE("evaluate")
{
    CHECK(e("(b+1)/(b-1)").evaluate({{"b", Rational(3)}}) == Rational(2));
    CHECK_THROWS_AS(e("1/(b-1)").evaluate({{"b", Rational(1)}}), MathError);
    CHECK_THROWS_AS(e("a+b").evaluate({{"b", Rational(1)}}), MathError);
}

TEST_CASE("partial fractions")
{
    auto pf = partial_fractions(e("1/(z*(z-1))"), "z", {RationalFunction(), RationalFunction(1)});
    CHECK(pf.residue(RationalFunction()) == RationalFunction(-1));
    CHECK(pf.residue(RationalFunction(1)) == RationalFunction(1));
    CHECK(pf.polynomial_part.is_zero());

    pf = partial_fractions(e("1/(z*(z-1)*(z-b^2))"), "z", {RationalFunction(), RationalFunction(1), e("b^2")});
    CHECK(pf.residue(RationalFunction()) == e("1/b^2"));
    CHECK(pf.residue(RationalFunction(1)) == e("1/(1-b^2)"));
    CHECK(pf.residue(e("b^2")) == e("1/(b^4-b^2)"));

    pf = partial_fractions(e("z/(z-1)"), "z", {RationalFunction(1)});
    CHECK(pf.polynomial_part == RationalFunction(1));
    CHECK(pf.residue(RationalFunction(1)) == RationalFunction(1));

    CHECK_THROWS_AS(partial_fractions(e("1/(z^2+1)"), "z", {}), MathError);
}

TEST_CASE("partial fractions re-sum exactly")
{
    std::mt19937 rng(pvi::test::seed() + 4);
    INFO("seed " << pvi::test::seed());
    const auto z = RationalFunction::variable("z");
    const std::vector<RationalFunction> poles{e("b"), RationalFunction(), e("-1/b"), e("a+1")};
    for (int i = 0; i < 8; ++i) {
        RationalFunction f = pvi::test::random_polynomial(rng, {"z", "b"}, 3, 3);
        std::uniform_int_distribution<int> order(0, 2);
        for (const auto &p : poles) f /= (z - p).pow(order(rng));
        const auto pf = partial_fractions(f, "z", poles);
        CHECK(pf.resum() == f);
    }
}

TEST_CASE("rational roots over Q(b)")
{
    const auto roots = rational_roots(e("(z+b)*(b*z+1)*z").numerator(), "z");
    CHECK(roots.size() == 3);
    std::vector<RationalFunction> values;
    for (const auto &r : roots) values.push_back(r.value);
    for (const auto &v : {e("-b"), e("-1/b"), RationalFunction()}) {
        CHECK(std::find(values.begin(), values.end(), v) != values.end());
    }
    const auto repeated = rational_roots(e("(z-b^2)^3*(z-1)").numerator(), "z");
    CHECK(repeated.size() == 2);
    CHECK_THROWS_AS(rational_roots(e("z^2-b").numerator(), "z"), MathError);
    CHECK(find_rational_roots(e("(z^2-b)*(z-1)").numerator(), "z").size() == 1);
}

TEST_CASE("exact square roots")
{
    CHECK(exact_sqrt(e("(a+c-1)^2/(4*b^2)")) == e("(a+c-1)/(2*b)"));
    CHECK_FALSE(exact_sqrt(e("b")).has_value());
    CHECK_FALSE(exact_sqrt(e("-1")).has_value());
}

}
