#include "support.hpp"

#include "pvi/error.hpp"
#include "pvi/matrix.hpp"

#include <doctest.h>

using namespace pvi;
using pvi::test::e;

namespace {

Matrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = pvi::test::random_polynomial(rng, {"b", "a"}, 2, 1);
    }
    return m;
}

}  // namespace

TEST_SUITE("linear_algebra") {

TEST_CASE("kernel of a rank-one residue")
{
    const RationalFunction q11 = e("(b*a+a-b+2*c-3)*(a+2*c-2)/(4*(a+c-2))");
    const RationalFunction q12 = e("-1/(b-1)");
    const RationalFunction q22 = e("c-1/2") - q11;
    const Matrix q{{q11, q12}, {q11 * q22 / q12, q22}};
    const auto ker = kernel_basis(q);
    REQUIRE(ker.size() == 1);
    // proportional to (q12, -q11)
    CHECK(ker[0][0] * (-q11) == ker[0][1] * q12);
    CHECK(ker[0][1] == RationalFunction(1));  // free column carries the 1
}

TEST_CASE("kernel corner cases")
{
    CHECK(kernel_basis(Matrix::identity(2)).empty());
    const auto zero = kernel_basis(Matrix(3, 3));
    REQUIRE(zero.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) CHECK(zero[i][j] == RationalFunction(i == j ? 1 : 0));
    }
}

TEST_CASE("kernel vectors are annihilated and rank-nullity holds")
{
    std::mt19937 rng(pvi::test::seed() + 10);
    INFO("seed " << pvi::test::seed());
    for (int trial = 0; trial < 6; ++trial) {
        // rank-deficient: product of thin factors
        const Matrix m = random_matrix(rng, 4, 2) * random_matrix(rng, 2, 5);
        const auto ker = kernel_basis(m);
        for (const auto &v : ker) {
            for (const auto &x : m * v) CHECK(x.is_zero());
        }
        CHECK(rank(m) + ker.size() == m.cols());
    }
}

TEST_CASE("inverse and determinant")
{
    const Matrix m{{e("a"), e("b")}, {e("1"), e("c")}};
    CHECK(det(m) == e("a*c-b"));
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{e("a"), e("b")}, {e("2*a"), e("2*b")}}), MathError);
    CHECK_THROWS_AS(det(Matrix(2, 3)), MathError);
}

TEST_CASE("characteristic polynomial and eigenvalues")
{
    const Matrix inf = Matrix::diagonal({e("c"), e("-(a+c-2)")});
    CHECK(verify_eigenvalue(inf, e("c")));
    CHECK(verify_eigenvalue(inf, e("-(a+c-2)")));
    CHECK_FALSE(verify_eigenvalue(inf, e("a")));
    CHECK(has_spectrum(Matrix(2, 2), {RationalFunction(), RationalFunction()}));
    CHECK_FALSE(has_spectrum(Matrix(2, 2), {RationalFunction()}));
    const RationalFunction q11 = e("(a+b)/3"), q12 = e("b-1"), theta = e("a-1/2");
    const Matrix q{{q11, q12}, {q11 * (theta - q11) / q12, theta - q11}};
    CHECK(has_spectrum(q, {theta, RationalFunction()}));
    CHECK(char_poly(inf, "s") == e("(s-c)*(s+a+c-2)"));
    CHECK_THROWS_AS(char_poly(Matrix(2, 3), "s"), MathError);
    CHECK(has_spectrum(Matrix::identity(3), {RationalFunction(1), RationalFunction(1), RationalFunction(1)}));
}

TEST_CASE("Faddeev-LeVerrier agrees with the determinant expansion")
{
    std::mt19937 rng(pvi::test::seed() + 11);
    INFO("seed " << pvi::test::seed());
    const RationalFunction s = RationalFunction::variable("s");
    for (int trial = 0; trial < 4; ++trial) {
        const Matrix m = random_matrix(rng, 3, 3);
        CHECK(char_poly(m, "s") == det(Matrix::scalar(3, s) - m));
    }
}

TEST_CASE("rref pivots")
{
    std::vector<std::size_t> pivots;
    const Matrix r = rref(Matrix{{e("0"), e("2"), e("4")}, {e("0"), e("1"), e("2")}}, &pivots);
    CHECK(pivots == std::vector<std::size_t>{1});
    CHECK(r(0, 1) == RationalFunction(1));
    CHECK(r(0, 2) == RationalFunction(2));
}

}
