#include "pvi/table.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"

namespace pvi {

namespace {

RationalFunction e(const char *text) { return parse(text); }

std::array<RationalFunction, 4> thetas(const char *t1, const char *t2, const char *t3, const char *t4)
{
    return {e(t1), e(t2), e(t3), e(t4)};
}

// rank-one residue with q22 = theta - q11 and q21 = q11 q22 / q12
Matrix rank_one(const RationalFunction &q11, const RationalFunction &q12, const RationalFunction &theta)
{
    const RationalFunction q22 = theta - q11;
    return Matrix{{q11, q12}, {q11 * q22 / q12, q22}};
}

Matrix mat(const char *q11, const char *q12, const char *q21, const char *q22)
{
    return Matrix{{e(q11), e(q12)}, {e(q21), e(q22)}};
}

} // namespace

Table1Row table1(int row_id)
{
    Table1Row r;
    r.id = row_id;
    switch (row_id) {
    case 1:
        r.degenerate = true;
        r.theta = thetas("0", "1-c", "c-a-b", "b-a");
        r.description = "degenerate: lambda = t = 0 or lambda = t = 1 (hypergeometric case)";
        r.family = 1;
        break;
    case 2:
        r.theta = thetas("1/2", "a-1", "1/2", "-(a+2*c-3)");
        r.lambda = e("(-a+1)/(a+2*c-3)*b");
        r.t = e("b^2");
        r.mu = e("(-a-2*c+3)/(2*b)");
        r.mc_source_row = 3;
        r.mc_mu = e("-c");
        r.description = "dihedral; middle convolution of row 3";
        break;
    case 3:
        r.theta = thetas("c-1/2", "a+c-1", "c-1/2", "a+c-1");
        r.lambda = e("-b");
        r.t = e("b^2");
        r.mu = e("(-a-2*c+2)/(2*b)");
        r.family = 2;
        r.description = "two-parameter family from the factored quartic connection";
        break;
    case 4:
        r.theta = thetas("a-1/2", "3*(a-1/2)", "a-1/2", "a-1/2");
        r.lambda = e("(-2*b-1)/b^2");
        r.t = e("(2*b+1)/(b^4+2*b^3)");
        r.mu = e("-(3*a-2)*b^2*(b+2)/(3*(b+1)^2)");
        r.printed_mu = "(-2a+3)b^2(b+2)/(2(b+1)^2)";
        r.family = 3;
        r.description = "one-parameter family; printed mu fails the equation";
        break;
    case 5:
        r.theta = thetas("a-1/2", "1/2", "a-1/2", "a-1/2");
        r.lambda = e("(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)");
        r.t = e("(b^4-6*b^2-8*b-3)/(b^4-6*b^2+8*b-3)");
        r.mu = e("(3*a-2)*(b-1)^2*(b+3)/(24*(b+1))");
        r.family = 4;
        r.mc_source_row = 4;
        r.mc_mu = e("-(3*a-2)");
        r.description = "one-parameter family; middle convolution of row 4";
        break;
    case 6:
        r.theta = thetas("a-1/2", "1/3", "a-1/2", "2*a-1");
        r.lambda = e("(-2*b^2-4)/(b^4-6*b^2)");
        r.t = e("(-12*b^2+8)/(b^6-6*b^4)");
        r.mu = e("(-3*a+2)*b^2*(b^2+2)*(b^2-6)/(12*(b^2-2)^2)");
        r.family = 5;
        r.description = "one-parameter family";
        break;
    default:
        throw Error("row " + std::to_string(row_id) + " out of range 1..6");
    }
    return r;
}

namespace fixtures {

std::array<Matrix, 3> row3_residues()
{
    const RationalFunction q1 = e("(b*a+a+2*b*c-3*b-1)*(a+2*c-2)/(4*b*(a+c-2))");
    const RationalFunction q2 = e("(-b^2+2*b-1)*(a+2*c-2)*(a-1)/(4*b*(a+c-2))");
    const RationalFunction q3 = e("(b*a+a-b+2*c-3)*(a+2*c-2)/(4*(a+c-2))");
    return {
        Matrix{{q1, e("1/(b*(b-1))")},
               {e("(b-1)*(b*a+a-2*b+2*c-2)*(-b*a-a-2*b*c+3*b+1)*(a+2*c-2)*(a-1)/(16*b*(a+c-2)^2)"),
                -q1 + e("c-1/2")}},
        Matrix{{q2, e("1/b")},
               {e("(b-1)^2*((2-a-2*c)*(a-1)*(b^2+1)+(-2*a^2-4*a*c+6*a-4*c^2+8*c-4)*b)*(a+2*c-2)*(a-1)/"
                  "(16*b*(a+c-2)^2)"),
                -q2 + e("a+c-1")}},
        Matrix{{q3, e("-1/(b-1)")},
               {e("(b-1)*(b*a+a-b+2*c-3)*(b*a+a+2*b*c-2*b-2)*(a+2*c-2)*(a-1)/(16*(a+c-2)^2)"), -q3 + e("c-1/2")}},
    };
}

Matrix row3_q2_printed()
{
    Matrix q = row3_residues()[1];
    q(1, 1) = -q(0, 0) + e("a-c-1");
    return q;
}

RationalFunction row3_lambda_tilde()
{
    return e("-b+((-2*a-2*c+4)*(b+1)^2*b)/((a-2)*(a+2*c-3)*(b+1)^2+2*(a^2+2*c*a-5*a+2*c^2-6*c+6)*b)");
}

std::array<Matrix, 3> row4_residues()
{
    return {
        rank_one(e("(18*a^2*b^2+18*a^2*b+18*a^2-3*a*b^3-30*a*b^2-48*a*b-36*a+2*b^3+12*b^2+24*b+16)/"
                   "(18*a*b+18*a-27*b-27)"),
                 e("(-b^4-2*b^3)/(b^2-1)"), e("a-1/2")),
        rank_one(e("(3*a-2)*(b^2+(-6*a+7)*b+1)*(b-1)^2/(18*a*b^2-27*b^2)"), e("b^2+2*b"), e("3*a-3/2")),
        rank_one(e("(18*a^2*b^3+18*a^2*b^2+18*a^2*b-36*a*b^3-48*a*b^2-30*a*b-3*a+16*b^3+24*b^2+12*b+2)/"
                   "(18*a*b^3+18*a*b^2-27*b^3-27*b^2)"),
                 e("(b^2+2*b)/(b^2-1)"), e("a-1/2")),
    };
}

std::array<Matrix, 3> convolved_row4_residues()
{
    const RationalFunction q1 = e("(3*a-2)*(b+(-6*a+2))*(b+2)^2/(9*(4*a-1)*(b+1))");
    const RationalFunction q2 = e("(-3*a+2)*(b^2+(-6*a+4)*b+1)*(b^2+b+1)/(9*(4*a-1)*b^2)");
    const RationalFunction q3 = e("(3*a-2)*((-6*a+2)*b+1)*(2*b+1)^2/(9*(4*a-1)*b^2*(b+1))");
    return {
        Matrix{{q1, e("(b+2)/((72*a-18)*(b+1))")},
               {e("(3*a-2)*((6*a-4)*b^3+(-36*a^2+60*a-24)*b^2+(24*a-21)*b-5)*(-b+(6*a-2))*(b+2)/(9*(4*a-1)*(b+1))"),
                e("-2*a+3/2") - q1}},
        Matrix{{q2, e("-(b^2+b+1)/(18*(4*a-1)*b^2)")},
               {e("((4-6*a)*b^4+(36*a^2-54*a+20)*b^3+(36*a^2-96*a+33)*b^2+(36*a^2-54*a+20)*b+4-6*a)/"
                  "(9*(4*a-1)*b^2)*(3*a-2)*(-b^2+(6*a-4)*b-1)"),
                e("1/2") - q2}},
        Matrix{{q3, e("(2*b+1)/(18*(4*a-1)*b^2*(b+1))")},
               {e("(3*a-2)*(-5*b^3+(24*a-21)*b^2+(-36*a^2+60*a-24)*b+(6*a-4))*((6*a-2)*b-1)*(2*b+1)/"
                  "(9*(4*a-1)*b^2*(b+1))"),
                e("-2*a+3/2") - q3}},
    };
}

RationalFunction convolved_row4_lambda() { return e("(b^2+b+1)/(b^3+2*b^2)"); }

std::array<RationalFunction, 4> convolved_row4_theta() { return thetas("-2*a+3/2", "1/2", "-2*a+3/2", "-2*a+3/2"); }

Matrix convolved_row4_infinity() { return Matrix::diagonal({e("3*a-2"), e("a-3/2")}); }

std::array<Matrix, 3> dihedral_residues()
{
    const RationalFunction q = e("1/(4*b)");
    return {
        q * mat("-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1", "-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1"),
        q * mat("a*b^2+2*a*b+a-b^2-2*b-1", "a*b^2-a-b^2+1", "-a*b^2+a+b^2-1", "-a*b^2+2*a*b-a+b^2-2*b+1"),
        e("1/4") * mat("-a*b-a+b-2*c+1", "-a*b-a+b-2*c+3", "a*b+a-b+2*c-1", "a*b+a-b+2*c-3"),
    };
}

Matrix dihedral_matrix()
{
    const RationalFunction d = e("1/(4*z*(z-1)*(z-b^2))");
    return d * mat("-4*c*z^2+((1-a+2*c)*(b^2+1)+2*(1-a)*b)*z+(a-1)*(b+1)^2*b",
                   "(b^2-1)*((a+2*c-3)*z+b*(a-1))", "(b^2-1)*((1-a-2*c)*z+(b-a*b))",
                   "4*(a+c-2)*z^2+((5-3*a-2*c)*(b^2+1)+2*(a-1)*b)*z+(1-a)*(b-1)^2*b");
}

Matrix dihedral_infinity() { return Matrix::diagonal({e("c"), e("-(a+c-2)")}); }

std::array<RationalFunction, 4> dihedral_theta() { return thetas("-1/2", "a-1", "-1/2", "-(a+2*c-3)"); }

std::array<RationalFunction, 4> dihedral_twisted_theta() { return thetas("1/2", "a-1", "1/2", "-(a+2*c-3)"); }

RationalFunction dihedral_lambda1() { return e("(-a+1)/(a+2*c-3)*b"); }

RationalFunction dihedral_lambda2() { return e("(-a+1)/(a+2*c-1)*b"); }

RationalFunction dihedral_mu1() { return e("(-a-2*c+3)/(2*b)"); }

Matrix dihedral_limit() { return Matrix::diagonal({e("(-a-c*z+1)/(z^2-z)"), e("(a+c-2)/(z-1)")}); }

Polynomial row5_quartic()
{
    return e("lambda^4-2*t*lambda^3-2*lambda^3+6*t*lambda^2-2*t^2*lambda-2*t*lambda+t^3-t^2+t").numerator();
}

std::vector<ThreeDimensionalCase> three_dimensional_cases()
{
    using V = std::vector<RationalFunction>;
    return {
        {5,
         {V{e("a-1/2"), e("0")}, V{e("a-3/2"), e("0")}, V{e("a-1/2"), e("0")}, V{e("-(3*a-3)/2"), e("-(3*a-2)/2")}},
         {V{e("1/2"), e("0"), e("0")}, V{e("-1/2"), e("0"), e("0")}, V{e("1/2"), e("0"), e("0")},
          V{e("-(a-1)/2"), e("-a/2"), e("a-1")}}},
        {6,
         {V{e("a-1/2"), e("0")}, V{e("-2*a+2"), e("0")}, V{e("a-1/2"), e("0")}, V{e("-1/3"), e("-2/3")}},
         {V{e("1/2"), e("0"), e("0")}, V{e("-3*a+3"), e("0"), e("0")}, V{e("1/2"), e("0"), e("0")},
          V{e("-1/3+a-1"), e("-2/3+a-1"), e("a-1")}}},
    };
}

} // namespace fixtures

} // namespace pvi
