#include "pvi/middle_convolution.hpp"

#include "pvi/error.hpp"

#include <algorithm>

namespace pvi {

namespace {

Matrix from_columns(const std::vector<Vector> &cols, std::size_t rows)
{
    Matrix out(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows; ++r) out(r, c) = cols[c][r];
    }
    return out;
}

Vector unit(std::size_t n, std::size_t j)
{
    Vector v(n);
    v[j] = RationalFunction(1);
    return v;
}

} // namespace

std::vector<Matrix> OkuboSystem::residues() const
{
    const std::size_t nn = n(), r = points.size();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < r; ++i) {
        Matrix bi(nn * r, nn * r);
        bi.set_block(i * nn, 0, B.block(i * nn, 0, nn, nn * r));
        out.push_back(std::move(bi));
    }
    return out;
}

Matrix ConvolutionResult::combined(const std::string &z) const
{
    const RationalFunction x = RationalFunction::variable(z);
    Matrix out(dimension(), dimension());
    for (std::size_t i = 0; i < residues.size(); ++i) out += (x - points[i]).inverse() * residues[i];
    return out;
}

OkuboSystem okubo_build(const std::vector<RationalFunction> &points, const std::vector<Matrix> &residues,
                        const RationalFunction &mu_c)
{
    if (points.empty() || points.size() != residues.size()) throw MathError("one residue per point is required");
    if (mu_c.is_zero()) throw MathError("convolution parameter vanishes identically; the quotient is not defined here");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) throw MathError("repeated singularity in convolution input");
        }
    }
    const std::size_t n = residues.front().rows(), r = points.size();
    for (const auto &a : residues) {
        if (a.rows() != n || a.cols() != n) throw MathError("residues must be square of equal size");
    }
    OkuboSystem out;
    out.points = points;
    out.blocks = residues;
    out.mu_c = mu_c;
    out.B = Matrix(n * r, n * r);
    out.T = Matrix(n * r, n * r);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
            out.B.set_block(j * n, i * n, i == j ? residues[i] + Matrix::scalar(n, mu_c) : residues[i]);
        }
        out.T.set_block(j * n, j * n, Matrix::scalar(n, points[j]));
    }
    return out;
}

OkuboSystem okubo_build(const SchlesingerSystem &s, const RationalFunction &mu_c)
{
    return okubo_build({s.points.begin(), s.points.end()}, {s.residues.begin(), s.residues.end()}, mu_c);
}

InvariantSubspaces invariant_subspaces(const OkuboSystem &okubo)
{
    const std::size_t n = okubo.n(), r = okubo.points.size();
    InvariantSubspaces out;
    Matrix sum = Matrix::scalar(n, okubo.mu_c);
    for (std::size_t i = 0; i < r; ++i) {
        sum += okubo.blocks[i];
        for (const auto &v : kernel_basis(okubo.blocks[i])) {
            Vector e(n * r);
            std::copy(v.begin(), v.end(), e.begin() + static_cast<std::ptrdiff_t>(i * n));
            out.k.push_back(std::move(e));
        }
    }
    for (const auto &v : kernel_basis(sum)) {
        Vector e(n * r);
        for (std::size_t i = 0; i < r; ++i) std::copy(v.begin(), v.end(), e.begin() + static_cast<std::ptrdiff_t>(i * n));
        out.l.push_back(std::move(e));
    }
    return out;
}

bool is_invariant(const std::vector<Matrix> &maps, const std::vector<Vector> &basis)
{
    if (basis.empty()) return true;
    const std::size_t dim = basis.front().size();
    const Matrix k = from_columns(basis, dim);
    const std::size_t rk = rank(k);
    for (const auto &m : maps) {
        for (const auto &v : basis) {
            auto cols = basis;
            cols.push_back(m * v);
            if (rank(from_columns(cols, dim)) != rk) return false;
        }
    }
    return true;
}

ConvolutionResult mc_quotient(const OkuboSystem &okubo, const InvariantSubspaces &subspaces)
{
    const std::size_t n = okubo.n(), r = okubo.points.size(), dim = n * r;
    const auto bs = okubo.residues();
    std::vector<Vector> cols = subspaces.k;
    cols.insert(cols.end(), subspaces.l.begin(), subspaces.l.end());
    if (!is_invariant(bs, cols)) throw MathError("subspace k + l is not invariant under the B_i");
    const std::size_t d = cols.empty() ? 0 : rank(from_columns(cols, dim));
    if (d != cols.size()) throw MathError("k and l intersect; quotient basis is not defined");
    if (d == dim) throw MathError("quotient is zero-dimensional");
    // complete with standard vectors, starting at the second block
    for (std::size_t step = 0; step < dim && cols.size() < dim; ++step) {
        const std::size_t j = (n + step) % dim;
        auto trial = cols;
        trial.push_back(unit(dim, j));
        if (rank(from_columns(trial, dim)) == trial.size()) cols = std::move(trial);
    }
    ConvolutionResult out;
    out.points = okubo.points;
    out.S = from_columns(cols, dim);
    out.dim_k = subspaces.k.size();
    out.dim_l = subspaces.l.size();
    out.expected_dimension = dim - out.dim_k - out.dim_l;
    const Matrix s_inv = inverse(out.S);
    const std::size_t m = dim - d;
    for (const auto &b : bs) {
        const Matrix c = s_inv * b * out.S;
        if (!c.block(d, 0, m, d).is_zero()) throw MathError("conjugated residue is not block triangular");
        out.residues.push_back(c.block(d, d, m, m));
    }
    return out;
}

ConvolutionResult middle_convolution(const SchlesingerSystem &s, const RationalFunction &mu_c)
{
    const OkuboSystem okubo = okubo_build(s, mu_c);
    return mc_quotient(okubo, invariant_subspaces(okubo));
}

MCParameters mc_parameters(const std::array<RationalFunction, 4> &theta, const RationalFunction &alpha,
                           const RationalFunction &mu_c)
{
    MCParameters out;
    for (std::size_t i = 0; i < 3; ++i) out.theta[i] = theta[i] + mu_c;
    out.theta[3] = theta[3] - mu_c + 2 * alpha;
    out.alpha = -mu_c;
    return out;
}

SchlesingerSystem mc_to_schlesinger(const ConvolutionResult &result, const std::array<RationalFunction, 2> &eigenvalues)
{
    if (result.dimension() != 2) {
        throw MathError("quotient has dimension " + std::to_string(result.dimension()) + ", expected 2");
    }
    if (result.points.size() != 3) throw MathError("Schlesinger form needs three finite singularities");
    Matrix sum(2, 2);
    for (const auto &a : result.residues) sum += a;
    if (!has_spectrum(sum, {eigenvalues[0], eigenvalues[1]})) {
        throw MathError("sum of the quotient residues does not have the requested eigenvalues");
    }
    Matrix st(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        const Matrix m = sum - Matrix::scalar(2, eigenvalues[k]);
        st(0, k) = -m(0, 1);
        st(1, k) = m(0, 0);
        if (st(0, k).is_zero() && st(1, k).is_zero()) throw MathError("eigenvector construction degenerates");
    }
    const Matrix st_inv = inverse(st);
    SchlesingerSystem out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.points[i] = result.points[i];
        out.residues[i] = st_inv * result.residues[i] * st;
    }
    out.normalized = out.points[1].is_zero() && out.points[2] == RationalFunction(1);
    try {
        out.lambda1 = apparent_point(out, 1);
        out.lambda2 = apparent_point(out, 2);
    } catch (const MathError &) {
    }
    return out;
}

SchlesingerSystem mc_to_schlesinger(const ConvolutionResult &result, const MCParameters &parameters)
{
    const std::array<RationalFunction, 2> eig{-parameters.alpha, -(parameters.alpha + parameters.theta[3] - 1)};
    return mc_to_schlesinger(result, eig);
}

bool residue_spectra(const std::vector<Matrix> &residues, const std::vector<std::vector<RationalFunction>> &candidates)
{
    if (residues.size() != candidates.size()) return false;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i].rows() != candidates[i].size()) return false;
        if (!has_spectrum(residues[i], candidates[i])) return false;
    }
    return true;
}

std::vector<Matrix> with_infinity(const std::vector<Matrix> &residues)
{
    std::vector<Matrix> out = residues;
    Matrix sum(residues.front().rows(), residues.front().cols());
    for (const auto &a : residues) sum += a;
    out.push_back(-sum);
    return out;
}

} // namespace pvi
