#include "pvi/matrix.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"

#include <random>

namespace pvi {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0) throw MathError("matrix dimensions must be positive");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<RationalFunction>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw MathError("matrix dimensions must be positive");
    for (const auto &r : rows) {
        if (r.size() != cols_) throw MathError("ragged matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix::Matrix(const std::vector<std::vector<RationalFunction>> &rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.front().size() : 0;
    if (rows_ == 0 || cols_ == 0) throw MathError("matrix dimensions must be positive");
    for (const auto &r : rows) {
        if (r.size() != cols_) throw MathError("ragged matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, RationalFunction(1)); }

Matrix Matrix::scalar(std::size_t n, const RationalFunction &value)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

Matrix Matrix::diagonal(const std::vector<RationalFunction> &entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::column(const Vector &v)
{
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const
{
    Vector out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw MathError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix &m)
{
    if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw MathError("block out of range");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
    }
}

bool Matrix::is_zero() const
{
    for (const auto &e : data_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

Matrix Matrix::operator-() const
{
    Matrix out = *this;
    for (auto &e : out.data_) e = -e;
    return out;
}

Matrix operator+(const Matrix &lhs, const Matrix &rhs)
{
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw MathError("matrix shape mismatch");
    Matrix out = lhs;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix operator-(const Matrix &lhs, const Matrix &rhs) { return lhs + (-rhs); }

Matrix operator*(const Matrix &lhs, const Matrix &rhs)
{
    if (lhs.cols_ != rhs.rows_) throw MathError("matrix shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            RationalFunction sum;
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                if (lhs(i, k).is_zero() || rhs(k, j).is_zero()) continue;
                sum += lhs(i, k) * rhs(k, j);
            }
            out(i, j) = std::move(sum);
        }
    }
    return out;
}

Matrix operator*(const RationalFunction &s, const Matrix &m)
{
    Matrix out = m;
    for (auto &e : out.data_) e = s * e;
    return out;
}

Vector operator*(const Matrix &m, const Vector &v)
{
    if (m.cols_ != v.size()) throw MathError("matrix-vector shape mismatch");
    Vector out(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
        for (std::size_t k = 0; k < m.cols_; ++k) {
            if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
        }
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

RationalFunction Matrix::trace() const
{
    if (!is_square()) throw MathError("trace of a non-square matrix");
    RationalFunction sum;
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
}

Matrix Matrix::derivative(std::string_view var) const
{
    Matrix out = *this;
    for (auto &e : out.data_) e = e.derivative(var);
    return out;
}

Matrix Matrix::substitute(const std::map<std::string, RationalFunction> &values) const
{
    Matrix out = *this;
    for (auto &e : out.data_) e = e.substitute(values);
    return out;
}

Matrix Matrix::map(RationalFunction (*fn)(const RationalFunction &)) const
{
    Matrix out = *this;
    for (auto &e : out.data_) e = fn(e);
    return out;
}

// ---------------------------------------------------------------------------

Matrix rref(const Matrix &m, std::vector<std::size_t> *pivots)
{
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        }
        const RationalFunction inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) {
            if (!a(row, c).is_zero()) a(row, c) = a(row, c) * inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const RationalFunction f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
            }
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::vector<Vector> kernel_basis(const Matrix &m)
{
    std::vector<std::size_t> piv;
    const Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = RationalFunction(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Rank of the matrix specialized at a random rational point, or 0 on a pole.
std::size_t rank_at_point(const Matrix &m)
{
    std::vector<std::string> vars;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto &v : m(r, c).variables()) {
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
            }
        }
    }
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> dist(-997, 997);
    std::map<std::string, Rational> point;
    for (const auto &v : vars) point[v] = make_rational(dist(rng), 1 + (dist(rng) & 63));
    Matrix num(m.rows(), m.cols());
    try {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) num(r, c) = m(r, c).evaluate(point);
        }
    } catch (const MathError &) {
        return 0;
    }
    std::vector<std::size_t> piv;
    rref(num, &piv);
    return piv.size();
}

} // namespace

std::size_t rank(const Matrix &m)
{
    // A specialization can only lower the rank.
    const std::size_t full = std::min(m.rows(), m.cols());
    if (rank_at_point(m) == full) return full;
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

RationalFunction det(const Matrix &m)
{
    if (!m.is_square()) throw MathError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3) {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    Matrix a = m;
    RationalFunction result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return {};
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
            result = -result;
        }
        result *= a(col, col);
        const RationalFunction inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const RationalFunction f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) {
                if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
            }
        }
    }
    return result;
}

Matrix inverse(const Matrix &m)
{
    if (!m.is_square()) throw MathError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 2) {
        const RationalFunction d = det(m);
        if (d.is_zero()) throw MathError("matrix is singular");
        const RationalFunction inv = d.inverse();
        return Matrix{{m(1, 1) * inv, -m(0, 1) * inv}, {-m(1, 0) * inv, m(0, 0) * inv}};
    }
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    std::vector<std::size_t> piv;
    const Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw MathError("matrix is singular");
    return r.block(0, n, n, n);
}

std::vector<RationalFunction> char_poly_coefficients(const Matrix &m)
{
    if (!m.is_square()) throw MathError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    std::vector<RationalFunction> c(n + 1);
    c[n] = RationalFunction(1);
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + Matrix::scalar(n, c[n - k + 1]);
        c[n - k] = -(m * mk).trace() * RationalFunction(make_rational(1, static_cast<long>(k)));
    }
    return c;
}

RationalFunction char_poly(const Matrix &m, const std::string &s)
{
    const auto c = char_poly_coefficients(m);
    const RationalFunction var = RationalFunction::variable(s);
    RationalFunction out;
    for (std::size_t k = c.size(); k-- > 0;) out = out * var + c[k];
    return out;
}

bool verify_eigenvalue(const Matrix &m, const RationalFunction &candidate)
{
    const auto c = char_poly_coefficients(m);
    RationalFunction value;
    for (std::size_t k = c.size(); k-- > 0;) value = value * candidate + c[k];
    return value.is_zero();
}

bool has_spectrum(const Matrix &m, const std::vector<RationalFunction> &eigenvalues)
{
    if (eigenvalues.size() != m.rows()) return false;
    // prod (s - e_i), lowest degree first
    std::vector<RationalFunction> p{RationalFunction(1)};
    for (const auto &e : eigenvalues) {
        std::vector<RationalFunction> q(p.size() + 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= e * p[k];
        }
        p = std::move(q);
    }
    return p == char_poly_coefficients(m);
}

std::string to_string(const Matrix &m)
{
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += to_string(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

} // namespace pvi
