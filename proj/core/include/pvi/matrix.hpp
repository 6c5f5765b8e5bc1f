#pragma once

#include "pvi/rational_function.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace pvi {

using Vector = std::vector<RationalFunction>;

/// Dense matrix over the rational function field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<RationalFunction>> rows);
    explicit Matrix(const std::vector<std::vector<RationalFunction>> &rows);

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const RationalFunction &value);
    static Matrix diagonal(const std::vector<RationalFunction> &entries);
    static Matrix column(const Vector &v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    RationalFunction &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RationalFunction &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix &m);

    bool is_zero() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix &lhs, const Matrix &rhs);
    friend Matrix operator-(const Matrix &lhs, const Matrix &rhs);
    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs);
    friend Matrix operator*(const RationalFunction &s, const Matrix &m);
    friend Vector operator*(const Matrix &m, const Vector &v);
    Matrix &operator+=(const Matrix &rhs) { return *this = *this + rhs; }
    Matrix &operator-=(const Matrix &rhs) { return *this = *this - rhs; }
    friend bool operator==(const Matrix &lhs, const Matrix &rhs) = default;

    Matrix transpose() const;
    RationalFunction trace() const;
    Matrix derivative(std::string_view var) const;
    Matrix substitute(const std::map<std::string, RationalFunction> &values) const;
    Matrix map(RationalFunction (*fn)(const RationalFunction &)) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RationalFunction> data_;
};

/// Determinant; throws MathError for non-square input.
RationalFunction det(const Matrix &m);
/// Inverse; throws MathError if singular or non-square.
Matrix inverse(const Matrix &m);
/// Rank over the fraction field.
std::size_t rank(const Matrix &m);
/// Basis of the right kernel from the reduced row echelon form: pivots are
/// taken in column order from the first remaining row with a nonzero entry;
/// each basis vector has a 1 in its free column.
std::vector<Vector> kernel_basis(const Matrix &m);
/// Reduced row echelon form and the pivot columns.
Matrix rref(const Matrix &m, std::vector<std::size_t> *pivots = nullptr);

/// Coefficients of det(s I - M), lowest degree first (monic, size n+1).
std::vector<RationalFunction> char_poly_coefficients(const Matrix &m);
/// det(s I - M) as an expression in the symbol `s`.
RationalFunction char_poly(const Matrix &m, const std::string &s);
/// True iff the characteristic polynomial vanishes at `candidate`.
bool verify_eigenvalue(const Matrix &m, const RationalFunction &candidate);
/// True iff det(s I - M) = prod (s - e_i) exactly (multiplicities included).
bool has_spectrum(const Matrix &m, const std::vector<RationalFunction> &eigenvalues);

std::string to_string(const Matrix &m);

} // namespace pvi
