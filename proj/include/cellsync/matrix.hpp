#pragma once

#include "cellsync/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cellsync {

using Vector = std::vector<Rational>;

/// Dense matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);
    /// columns must all have length `dim`
    static Matrix from_columns(std::span<const Vector> columns, std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_integer() const;

    Vector apply(const Vector& v) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix a);

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of the right null space; one vector per free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Canonical basis of span(vectors): nonzero rows of the rref.
std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim);

std::vector<Vector> column_space_basis(const Matrix& m);

/// Basis of span(a) ∩ span(b), in canonical (rref) form.
std::vector<Vector> intersect(std::span<const Vector> a, std::span<const Vector> b, std::size_t dim);

bool in_span(std::span<const Vector> basis, const Vector& v, std::size_t dim);

} // namespace cellsync
