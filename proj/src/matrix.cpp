#include "cellsync/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cellsync {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t dim)
{
    Matrix m(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dim) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational Matrix::trace() const
{
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_integer() const
{
    for (const auto& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

Matrix operator*(const Rational& s, Matrix a)
{
    for (auto& x : a.data_) x *= s;
    return a;
}

std::string Matrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

RowEchelon rref(Matrix m)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m)
{
    RowEchelon e = rref(m);
    std::vector<char> pivot(m.cols(), 0);
    for (auto c : e.pivot_columns) pivot[c] = 1;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> span_basis(std::span<const Vector> vectors, std::size_t dim)
{
    Matrix rows(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) throw std::invalid_argument("vector length mismatch");
        for (std::size_t j = 0; j < dim; ++j) rows(i, j) = vectors[i][j];
    }
    RowEchelon e = rref(rows);
    std::vector<Vector> out;
    for (std::size_t r = 0; r < e.rank; ++r) out.push_back(e.reduced.row(r));
    return out;
}

std::vector<Vector> column_space_basis(const Matrix& m)
{
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return span_basis(cols, m.rows());
}

std::vector<Vector> intersect(std::span<const Vector> a, std::span<const Vector> b, std::size_t dim)
{
    if (a.empty() || b.empty()) return {};
    // [A | -B] (x, y) = 0  <=>  A x = B y
    Matrix stacked(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].size() != dim) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i) stacked(i, j) = a[j][i];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].size() != dim) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i) stacked(i, a.size() + j) = -b[j][i];
    }
    std::vector<Vector> common;
    for (const auto& k : kernel_basis(stacked)) {
        Vector v(dim);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (k[j] != 0)
                for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
        common.push_back(std::move(v));
    }
    return span_basis(common, dim);
}

bool in_span(std::span<const Vector> basis, const Vector& v, std::size_t dim)
{
    std::vector<Vector> all(basis.begin(), basis.end());
    const std::size_t before = span_basis(all, dim).size();
    all.push_back(v);
    return span_basis(all, dim).size() == before;
}

} // namespace cellsync
