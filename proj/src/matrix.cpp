#include "redcor/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace redcor {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::diagonal(const Vector& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Int& b = other(k, j);
                if (b != 0) p(i, j) += a * b;
            }
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += other.data_[k];
    return s;
}

Matrix Matrix::operator-() const {
    Matrix s = *this;
    for (auto& x : s.data_) x = -x;
    return s;
}

Matrix Matrix::scaled(const Int& c) const {
    Matrix s = *this;
    for (auto& x : s.data_) x *= c;
    return s;
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }

Matrix Matrix::row_range(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }

Matrix Matrix::hconcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hconcat row mismatch");
    Matrix m(rows_, cols_ + right.cols_);
    m.place(0, 0, *this);
    m.place(0, cols_, right);
    return m;
}

void Matrix::place(std::size_t r, std::size_t c, const Matrix& block) {
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw std::out_of_range("block does not fit");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t nrows, std::size_t ncols) const {
    if (r + nrows > rows_ || c + ncols > cols_) throw std::out_of_range("block out of range");
    Matrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ", ";
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << (*this)(i, j).get_str();
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace redcor
