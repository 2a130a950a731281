#pragma once

#include "redcor/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace redcor {

// Dense integer matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix diagonal(const Vector& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    void set_column(std::size_t j, const Vector& v);

    Matrix transposed() const;
    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Int& c) const;

    // Columns [first, first + count).
    Matrix column_range(std::size_t first, std::size_t count) const;
    Matrix row_range(std::size_t first, std::size_t count) const;
    Matrix hconcat(const Matrix& right) const;

    // Copies `block` into this matrix with its top-left corner at (r, c).
    void place(std::size_t r, std::size_t c, const Matrix& block);
    Matrix block(std::size_t r, std::size_t c, std::size_t nrows, std::size_t ncols) const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace redcor
