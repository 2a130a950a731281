#include "redcor/smith.hpp"

#include <stdexcept>
#include <utility>

namespace redcor {
namespace {

bool abs_less(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

struct Reducer {
    Matrix A, U, U_inv, V;

    // row_i += c * row_t, mirrored on U and U_inv.
    void add_row(std::size_t i, std::size_t t, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A(t, j) != 0) A(i, j) += c * A(t, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            if (U(t, j) != 0) U(i, j) += c * U(t, j);
        // inverse: column t -= c * column i
        for (std::size_t r = 0; r < U_inv.rows(); ++r)
            if (U_inv(r, i) != 0) U_inv(r, t) -= c * U_inv(r, i);
    }
    void swap_rows(std::size_t i, std::size_t t) {
        if (i == t) return;
        for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(i, j), A(t, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(i, j), U(t, j));
        for (std::size_t r = 0; r < U_inv.rows(); ++r) std::swap(U_inv(r, i), U_inv(r, t));
    }
    void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < A.cols(); ++j) A(t, j) = -A(t, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(t, j) = -U(t, j);
        for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, t) = -U_inv(r, t);
    }
    // col_j += c * col_t, mirrored on V.
    void add_col(std::size_t j, std::size_t t, const Int& c) {
        if (c == 0) return;
        for (std::size_t r = 0; r < A.rows(); ++r)
            if (A(r, t) != 0) A(r, j) += c * A(r, t);
        for (std::size_t r = 0; r < V.rows(); ++r)
            if (V(r, t) != 0) V(r, j) += c * V(r, t);
    }
    void swap_cols(std::size_t j, std::size_t t) {
        if (j == t) return;
        for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, j), A(r, t));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, j), V(r, t));
    }
};

}  // namespace

Matrix SmithForm::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    Matrix D(rows, cols);
    for (std::size_t i = 0; i < rank; ++i) D(i, i) = diagonal[i];
    return D;
}

SmithForm smith_normal_form(const Matrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    Reducer R{input, Matrix::identity(m), Matrix::identity(m), Matrix::identity(n)};
    Matrix& A = R.A;

    std::size_t t = 0;
    Int q;
    while (t < m && t < n) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A(i, j) != 0 && (pi == m || abs_less(A(i, j), A(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        R.swap_rows(t, pi);
        R.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A(i, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
                R.add_row(i, t, -q);
                if (A(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
                R.add_col(j, t, -q);
                if (A(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // move the smallest remainder in row/column t onto the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (A(i, t) != 0 && abs_less(A(i, t), A(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(t, j) != 0 && abs_less(A(t, j), A(bi, bj))) bi = t, bj = j;
                R.swap_rows(t, bi);
                R.swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(A(t, t), A(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            R.add_row(t, bad, Int(1));
        }
        if (A(t, t) < 0) R.negate_row(t);
        ++t;
    }

    SmithForm s;
    s.rank = t;
    s.diagonal.reserve(t);
    for (std::size_t i = 0; i < t; ++i) s.diagonal.push_back(A(i, i));
    s.U = std::move(R.U);
    s.U_inv = std::move(R.U_inv);
    s.V = std::move(R.V);
    return s;
}

std::optional<Vector> solve(const Matrix& A, const Vector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve: dimension mismatch");
    SmithForm s = smith_normal_form(A);
    Vector y = s.U * b;
    Vector z(A.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank) {
            if (!divides(s.diagonal[i], y[i])) return std::nullopt;
            z[i] = exact_div(y[i], s.diagonal[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * z;
}

Matrix integer_kernel(const Matrix& A) {
    SmithForm s = smith_normal_form(A);
    return s.V.column_range(s.rank, A.cols() - s.rank);
}

Lattice::Lattice(const Matrix& generators)
    : dim_(generators.rows()), generators_(generators), snf_(smith_normal_form(generators)) {
    basis_ = Matrix(dim_, snf_.rank);
    for (std::size_t j = 0; j < snf_.rank; ++j)
        for (std::size_t i = 0; i < dim_; ++i) basis_(i, j) = snf_.U_inv(i, j) * snf_.diagonal[j];
}

std::optional<Vector> Lattice::coordinates(const Vector& x) const {
    Vector y = snf_.U * x;
    Vector c(snf_.rank);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < snf_.rank) {
            if (!divides(snf_.diagonal[i], y[i])) return std::nullopt;
            c[i] = exact_div(y[i], snf_.diagonal[i]);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return c;
}

bool Lattice::contains(const Vector& x) const { return coordinates(x).has_value(); }

std::optional<Vector> Lattice::combination(const Vector& x) const {
    auto c = coordinates(x);
    if (!c) return std::nullopt;
    Vector z(generators_.cols());
    for (std::size_t i = 0; i < c->size(); ++i) z[i] = (*c)[i];
    return snf_.V * z;
}

}  // namespace redcor
