#pragma once

#include "redcor/matrix.hpp"

#include <optional>

namespace redcor {

// U * A * V = D with D diagonal, diagonal entries positive and forming a
// divisibility chain. U_inv is the inverse of U.
struct SmithForm {
    Matrix U;
    Matrix U_inv;
    Matrix V;
    Vector diagonal;  // the nonzero diagonal entries d_1 | d_2 | ... | d_rank
    std::size_t rank = 0;

    Matrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const Matrix& A);

// Integer solution x of A x = b, if one exists.
std::optional<Vector> solve(const Matrix& A, const Vector& b);

// Columns form a basis of {x in Z^n : A x = 0}.
Matrix integer_kernel(const Matrix& A);

// The subgroup of Z^m spanned by the columns of a matrix.
class Lattice {
public:
    explicit Lattice(const Matrix& generators);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return snf_.rank; }
    // Columns form a Z-basis of the lattice.
    const Matrix& basis() const { return basis_; }

    bool contains(const Vector& x) const;
    // Coordinates of x with respect to basis(); nullopt when x is not in the lattice.
    std::optional<Vector> coordinates(const Vector& x) const;
    // Coefficients c with generators * c = x.
    std::optional<Vector> combination(const Vector& x) const;

private:
    std::size_t dim_;
    Matrix generators_;
    SmithForm snf_;
    Matrix basis_;
};

}  // namespace redcor
