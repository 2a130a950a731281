#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "redcor/smith.hpp"

using namespace redcor;

namespace {

void check_form(const Matrix& A) {
    SmithForm s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.diagonal_matrix(A.rows(), A.cols()));
    CHECK(s.U * s.U_inv == Matrix::identity(A.rows()));
    CHECK(abs(oracle::determinant(s.V)) == 1);
    for (std::size_t i = 0; i < s.rank; ++i) {
        CHECK(s.diagonal[i] > 0);
        if (i + 1 < s.rank) CHECK(divides(s.diagonal[i], s.diagonal[i + 1]));
    }
}

}  // namespace

TEST_CASE("smith normal form of small fixed matrices") {
    SUBCASE("diag(2,3) becomes diag(1,6)") {
        Matrix A{{2, 0}, {0, 3}};
        SmithForm s = smith_normal_form(A);
        CHECK(s.diagonal == Vector{1, 6});
        check_form(A);
    }
    SUBCASE("identity is fixed") {
        SmithForm s = smith_normal_form(Matrix::identity(3));
        CHECK(s.diagonal == Vector{1, 1, 1});
    }
    SUBCASE("[[4,2],[2,2]] becomes diag(2,2)") {
        Matrix A{{4, 2}, {2, 2}};
        SmithForm s = smith_normal_form(A);
        CHECK(s.diagonal == Vector{2, 2});
        check_form(A);
    }
    SUBCASE("zero and empty matrices") {
        CHECK(smith_normal_form(Matrix(2, 3)).rank == 0);
        CHECK(smith_normal_form(Matrix(0, 2)).rank == 0);
        CHECK(smith_normal_form(Matrix(2, 0)).U == Matrix::identity(2));
    }
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix A = oracle::random_matrix(rng, r, c, 9);
        check_form(A);
        SmithForm s = smith_normal_form(A);
        Int prefix = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            Int dk = oracle::determinantal_divisor(A, k);
            if (k <= s.rank) {
                prefix *= s.diagonal[k - 1];
                CHECK(prefix == dk);
            } else {
                CHECK(dk == 0);
            }
        }
    }
}

TEST_CASE("large entries stay exact") {
    Matrix A(2, 2);
    A(0, 0) = Int("123456789012345678901234567890");
    A(0, 1) = Int("987654321098765432109876543210");
    A(1, 0) = 3;
    A(1, 1) = 7;
    check_form(A);
}

TEST_CASE("solve and kernel") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix A = oracle::random_matrix(rng, r, c, 6);
        Vector x0(c);
        for (auto& v : x0) v = static_cast<long>(rng() % 11) - 5;
        auto x = solve(A, A * x0);
        REQUIRE(x.has_value());
        CHECK(A * *x == A * x0);
        Matrix K = integer_kernel(A);
        CHECK((A * K).is_zero());
        CHECK(K.cols() == c - smith_normal_form(A).rank);
    }
    Matrix A{{2, 0}, {0, 2}};
    CHECK_FALSE(solve(A, Vector{1, 0}).has_value());
}

TEST_CASE("lattice membership and coordinates") {
    Lattice L(Matrix{{2, 4}, {0, 6}});
    CHECK(L.contains(Vector{2, 0}));
    CHECK(L.contains(Vector{0, 6}));
    CHECK_FALSE(L.contains(Vector{1, 0}));
    auto c = L.combination(Vector{6, 6});
    REQUIRE(c.has_value());
    CHECK(Matrix{{2, 4}, {0, 6}} * *c == Vector{6, 6});
}
