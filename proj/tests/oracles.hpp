#pragma once

// Brute-force reference computations used to cross-check the exact algorithms.

#include "redcor/matrix.hpp"
#include "redcor/module.hpp"

#include <functional>
#include <random>
#include <vector>

namespace redcor::oracle {

// Every element of a finite module, in normalized coordinates.
inline std::vector<Vector> elements(const Module& M) {
    std::vector<Vector> out{Vector(M.rank())};
    for (std::size_t i = 0; i < M.rank(); ++i) {
        std::vector<Vector> next;
        for (const auto& v : out)
            for (Int x = 0; x < M.orders[i]; ++x) {
                Vector w = v;
                w[i] = x;
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

inline std::size_t count_if(const Module& M, const std::function<bool(const Vector&)>& pred) {
    std::size_t n = 0;
    for (const auto& x : elements(M))
        if (pred(x)) ++n;
    return n;
}

// Number of homomorphisms M -> N between finite modules, by testing every
// assignment of images to generators.
inline std::size_t count_homs(const Module& M, const Module& N) {
    auto targets = elements(N);
    std::size_t total = 1;
    for (std::size_t j = 0; j < M.rank(); ++j) {
        std::size_t ok = 0;
        for (const auto& y : targets) {
            Vector z = y;
            for (auto& c : z) c *= M.orders[j];
            if (N.is_zero_element(z)) ++ok;
        }
        total *= ok;
    }
    return total;
}

// Number of elements of M (x) N for finite cyclic summands via the presentation
// of the tensor product as a quotient of Z^(m*n).
inline Int tensor_order(const Module& M, const Module& N) {
    const std::size_t m = M.rank(), n = N.rank();
    Matrix R(m * n, 2 * m * n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R(i * n + j, c++) = M.orders[i];
            R(i * n + j, c++) = N.orders[j];
        }
    return Module::from_presentation(M.ring, R).size();
}

// Determinantal divisors: the gcd of all k x k minors, for small matrices.
inline Int determinant(const Matrix& A) {
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    if (n == 1) return A(0, 0);
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (A(0, c) == 0) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = A(i, j);
        Int term = A(0, c) * determinant(minor);
        det += (c % 2 == 0) ? term : Int(-term);
    }
    return det;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

inline Int determinantal_divisor(const Matrix& A, std::size_t k) {
    Int g = 0;
    subsets(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
        subsets(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
            Matrix m(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m(i, j) = A(rows[i], cols[j]);
            g = gcd(g, determinant(m));
        });
    });
    return g;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Matrix A(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A(i, j) = dist(rng);
    return A;
}

// A random module given directly by cyclic orders.
inline Module random_module(std::mt19937_64& rng, const RingSpec& ring, std::size_t max_rank = 3, long max_order = 12) {
    std::uniform_int_distribution<std::size_t> rank_dist(0, max_rank);
    std::size_t r = rank_dist(rng);
    Vector orders;
    if (ring.is_integers()) {
        std::uniform_int_distribution<long> d(0, max_order);
        for (std::size_t i = 0; i < r; ++i) orders.push_back(Int(d(rng)));
    } else {
        Vector divs;
        for (Int d = 1; d <= ring.modulus; ++d)
            if (divides(d, ring.modulus)) divs.push_back(d);
        std::uniform_int_distribution<std::size_t> d(0, divs.size() - 1);
        for (std::size_t i = 0; i < r; ++i) orders.push_back(divs[d(rng)]);
    }
    return Module(ring, orders);
}

inline Module random_finite_module(std::mt19937_64& rng, const RingSpec& ring, std::size_t max_rank = 3,
                                   long max_order = 12) {
    Module M = random_module(rng, ring, max_rank, max_order);
    for (auto& d : M.orders)
        if (d == 0) d = 1;
    return M;
}

inline Morphism random_morphism(std::mt19937_64& rng, const Module& M, const Module& N) {
    HomModule H(M, N);
    Vector c(H.module().rank());
    std::uniform_int_distribution<long> d(-20, 20);
    for (auto& x : c) x = d(rng);
    return H.as_morphism(c);
}

}  // namespace redcor::oracle
