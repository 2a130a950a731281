#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace redcor {

using Int = mpz_class;
using Vector = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Least nonnegative residue; m == 0 leaves the value untouched.
inline Int reduce_mod(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (m < 0 && r != 0) r -= m;
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace redcor
