#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redcor/errors.hpp"
#include "redcor/ring.hpp"

#include <random>

using namespace redcor;

namespace {
const RingSpec ZZ = RingSpec::integers();
RingSpec zmod(long n) { return RingSpec::integers_mod(Int(n)); }

// Euclid, written out independently of gmp.
long euclid(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

TEST_CASE("ideal powers") {
    CHECK(ideal_equal(ideal_power(Ideal(ZZ, {2}), 3), Ideal(ZZ, {8})));
    CHECK(ideal_equal(ideal_power(Ideal(zmod(6), {3}), 2), Ideal(zmod(6), {3})));
    Ideal p = ideal_power(Ideal(ZZ, {2, 3}), 2);
    CHECK(p.generators().size() == 3);
    CHECK(euclid(euclid(4, 6), 9) == 1);
    CHECK(ideal_equal(p, Ideal(ZZ, {1})));
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(Ideal(ZZ, {2, 4}), Ideal(ZZ, {2})));
    CHECK(ideal_equal(Ideal(zmod(6), {3}), Ideal(zmod(6), {9})));
    CHECK_FALSE(ideal_equal(Ideal(ZZ, {2}), Ideal(ZZ, {3})));
    CHECK_THROWS_AS(ideal_equal(Ideal(ZZ, {2}), Ideal(zmod(4), {2})), MixedRings);
}

TEST_CASE("idempotent ideals") {
    CHECK(ideal_is_idempotent(Ideal(zmod(6), {3})));
    CHECK_FALSE(ideal_is_idempotent(Ideal(ZZ, {2})));
    CHECK(ideal_is_idempotent(Ideal(ZZ, {1})));
    CHECK(ideal_is_idempotent(Ideal(ZZ, {0})));
}

TEST_CASE("power chain stabilization") {
    CHECK(ideal_power_stabilization(Ideal(zmod(8), {2}), 10) == 3u);
    CHECK_FALSE(ideal_power_stabilization(Ideal(ZZ, {2}), 10).has_value());
    CHECK(ideal_power_stabilization(Ideal(zmod(6), {3}), 10) == 1u);
}

TEST_CASE("ring validation") {
    CHECK_THROWS(RingSpec::integers_mod(1));
    CHECK_THROWS(Ideal(ZZ, {}));
    CHECK(Ideal(zmod(6), {-1}).generators()[0] == 5);
    CHECK(zmod(30).squarefree_modulus());
    CHECK_FALSE(zmod(12).squarefree_modulus());
}

TEST_CASE("ideal arithmetic properties") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        bool mod = rng() % 2;
        RingSpec R = mod ? zmod(2 + static_cast<long>(rng() % 63)) : ZZ;
        Vector gens;
        std::size_t ng = 1 + rng() % 2;
        for (std::size_t i = 0; i < ng; ++i) gens.push_back(Int(static_cast<long>(rng() % 17) - 8));
        Ideal a(R, gens);
        unsigned k = 1 + rng() % 3, j = 1 + rng() % 3;
        // a^k a^j = a^(k+j): compare principal generators of the product ideal
        Int prod = R.normalize(principal_power(a, k) * principal_power(a, j));
        CHECK(ideal_equal(Ideal(R, {prod}), ideal_power(a, k + j)));
        if (mod) CHECK(ideal_power_stabilization(a, static_cast<unsigned>(R.modulus.get_ui())).has_value());
        if (ideal_is_idempotent(a))
            for (unsigned e = 1; e <= 4; ++e) CHECK(ideal_equal(ideal_power(a, e), a));
    }
}
