#pragma once

#include "redcor/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redcor {

struct RingSpec {
    enum class Kind { Integers, IntegersMod };
    Kind kind = Kind::Integers;
    Int modulus = 0;  // meaningful only for IntegersMod

    static RingSpec integers() { return {}; }
    static RingSpec integers_mod(const Int& n);

    bool is_integers() const { return kind == Kind::Integers; }
    // Reduces an element to its canonical representative.
    Int normalize(const Int& x) const;
    // The order a free cyclic summand has: 0 over Z, n over Z/n.
    Int free_order() const { return is_integers() ? Int(0) : modulus; }
    bool squarefree_modulus() const;

    std::string to_string() const;
    bool operator==(const RingSpec& o) const { return kind == o.kind && modulus == o.modulus; }
};

void require_same_ring(const RingSpec& a, const RingSpec& b);

class Ideal {
public:
    Ideal(RingSpec ring, Vector generators);

    const RingSpec& ring() const { return ring_; }
    const Vector& generators() const { return generators_; }

    // Single generator of the (principal) ideal: a nonnegative integer over Z,
    // a divisor of n over Z/n (n itself standing for the zero ideal).
    Int principal() const;
    bool contains(const Int& x) const;
    bool is_unit() const;
    bool is_zero() const;

    std::string to_string() const;

private:
    RingSpec ring_;
    Vector generators_;
};

Ideal ideal_power(const Ideal& a, unsigned k);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_is_idempotent(const Ideal& a);
// Smallest k0 <= k_max with a^k0 = a^(k0+1), if any.
std::optional<unsigned> ideal_power_stabilization(const Ideal& a, unsigned k_max);

// Principal generator of a^k, normalized as in Ideal::principal.
Int principal_power(const Ideal& a, unsigned k);

}  // namespace redcor
