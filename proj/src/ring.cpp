#include "redcor/ring.hpp"

#include "redcor/errors.hpp"

#include <algorithm>
#include <functional>

namespace redcor {

RingSpec RingSpec::integers_mod(const Int& n) {
    if (n < 2) throw Error("modulus must be at least 2");
    RingSpec r;
    r.kind = Kind::IntegersMod;
    r.modulus = n;
    return r;
}

Int RingSpec::normalize(const Int& x) const { return is_integers() ? x : reduce_mod(x, modulus); }

bool RingSpec::squarefree_modulus() const {
    if (is_integers()) return false;
    Int n = modulus;
    for (Int p = 2; p * p <= n; ++p) {
        if (divides(p, n)) {
            n /= p;
            if (divides(p, n)) return false;
        }
    }
    return true;
}

std::string RingSpec::to_string() const { return is_integers() ? "Z" : "Z/" + modulus.get_str(); }

void require_same_ring(const RingSpec& a, const RingSpec& b) {
    if (!(a == b)) throw MixedRings();
}

Ideal::Ideal(RingSpec ring, Vector generators) : ring_(std::move(ring)), generators_(std::move(generators)) {
    if (generators_.empty()) throw Error("an ideal needs at least one generator");
    for (auto& g : generators_) g = ring_.normalize(g);
}

Int Ideal::principal() const {
    Int g = ring_.is_integers() ? Int(0) : ring_.modulus;
    for (const auto& x : generators_) g = gcd(g, x);
    return g;
}

bool Ideal::contains(const Int& x) const { return divides(principal(), ring_.normalize(x)); }

bool Ideal::is_unit() const { return principal() == 1; }

bool Ideal::is_zero() const {
    Int g = principal();
    return ring_.is_integers() ? g == 0 : g == ring_.modulus;
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) s += ", ";
        s += generators_[i].get_str();
    }
    return s + ") in " + ring_.to_string();
}

Ideal ideal_power(const Ideal& a, unsigned k) {
    if (k == 0) throw Error("ideal_power needs k >= 1");
    const auto& gens = a.generators();
    const RingSpec& R = a.ring();
    // all degree-k monomials; collapsed to the principal generator when large
    constexpr std::size_t kMaxMonomials = 64;
    Vector out;
    bool too_many = false;
    std::function<void(std::size_t, unsigned, Int)> rec = [&](std::size_t start, unsigned left, Int acc) {
        if (too_many) return;
        if (left == 0) {
            Int v = R.normalize(acc);
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            if (out.size() > kMaxMonomials) too_many = true;
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) rec(i, left - 1, acc * gens[i]);
    };
    rec(0, k, Int(1));
    if (too_many) return Ideal(R, {principal_power(a, k)});
    return Ideal(R, out);
}

Int principal_power(const Ideal& a, unsigned k) {
    Int p = pow(a.principal(), k);
    return a.ring().is_integers() ? p : gcd(p, a.ring().modulus);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

bool ideal_is_idempotent(const Ideal& a) { return ideal_equal(a, Ideal(a.ring(), {principal_power(a, 2)})); }

std::optional<unsigned> ideal_power_stabilization(const Ideal& a, unsigned k_max) {
    Int prev = principal_power(a, 1);
    for (unsigned k = 1; k <= k_max; ++k) {
        Int next = principal_power(a, k + 1);
        if (next == prev) return k;
        prev = next;
    }
    return std::nullopt;
}

}  // namespace redcor
