#pragma once

#include "redcor/complex.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace redcor {

// Deterministic random source; draws avoid std distributions, whose output
// differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, const std::string& stream, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    // Uniform in [lo, hi].
    long uniform(long lo, long hi);
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    bool chance(double p);

private:
    std::mt19937_64 engine_;
};

struct GenConfig {
    enum class RingPolicy { Integers, IntegersMod, Mixed };
    std::uint64_t seed = 20240611;
    RingPolicy ring_policy = RingPolicy::Mixed;
    long max_modulus = 64;  // IntegersMod n draws 2 <= n <= max_modulus unless `modulus` is set
    long modulus = 0;
    std::size_t max_generators = 4;
    std::size_t max_relations = 4;
    long entry_bound = 16;
    int max_window = 4;
    std::size_t max_ideal_generators = 2;
    long ideal_entry_bound = 8;
    int max_attempts = 256;
};

enum class TermFlag { None, Reduced, Coreduced, Killed };

RingSpec gen_ring(const GenConfig& cfg, Rng& rng);
Ideal gen_ideal(const RingSpec& ring, const GenConfig& cfg, Rng& rng);
// Random presentation within the configured bounds, canonicalized.
Module gen_module(const RingSpec& ring, const GenConfig& cfg, Rng& rng);
// A term satisfying the flag for the ideal; throws GenerationExhausted.
Module gen_term(const RingSpec& ring, const Ideal& a, TermFlag flag, const GenConfig& cfg, Rng& rng);
Morphism gen_morphism(const Module& M, const Module& N, Rng& rng, long coefficient_bound = 3);
// Random bounded complex whose terms satisfy the flag; window length at most cfg.max_window.
Complex gen_complex(const RingSpec& ring, const Ideal& a, TermFlag flag, const GenConfig& cfg, Rng& rng);
Complex gen_complex_on(const std::vector<Module>& terms, int lo, Rng& rng);
// Random chain map M -> N: a null-homotopic map d h + h d, plus a multiple of the identity when M = N.
ChainMap gen_chain_map(const Complex& M, const Complex& N, Rng& rng);

// Degreewise split short exact sequence A -> B -> C with B = A + C as modules
// and the differential of B twisted by d_A s - s d_C for a random s.
struct ShortExact {
    ChainMap inclusion;   // A -> B
    ChainMap projection;  // B -> C
};
ShortExact gen_short_exact(const Complex& A, const Complex& C, Rng& rng);

}  // namespace redcor
