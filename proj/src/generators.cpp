#include "redcor/generators.hpp"

#include "redcor/errors.hpp"

#include <functional>

namespace redcor {

Rng::Rng(std::uint64_t seed, const std::string& stream, std::uint64_t index) {
    // FNV-1a over the stream name, mixed with seed and index through splitmix64
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : stream) h = (h ^ c) * 1099511628211ull;
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    engine_.seed(mix(mix(seed) ^ h) ^ mix(index + 0x632be59bd9b4e019ull));
}

long Rng::uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

bool Rng::chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

RingSpec gen_ring(const GenConfig& cfg, Rng& rng) {
    bool mod = cfg.ring_policy == GenConfig::RingPolicy::IntegersMod ||
               (cfg.ring_policy == GenConfig::RingPolicy::Mixed && rng.chance(0.5));
    if (!mod) return RingSpec::integers();
    long n = cfg.modulus >= 2 ? cfg.modulus : rng.uniform(2, cfg.max_modulus);
    return RingSpec::integers_mod(Int(n));
}

Ideal gen_ideal(const RingSpec& ring, const GenConfig& cfg, Rng& rng) {
    std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(cfg.max_ideal_generators)));
    Vector gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(Int(rng.uniform(0, cfg.ideal_entry_bound)));
    return Ideal(ring, gens);
}

Module gen_module(const RingSpec& ring, const GenConfig& cfg, Rng& rng) {
    std::size_t g = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(cfg.max_generators)));
    std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cfg.max_relations)));
    Matrix R(g, r);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < r; ++j)
            R(i, j) = rng.chance(0.4) ? Int(0) : Int(rng.uniform(-cfg.entry_bound, cfg.entry_bound));
    return Module::from_presentation(ring, R);
}

namespace {

// The summand of M on which the principal generator of a acts invertibly.
Module coprime_part(const Module& M, const Int& g) {
    Vector orders;
    for (const auto& d : M.orders) {
        if (d == 0) continue;
        Int q = d;
        for (Int c = gcd(q, g); c > 1; c = gcd(q, g)) q /= c;
        if (q > 1) orders.push_back(q);
    }
    return Module(M.ring, orders);
}

bool satisfies(const Module& M, const Ideal& a, TermFlag flag) {
    switch (flag) {
        case TermFlag::None: return true;
        case TermFlag::Reduced: return is_reduced_module(M, a);
        case TermFlag::Coreduced: return is_coreduced_module(M, a);
        case TermFlag::Killed: return annihilated_by(M, a);
    }
    return false;
}

}  // namespace

Module gen_term(const RingSpec& ring, const Ideal& a, TermFlag flag, const GenConfig& cfg, Rng& rng) {
    const Int g = a.principal();
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        Module M = gen_module(ring, cfg, rng);
        if (flag != TermFlag::None) {
            switch (rng.uniform(0, 3)) {
                case 0: break;
                case 1: M = Quotient(M, Matrix::identity(M.rank()).scaled(g)).module(); break;
                case 2: M = Module::free(ring, static_cast<std::size_t>(rng.uniform(1, 2))); break;
                default: M = direct_sum(coprime_part(M, g), Quotient(M, Matrix::identity(M.rank()).scaled(g)).module());
            }
            M = M.canonical();
        }
        if (satisfies(M, a, flag)) return M;
    }
    throw GenerationExhausted("no term satisfying the requested flag after " + std::to_string(cfg.max_attempts) +
                              " attempts");
}

Morphism gen_morphism(const Module& M, const Module& N, Rng& rng, long coefficient_bound) {
    HomModule H(M, N);
    Vector c(H.module().rank());
    for (auto& x : c) x = rng.uniform(-coefficient_bound, coefficient_bound);
    return H.as_morphism(c);
}

Complex gen_complex_on(const std::vector<Module>& terms, int lo, Rng& rng) {
    const RingSpec& ring = terms.front().ring;
    std::vector<Matrix> diffs;
    Matrix prev(terms.front().rank(), 0);
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        Quotient Q(terms[k], prev);
        Matrix d(terms[k + 1].rank(), terms[k].rank());
        if (!rng.chance(0.15)) d = gen_morphism(Q.module(), terms[k + 1], rng).matrix() * Q.projection().matrix();
        diffs.push_back(d);
        prev = d;
    }
    return Complex(ring, lo, terms, diffs);
}

Complex gen_complex(const RingSpec& ring, const Ideal& a, TermFlag flag, const GenConfig& cfg, Rng& rng) {
    int len = static_cast<int>(rng.uniform(1, cfg.max_window));
    int lo = static_cast<int>(rng.uniform(-2, 1));
    std::vector<Module> terms;
    for (int k = 0; k < len; ++k) terms.push_back(gen_term(ring, a, flag, cfg, rng));
    return gen_complex_on(terms, lo, rng);
}

ChainMap gen_chain_map(const Complex& M, const Complex& N, Rng& rng) {
    int lo = std::min(M.lo(), N.lo()) - 1, hi = std::max(M.hi(), N.hi()) + 1;
    std::map<int, Matrix> h;
    for (int n = lo; n <= hi; ++n) h[n] = gen_morphism(M.term(n), N.term(n - 1), rng, 2).matrix();
    auto H = [&](int n) {
        auto it = h.find(n);
        return it == h.end() ? Matrix(N.term(n - 1).rank(), M.term(n).rank()) : it->second;
    };
    const bool same = M == N;
    const long c = same ? rng.uniform(-2, 2) : 0;
    std::map<int, Matrix> comps;
    for (int n = std::min(M.lo(), N.lo()); n <= std::max(M.hi(), N.hi()); ++n) {
        Matrix f = N.diff_matrix(n - 1) * H(n) + H(n + 1) * M.diff_matrix(n);
        if (same) f = f + Matrix::identity(M.term(n).rank()).scaled(c);
        comps[n] = f;
    }
    return ChainMap(M, N, comps);
}

ShortExact gen_short_exact(const Complex& A, const Complex& C, Rng& rng) {
    int lo = std::min(A.lo(), C.lo()), hi = std::max(A.hi(), C.hi());
    std::map<int, Matrix> s;
    for (int n = lo; n <= hi; ++n) s[n] = gen_morphism(C.term(n), A.term(n), rng, 2).matrix();
    auto S = [&](int n) {
        auto it = s.find(n);
        return it == s.end() ? Matrix(A.term(n).rank(), C.term(n).rank()) : it->second;
    };
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        terms.push_back(direct_sum(A.term(n), C.term(n)));
        if (n == hi) break;
        const std::size_t a0 = A.term(n).rank(), a1 = A.term(n + 1).rank();
        const std::size_t c0 = C.term(n).rank(), c1 = C.term(n + 1).rank();
        Matrix twist = A.diff_matrix(n) * S(n) + (-(S(n + 1) * C.diff_matrix(n)));
        Matrix d(a1 + c1, a0 + c0);
        d.place(0, 0, A.diff_matrix(n));
        d.place(0, a0, twist);
        d.place(a1, a0, C.diff_matrix(n));
        diffs.push_back(d);
    }
    Complex B(A.ring(), lo, terms, diffs);
    std::map<int, Matrix> inc, proj;
    for (int n = lo; n <= hi; ++n) {
        const std::size_t a = A.term(n).rank(), c = C.term(n).rank();
        Matrix i(a + c, a), p(c, a + c);
        i.place(0, 0, Matrix::identity(a));
        p.place(0, a, Matrix::identity(c));
        inc[n] = i;
        proj[n] = p;
    }
    return {ChainMap(A, B, inc), ChainMap(B, C, proj)};
}

}  // namespace redcor
