#include "redcor/suites.hpp"

#include "redcor/errors.hpp"
#include "redcor/generators.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace redcor {

std::uint64_t default_seed() {
    if (const char* s = std::getenv("REDCOR_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && end != s) return v;
    }
    return kDefaultSeed;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "fail";
}

int SuiteReport::exit_code() const {
    if (!failures.empty()) return 1;
    if (passes == 0 && cases > 0) return 3;
    return 0;
}

std::string SuiteReport::summary() const {
    std::ostringstream os;
    os << suite << ": " << cases << " cases, " << passes << " passed, " << failures.size() << " failed, "
       << skipped.size() << " skipped";
    return os.str();
}

namespace {

std::string trimmed(std::string d) {
    while (!d.empty() && std::isspace(static_cast<unsigned char>(d.back()))) d.pop_back();
    return d;
}

Outcome pass(std::string d = {}) { return {Status::Pass, trimmed(std::move(d))}; }
Outcome fail(std::string d) { return {Status::Fail, trimmed(std::move(d))}; }
Outcome skip(std::string d) { return {Status::Skip, trimmed(std::move(d))}; }

using Make = std::function<Case(Rng&, const GenConfig&, std::size_t)>;
using Check = std::function<Outcome(const Case&, const SuiteConfig&)>;

struct Suite {
    SuiteInfo info;
    GenConfig::RingPolicy policy;
    bool small;  // smaller instances for the derived computations
    Make make;
    Check check;
};

const Complex& cx(const Case& c, const std::string& name) {
    auto it = c.complexes.find(name);
    if (it == c.complexes.end()) throw PreconditionFailed("case has no complex '" + name + "'");
    return it->second;
}

const Module& md(const Case& c, const std::string& name) {
    auto it = c.modules.find(name);
    if (it == c.modules.end()) throw PreconditionFailed("case has no module '" + name + "'");
    return it->second;
}

const ChainMap& mp(const Case& c, const std::string& name) {
    auto it = c.maps.find(name);
    if (it == c.maps.end()) throw PreconditionFailed("case has no map '" + name + "'");
    return it->second;
}

const Ideal& ideal(const Case& c) {
    if (!c.ideal) throw PreconditionFailed("case has no ideal");
    return *c.ideal;
}

Case start(Rng& rng, const GenConfig& g) {
    Case c;
    c.ring = gen_ring(g, rng);
    c.ideal = gen_ideal(c.ring, g, rng);
    return c;
}

Complex conc(const Module& M) { return Complex::concentrated(M); }

ChainMap as_chain_map(const Morphism& f) { return ChainMap(conc(f.source()), conc(f.target()), {{0, f.matrix()}}); }

DerivedOptions derived_options(const SuiteConfig& cfg) {
    DerivedOptions o;
    o.k_max = cfg.k_max;
    o.window = cfg.window;
    return o;
}

bool dd_zero(const Complex& C) {
    for (int n = C.lo(); n < C.hi(); ++n)
        if (!compose(C.diff(n + 1), C.diff(n)).is_zero()) return false;
    return true;
}

// A complex of finite modules; Z/exponent then serves as the dualizing module over Z.
Complex finite_complex(const RingSpec& ring, const GenConfig& g, Rng& rng) {
    const int len = static_cast<int>(rng.uniform(1, std::max(1, g.max_window)));
    std::vector<Module> terms;
    for (int k = 0; k < len; ++k) {
        int attempt = 0;
        Module M = gen_module(ring, g, rng);
        while (!M.is_finite()) {
            if (++attempt > g.max_attempts) throw GenerationExhausted("no finite module drawn");
            M = gen_module(ring, g, rng);
        }
        terms.push_back(M);
    }
    return gen_complex_on(terms, static_cast<int>(rng.uniform(-1, 1)), rng);
}

Int exponent_of(const Complex& C) {
    Int e = 1;
    for (int n = C.lo(); n <= C.hi(); ++n)
        if (!C.term(n).is_zero()) e = lcm(e, C.term(n).exponent());
    return e;
}

std::string describe_failures(const std::vector<std::string>& bad) {
    std::string s;
    for (const auto& b : bad) s += (s.empty() ? "" : "; ") + b;
    return s;
}

Outcome from_failures(const std::vector<std::string>& bad) {
    return bad.empty() ? pass() : fail(describe_failures(bad));
}

// Coordinates of every element of a finite module.
std::vector<Vector> all_elements(const Module& M) {
    std::vector<Vector> out{Vector(M.rank())};
    for (std::size_t i = 0; i < M.rank(); ++i) {
        std::vector<Vector> next;
        for (const auto& v : out)
            for (Int x = 0; x < M.orders[i]; ++x) {
                Vector w = v;
                w[i] = x;
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

std::size_t count_killed(const Module& M, const Int& c) {
    std::size_t k = 0;
    for (auto x : all_elements(M)) {
        for (auto& e : x) e *= c;
        if (M.is_zero_element(x)) ++k;
    }
    return k;
}

std::size_t count_multiples(const Module& M, const Int& c) {
    std::set<Vector> seen;
    for (auto x : all_elements(M)) {
        for (auto& e : x) e *= c;
        seen.insert(M.normalize(x));
    }
    return seen.size();
}

constexpr long kBruteForceLimit = 4096;

bool brute_force_size(const Module& M) { return M.is_finite() && M.size() <= kBruteForceLimit; }

// All complexes over Z/6 in degrees 0..1 whose terms have at most two
// generators of order dividing 6, up to isomorphism of the terms.
const std::vector<Complex>& z6_enumeration() {
    static const std::vector<Complex> all = [] {
        const RingSpec R = RingSpec::integers_mod(Int(6));
        const std::vector<std::vector<long>> invariants = {{},     {2},    {3},    {6},    {2, 2},
                                                           {3, 3}, {6, 6}, {2, 6}, {3, 6}};
        std::vector<Module> mods;
        for (const auto& inv : invariants) {
            Invariants i;
            for (long d : inv) i.torsion.push_back(Int(d));
            mods.push_back(Module::from_invariants(R, i));
        }
        std::vector<Complex> out;
        for (const auto& M : mods) out.push_back(Complex::concentrated(M));
        for (const auto& S : mods)
            for (const auto& T : mods) {
                HomModule H(S, T);
                for (const auto& coords : all_elements(H.module()))
                    out.push_back(Complex(R, 0, {S, T}, {H.evaluate(coords)}));
            }
        return out;
    }();
    return all;
}

Case z6_case(std::size_t index) {
    const auto& all = z6_enumeration();
    Case c;
    c.ring = RingSpec::integers_mod(Int(6));
    c.ideal = Ideal(c.ring, {Int(3)});
    c.complexes["M"] = all.at(index % all.size());
    return c;
}

Case quasi_iso_case() {
    Case c;
    c.ring = RingSpec::integers();
    c.ideal = Ideal(c.ring, {Int(2)});
    const Module Z = Module::cyclic(c.ring, 0);
    Complex M = Complex::two_term(Morphism::scalar(Z, Int(4)), -1);
    Complex N = Complex::concentrated(Module::cyclic(c.ring, Int(4)));
    c.complexes["M"] = M;
    c.complexes["N"] = N;
    c.maps["f"] = ChainMap(M, N, {{0, Matrix::identity(1)}});
    return c;
}

// (ring, sequence, largest allowed lag) for the fixed weak proregularity instances.
struct WprInstance {
    RingSpec ring;
    Vector seq;
    unsigned lag;
};

std::vector<WprInstance> wpr_instances() {
    const RingSpec Z = RingSpec::integers();
    return {{Z, {Int(2)}, 0},
            {RingSpec::integers_mod(Int(4)), {Int(2)}, 2},
            {RingSpec::integers_mod(Int(6)), {Int(3)}, 1},
            {Z, {Int(2), Int(3)}, 0}};
}

std::vector<Suite> build_suites() {
    using P = GenConfig::RingPolicy;
    std::vector<Suite> s;

    s.push_back({{"hom-tensor", "Hom(A/a, -) and A/a (x) - computed degreewise", {"hom-tensor-identities"}, 200},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Complex& M = cx(c, "M");
                     const Complex Q = conc(quotient_ring(ideal(c)));
                     std::vector<std::string> bad;
                     if (!degreewise_isomorphic(tensor_complex(Q, M), tensor_quotient_degreewise(M, ideal(c))))
                         bad.push_back("A/a (x) M differs from the degreewise tensor");
                     if (!degreewise_isomorphic(hom_complex(Q, M), hom_quotient_degreewise(M, ideal(c))))
                         bad.push_back("Hom(A/a, M) differs from the degreewise Hom");
                     return from_failures(bad);
                 }});

    s.push_back({{"reduced-char",
                  "reduced iff a kills the torsion part",
                  {"reduced-coreduced-definitions", "reduced-characterization"},
                  500},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.modules["M"] = gen_module(c.ring, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Module& M = md(c, "M");
                     const Ideal& a = ideal(c);
                     const bool reduced = is_reduced_module(M, a);
                     std::vector<std::string> bad;
                     if (reduced != annihilated_by(gamma_module(M, a, cfg.k_max).sub.module(), a))
                         bad.push_back("(0:a) = (0:a^2) disagrees with a Gamma(M) = 0");
                     if (reduced != is_reduced_complex(conc(M), a)) bad.push_back("module and complex predicates differ");
                     if (brute_force_size(M)) {
                         const Int g = a.principal();
                         if (reduced != (count_killed(M, g) == count_killed(M, g * g)))
                             bad.push_back("elementwise annihilators disagree with the predicate");
                         Int big = 1;
                         for (int k = 0; k < 16; ++k) big *= g;
                         if (reduced != (count_killed(M, big) == count_killed(M, g)))
                             bad.push_back("elementwise torsion part disagrees with the predicate");
                     }
                     return from_failures(bad);
                 }});

    s.push_back({{"coreduced-char", "coreduced iff a kills the completion", {"coreduced-characterization"}, 500},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.modules["M"] = gen_module(c.ring, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Module& M = md(c, "M");
                     const Ideal& a = ideal(c);
                     const bool coreduced = is_coreduced_module(M, a);
                     std::vector<std::string> bad;
                     if (brute_force_size(M)) {
                         const Int g = a.principal();
                         if (coreduced != (count_multiples(M, g) == count_multiples(M, g * g)))
                             bad.push_back("elementwise aM = a^2 M disagrees with the predicate");
                     }
                     if (!lambda_stabilization(M, a, cfg.k_max)) {
                         if (!bad.empty()) return fail(describe_failures(bad));
                         return skip("completion tower did not settle");
                     }
                     const Module L = lambda_module(M, a, cfg.k_max).quotient.module();
                     if (coreduced != annihilated_by(L, a)) bad.push_back("aM = a^2 M disagrees with a Lambda(M) = 0");
                     if (coreduced && !isomorphic(L, tensor_module(quotient_ring(a), M).module()))
                         bad.push_back("Lambda(M) differs from A/a (x) M");
                     return from_failures(bad);
                 }});

    s.push_back({{"idempotent-ideal", "idempotent ideals: every complex is reduced and coreduced",
                  {"idempotent-ideal-remark"}, 100},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c;
                     c.ring = gen_ring(g, rng);
                     if (c.ring.is_integers()) {
                         c.ideal = Ideal(c.ring, {Int(rng.chance(0.5) ? 0 : 1)});
                     } else {
                         std::vector<Int> units;
                         for (Int u = 1; u <= c.ring.modulus; ++u)
                             if (c.ring.modulus % u == 0 && gcd(u, c.ring.modulus / u) == 1) units.push_back(u);
                         c.ideal = Ideal(c.ring, {units[rng.index(units.size())]});
                     }
                     c.complexes["M"] = gen_complex(c.ring, *c.ideal, TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Ideal& a = ideal(c);
                     if (!ideal_is_idempotent(a)) return fail("the drawn ideal is not idempotent");
                     std::vector<std::string> bad;
                     if (!is_reduced_complex(cx(c, "M"), a)) bad.push_back("not reduced");
                     if (!is_coreduced_complex(cx(c, "M"), a)) bad.push_back("not coreduced");
                     return from_failures(bad);
                 }});

    s.push_back({{"completion", "M coreduced iff its completion is; Hom into injective complexes",
                  {"completion-of-coreduced", "completion-of-coreduced-corollary"}, 150},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     if (!c.ring.is_integers()) {
                         std::vector<Module> terms;
                         const int len = static_cast<int>(rng.uniform(1, 2));
                         for (int k = 0; k < len; ++k)
                             terms.push_back(Module::free(c.ring, static_cast<std::size_t>(rng.uniform(1, 2))));
                         c.complexes["J"] = gen_complex_on(terms, static_cast<int>(rng.uniform(-1, 1)), rng);
                     }
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Complex& M = cx(c, "M");
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     if (auto J = c.complexes.find("J"); J != c.complexes.end()) {
                         const Complex gamma_M = gamma_complex(M, a, cfg.k_max).complex;
                         if (is_coreduced_complex(hom_complex(M, J->second), a) !=
                             is_coreduced_complex(hom_complex(gamma_M, J->second), a))
                             bad.push_back("Hom(M, J) and Hom(Gamma M, J) differ in coreducedness");
                         const Complex gamma_A = gamma_complex(conc(Module::free(c.ring, 1)), a, cfg.k_max).complex;
                         if (is_coreduced_complex(J->second, a) != is_coreduced_complex(hom_complex(gamma_A, J->second), a))
                             bad.push_back("J and Hom(Gamma A, J) differ in coreducedness");
                     }
                     try {
                         LambdaComplex L = lambda_complex(M, a, cfg.k_max);
                         if (is_coreduced_complex(M, a) != is_coreduced_complex(L.complex, a))
                             bad.push_back("M and Lambda(M) differ in coreducedness");
                     } catch (const NotStabilized&) {
                         if (bad.empty()) return skip("completion tower did not settle");
                     }
                     return from_failures(bad);
                 }});

    s.push_back({{"hom-tensor-modules", "Hom into reduced, out of coreduced, and tensor with coreduced modules",
                  {"hom-reduced-coreduced-lemma", "tensor-coreduced-lemma"}, 200},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.modules["X"] = gen_module(c.ring, g, rng);
                     c.modules["M"] = gen_term(c.ring, ideal(c), TermFlag::Reduced, g, rng);
                     c.modules["N"] = gen_term(c.ring, ideal(c), TermFlag::Coreduced, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Module &X = md(c, "X"), &M = md(c, "M"), &N = md(c, "N");
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     if (!is_reduced_module(M, a) || !is_coreduced_module(N, a)) return fail("generated terms lack their flags");
                     if (!is_reduced_module(hom_module(X, M).module(), a)) bad.push_back("Hom(X, M) not reduced");
                     if (!is_coreduced_module(hom_module(N, X).module(), a)) bad.push_back("Hom(N, X) not coreduced");
                     if (!is_coreduced_module(tensor_module(N, X).module(), a)) bad.push_back("N (x) X not coreduced");
                     if (!is_coreduced_module(tensor_module(X, N).module(), a)) bad.push_back("X (x) N not coreduced");
                     return from_failures(bad);
                 }});

    s.push_back({{"hom-tensor-complexes", "Hom and tensor complexes preserve the flags",
                  {"hom-complex-proposition", "tensor-coreduced-proposition"}, 150},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["X"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::Reduced, g, rng);
                     c.complexes["N"] = gen_complex(c.ring, ideal(c), TermFlag::Coreduced, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Complex &X = cx(c, "X"), &M = cx(c, "M"), &N = cx(c, "N");
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     if (!is_reduced_complex(hom_complex(X, M), a)) bad.push_back("Hom(X, M) not reduced");
                     if (!is_coreduced_complex(hom_complex(N, X), a)) bad.push_back("Hom(N, X) not coreduced");
                     if (!is_coreduced_complex(tensor_complex(N, X), a)) bad.push_back("N (x) X not coreduced");
                     if (!is_coreduced_complex(tensor_complex(X, N), a)) bad.push_back("X (x) N not coreduced");
                     return from_failures(bad);
                 }});

    s.push_back({{"matlis", "duality into an injective cogenerator exchanges the flags",
                  {"cogenerator-duality", "matlis-dual-corollary"}, 200},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = finite_complex(c.ring, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Complex& M = cx(c, "M");
                     const Ideal& a = ideal(c);
                     const Module E = c.ring.is_integers() ? matlis_coefficient(c.ring, exponent_of(M))
                                                           : Module::free(c.ring, 1);
                     const Complex H = hom_complex(M, conc(E));
                     const Complex D = matlis_dual(M);
                     const bool red = is_reduced_complex(M, a), cor = is_coreduced_complex(M, a);
                     std::vector<std::string> bad;
                     if (cor != is_reduced_complex(H, a)) bad.push_back("M coreduced differs from Hom(M, E) reduced");
                     if (red && !is_coreduced_complex(H, a)) bad.push_back("M reduced but Hom(M, E) not coreduced");
                     if (cor != is_reduced_complex(D, a)) bad.push_back("M coreduced differs from its dual reduced");
                     if (red && !is_coreduced_complex(D, a)) bad.push_back("M reduced but its dual not coreduced");
                     return from_failures(bad);
                 }});

    s.push_back({{"closure", "sums, submodules and quotients", {"closure-properties"}, 200},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Ideal& a = ideal(c);
                     c.complexes["M1"] = gen_complex(c.ring, a, TermFlag::Reduced, g, rng);
                     c.complexes["M2"] = gen_complex(c.ring, a, TermFlag::Reduced, g, rng);
                     c.complexes["N1"] = gen_complex(c.ring, a, TermFlag::Coreduced, g, rng);
                     c.complexes["N2"] = gen_complex(c.ring, a, TermFlag::Coreduced, g, rng);
                     const Module X = gen_module(c.ring, g, rng);
                     const Module R = gen_term(c.ring, a, TermFlag::Reduced, g, rng);
                     const Module C = gen_term(c.ring, a, TermFlag::Coreduced, g, rng);
                     c.maps["into_reduced"] = as_chain_map(gen_morphism(X, R, rng));
                     c.maps["into_coreduced"] = as_chain_map(gen_morphism(X, C, rng));
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     if (!is_reduced_complex(direct_sum(cx(c, "M1"), cx(c, "M2")), a)) bad.push_back("sum of reduced");
                     if (!is_coreduced_complex(direct_sum(cx(c, "N1"), cx(c, "N2")), a)) bad.push_back("sum of coreduced");
                     if (!is_reduced_module(image(mp(c, "into_reduced").component(0)).module(), a))
                         bad.push_back("submodule of a reduced module");
                     if (!is_coreduced_module(cokernel(mp(c, "into_coreduced").component(0)).module(), a))
                         bad.push_back("quotient of a coreduced module");
                     return from_failures(bad);
                 }});

    s.push_back({{"sign-conventions", "d o d = 0 for Hom, tensor, cone, fiber, telescope and microscope",
                  {"cone-fiber-definition", "telescope-microscope-definition"}, 1000},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Complex M = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     c.complexes["M"] = M;
                     c.complexes["N"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     c.maps["f"] = gen_chain_map(M, M, rng);
                     for (int k = 1; k <= 2; ++k) {
                         c.maps["s" + std::to_string(k)] = gen_chain_map(M, M, rng);
                         c.maps["r" + std::to_string(k)] = gen_chain_map(M, M, rng);
                     }
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Complex &M = cx(c, "M"), &N = cx(c, "N");
                     const ChainMap& f = mp(c, "f");
                     DirectSystem D({M, M, M}, {mp(c, "s1"), mp(c, "s2")});
                     InverseSystem B({M, M, M}, {mp(c, "r1"), mp(c, "r2")});
                     std::vector<std::string> bad;
                     const std::pair<const char*, Complex> built[] = {
                         {"hom", hom_complex(M, N)}, {"tensor", tensor_complex(M, N)}, {"cone", cone(f)},
                         {"fiber", fiber(f)},       {"telescope", telescope(D)},     {"microscope", microscope(B)}};
                     for (const auto& [name, C] : built)
                         if (!dd_zero(C)) bad.push_back(std::string(name) + ": d o d != 0");
                     if (!is_acyclic(cone(ChainMap::identity(M)))) bad.push_back("cone of the identity not acyclic");
                     if (!is_acyclic(fiber(ChainMap::identity(M)))) bad.push_back("fiber of the identity not acyclic");
                     return from_failures(bad);
                 }});

    s.push_back({{"telescope-microscope", "telescopes of coreduced and microscopes of reduced systems",
                  {"telescope-microscope-preservation"}, 100},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Ideal& a = ideal(c);
                     for (int k = 1; k <= 3; ++k) {
                         c.complexes["D" + std::to_string(k)] = gen_complex(c.ring, a, TermFlag::Coreduced, g, rng);
                         c.complexes["B" + std::to_string(k)] = gen_complex(c.ring, a, TermFlag::Reduced, g, rng);
                     }
                     for (int k = 1; k <= 2; ++k) {
                         const std::string s = std::to_string(k), t = std::to_string(k + 1);
                         c.maps["s" + s] = gen_chain_map(c.complexes["D" + s], c.complexes["D" + t], rng);
                         c.maps["r" + s] = gen_chain_map(c.complexes["B" + t], c.complexes["B" + s], rng);
                     }
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Ideal& a = ideal(c);
                     DirectSystem D({cx(c, "D1"), cx(c, "D2"), cx(c, "D3")}, {mp(c, "s1"), mp(c, "s2")});
                     InverseSystem B({cx(c, "B1"), cx(c, "B2"), cx(c, "B3")}, {mp(c, "r1"), mp(c, "r2")});
                     std::vector<std::string> bad;
                     if (!is_coreduced_complex(telescope(D), a)) bad.push_back("telescope not coreduced");
                     if (!is_reduced_complex(microscope(B), a)) bad.push_back("microscope not reduced");
                     return from_failures(bad);
                 }});

    s.push_back({{"idempotence-c", "Hom(A/a, -) and A/a (x) - are idempotent", {"idempotence-lemma"}, 200},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const Complex& M = cx(c, "M");
                     const Complex Q = conc(quotient_ring(ideal(c)));
                     const Complex H = hom_complex(Q, M), T = tensor_complex(Q, M);
                     std::vector<std::string> bad;
                     if (!degreewise_isomorphic(hom_complex(Q, H), H)) bad.push_back("Hom(A/a, Hom(A/a, M))");
                     if (!degreewise_isomorphic(tensor_complex(Q, T), T)) bad.push_back("A/a (x) (A/a (x) M)");
                     if (!degreewise_isomorphic(tensor_complex(Q, H), H)) bad.push_back("A/a (x) Hom(A/a, M)");
                     if (!degreewise_isomorphic(hom_complex(Q, T), T)) bad.push_back("Hom(A/a, A/a (x) M)");
                     return from_failures(bad);
                 }});

    s.push_back({{"gm-c", "Hom(Lambda M, N) = Hom(M, Gamma N) for M coreduced, N reduced",
                  {"gm-duality-complexes"}, 200},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::Coreduced, g, rng);
                     c.complexes["N"] = gen_complex(c.ring, ideal(c), TermFlag::Reduced, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     try {
                         AdjunctionWitness w = adjunction_witness(cx(c, "M"), cx(c, "N"), ideal(c), cfg.k_max);
                         return w.verified ? pass() : fail("adjunction not verified: " + w.detail);
                     } catch (const NotStabilized& e) {
                         return skip(e.what());
                     }
                 }});

    s.push_back({{"exactness", "Gamma left exact on reduced, Lambda right exact on coreduced complexes",
                  {"exactness-corollary"}, 100},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Ideal& a = ideal(c);
                     const std::pair<const char*, TermFlag> kinds[] = {{"red", TermFlag::Reduced},
                                                                       {"cor", TermFlag::Coreduced}};
                     for (const auto& [tag, flag] : kinds) {
                         const std::string t = tag;
                         Complex A = gen_complex(c.ring, a, flag, g, rng), C = gen_complex(c.ring, a, flag, g, rng);
                         ShortExact s = gen_short_exact(A, C, rng);
                         c.maps[t + "_in"] = s.inclusion;
                         c.maps[t + "_out"] = s.projection;
                     }
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     auto exact_at = [&](const ChainMap& f, const ChainMap& g, int n) {
                         Submodule im = image(f.component(n)), ker = kernel(g.component(n));
                         return im.contains(ker) && ker.contains(im);
                     };
                     {
                         const ChainMap &i = mp(c, "red_in"), &p = mp(c, "red_out");
                         GammaComplex GA = gamma_complex(i.source(), a, cfg.k_max);
                         GammaComplex GB = gamma_complex(i.target(), a, cfg.k_max);
                         GammaComplex GC = gamma_complex(p.target(), a, cfg.k_max);
                         ChainMap gi = gamma_map(i, GA, GB), gp = gamma_map(p, GB, GC);
                         for (int n = gi.lo(); n <= gi.hi(); ++n) {
                             if (!is_injective(gi.component(n))) bad.push_back("Gamma(i) not injective at " + std::to_string(n));
                             if (!exact_at(gi, gp, n)) bad.push_back("Gamma sequence not exact at " + std::to_string(n));
                         }
                     }
                     {
                         const ChainMap &i = mp(c, "cor_in"), &p = mp(c, "cor_out");
                         LambdaComplex LA = lambda_complex(i.source(), a, cfg.k_max);
                         LambdaComplex LB = lambda_complex(i.target(), a, cfg.k_max);
                         LambdaComplex LC = lambda_complex(p.target(), a, cfg.k_max);
                         ChainMap li = lambda_map(i, LA, LB), lp = lambda_map(p, LB, LC);
                         for (int n = lp.lo(); n <= lp.hi(); ++n) {
                             if (!is_surjective(lp.component(n))) bad.push_back("Lambda(p) not surjective at " + std::to_string(n));
                             if (!exact_at(li, lp, n)) bad.push_back("Lambda sequence not exact at " + std::to_string(n));
                         }
                     }
                     return from_failures(bad);
                 }});

    s.push_back({{"limits", "Gamma preserves products and kernels, Lambda sums and cokernels",
                  {"representability-limits"}, 100},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Ideal& a = ideal(c);
                     const Complex M1 = gen_complex(c.ring, a, TermFlag::Reduced, g, rng);
                     const Complex M2 = gen_complex(c.ring, a, TermFlag::Reduced, g, rng);
                     const Complex N1 = gen_complex(c.ring, a, TermFlag::Coreduced, g, rng);
                     const Complex N2 = gen_complex(c.ring, a, TermFlag::Coreduced, g, rng);
                     c.maps["f"] = gen_chain_map(M1, M2, rng);
                     c.maps["g"] = gen_chain_map(N1, N2, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Ideal& a = ideal(c);
                     const ChainMap &f = mp(c, "f"), &g = mp(c, "g");
                     const Complex &M1 = f.source(), &M2 = f.target(), &N1 = g.source(), &N2 = g.target();
                     std::vector<std::string> bad;
                     GammaComplex G1 = gamma_complex(M1, a, cfg.k_max), G2 = gamma_complex(M2, a, cfg.k_max);
                     if (!degreewise_isomorphic(gamma_complex(direct_sum(M1, M2), a, cfg.k_max).complex,
                                                direct_sum(G1.complex, G2.complex)))
                         bad.push_back("Gamma of a product");
                     LambdaComplex L1 = lambda_complex(N1, a, cfg.k_max), L2 = lambda_complex(N2, a, cfg.k_max);
                     if (!degreewise_isomorphic(lambda_complex(direct_sum(N1, N2), a, cfg.k_max).complex,
                                                direct_sum(L1.complex, L2.complex)))
                         bad.push_back("Lambda of a sum");
                     ChainMap gf = gamma_map(f, G1, G2);
                     for (int n = f.lo(); n <= f.hi(); ++n) {
                         const Module K = kernel(f.component(n)).module();
                         if (!isomorphic(gamma_module(K, a, cfg.k_max).sub.module(), kernel(gf.component(n)).module()))
                             bad.push_back("Gamma of a kernel at " + std::to_string(n));
                     }
                     ChainMap lg = lambda_map(g, L1, L2);
                     for (int n = g.lo(); n <= g.hi(); ++n) {
                         const Module C = cokernel(g.component(n)).module();
                         if (!isomorphic(lambda_module(C, a, cfg.k_max).quotient.module(), cokernel(lg.component(n)).module()))
                             bad.push_back("Lambda of a cokernel at " + std::to_string(n));
                     }
                     return from_failures(bad);
                 }});

    s.push_back({{"mgm-c", "torsion and reduced = complete and coreduced = killed by a", {"mgm-complexes"}, 300},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t index) {
                     Case c = start(rng, g);
                     const TermFlag flag = index % 3 == 0 ? TermFlag::Killed : TermFlag::None;
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), flag, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     ComplexVerdict v = mgm_c_classify(cx(c, "M"), ideal(c), cfg.k_max);
                     if (!v.decidable()) return skip("completeness undecided");
                     if (v.consistent()) return pass();
                     return fail("torsion and reduced: " + to_string(v.torsion_and_reduced()) +
                                 ", complete and coreduced: " + to_string(v.complete_and_coreduced()) +
                                 ", killed: " + (v.killed ? "true" : "false"));
                 }});

    s.push_back({{"idempotent-c", "idempotent ideal: complete iff torsion, exhaustive over Z/6",
                  {"idempotent-abelian-corollary"}, z6_enumeration().size()},
                 P::IntegersMod, false,
                 [](Rng&, const GenConfig&, std::size_t index) { return z6_case(index); },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Complex& M = cx(c, "M");
                     const Tri complete = is_complete_complex(M, ideal(c), cfg.k_max);
                     if (complete == Tri::Unknown) return skip("completeness undecided");
                     const bool torsion = is_torsion_complex(M, ideal(c), cfg.k_max);
                     return (complete == Tri::True) == torsion ? pass() : fail("complete and torsion differ");
                 }});

    s.push_back({{"comparison-maps", "the maps alpha and beta on cohomology", {"comparison-maps"}, 100},
                 P::Mixed, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.modules["M"] = gen_module(c.ring, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const Complex M = conc(md(c, "M"));
                     const Ideal& a = ideal(c);
                     const DerivedOptions opt = derived_options(cfg);
                     std::vector<std::string> bad;
                     bool any = false, all_iso = true;
                     for (const auto& m : alpha_maps(M, a, opt)) {
                         if (!m.map) {
                             all_iso = false;
                             continue;
                         }
                         any = true;
                         if (m.degree == 0 && !is_injective(*m.map)) bad.push_back("alpha^0 not injective");
                         all_iso = all_iso && is_isomorphism(*m.map);
                     }
                     if (any && all_iso &&
                         compare(r_gamma(M, a, opt), rhom_quotient(DerivedComplex(M), a, opt.max_len).table()) != Tri::True)
                         bad.push_back("alpha bijective but the tables differ");
                     for (const auto& m : beta_maps(M, a, opt)) {
                         if (!m.map) continue;
                         any = true;
                         if (m.degree == 0 && !is_surjective(*m.map)) bad.push_back("beta^0 not surjective");
                     }
                     if (!any && bad.empty()) return skip("neither system settled");
                     return from_failures(bad);
                 }});

    s.push_back({{"derived-char",
                  "cohomology-table comparison agrees with the degreewise characterization",
                  {"derived-reduced-coreduced-definition", "derived-degreewise-characterization",
                   "derived-torsion-complete-characterization"},
                  100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     DerivedVerdict v = derived_classify(cx(c, "M"), ideal(c), Basis::DirectComparison, derived_options(cfg));
                     if (v.decidable_pairs() == 0) return skip("no flag decidable on both bases");
                     if (v.agrees()) return pass(std::to_string(v.decidable_pairs()) + " decidable flags agree");
                     return fail(describe_failures(v.contradictions));
                 }});

    s.push_back({{"example-fig3", "quasi-isomorphisms do not preserve reduced complexes", {"quasi-iso-example"}, 1},
                 P::Integers, false,
                 [](Rng&, const GenConfig&, std::size_t) { return quasi_iso_case(); },
                 [](const Case& c, const SuiteConfig&) {
                     std::vector<std::string> bad;
                     if (!is_reduced_complex(cx(c, "M"), ideal(c))) bad.push_back("M not reduced");
                     if (is_reduced_complex(cx(c, "N"), ideal(c))) bad.push_back("N reduced");
                     if (!is_quasi_iso(mp(c, "f"))) bad.push_back("f not a quasi-isomorphism");
                     return from_failures(bad);
                 }});

    s.push_back({{"killed-abelian", "complexes killed by a are closed under kernels, cokernels and sums",
                  {"killed-abelian-subcategory"}, 100},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     const Complex M = gen_complex(c.ring, ideal(c), TermFlag::Killed, g, rng);
                     const Complex N = gen_complex(c.ring, ideal(c), TermFlag::Killed, g, rng);
                     c.maps["f"] = gen_chain_map(M, N, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     const ChainMap& f = mp(c, "f");
                     const Ideal& a = ideal(c);
                     std::vector<std::string> bad;
                     for (int n = f.lo(); n <= f.hi(); ++n) {
                         const Morphism fn = f.component(n);
                         if (!annihilated_by(kernel(fn).module(), a)) bad.push_back("kernel at " + std::to_string(n));
                         if (!annihilated_by(image(fn).module(), a)) bad.push_back("image at " + std::to_string(n));
                         if (!annihilated_by(cokernel(fn).module(), a)) bad.push_back("cokernel at " + std::to_string(n));
                     }
                     if (!is_killed_complex(direct_sum(f.source(), f.target()), a)) bad.push_back("sum");
                     if (!is_killed_complex(cone(f), a)) bad.push_back("cone");
                     return from_failures(bad);
                 }});

    s.push_back({{"wpr", "Koszul towers of principal ideals are pro-zero below degree 0", {"weak-proregularity"},
                  wpr_instances().size() + 100},
                 P::Mixed, false,
                 [](Rng& rng, const GenConfig& g, std::size_t index) {
                     const auto fixed = wpr_instances();
                     Case c;
                     if (index < fixed.size()) {
                         c.ring = fixed[index].ring;
                         c.sequence = fixed[index].seq;
                     } else {
                         c.ring = gen_ring(g, rng);
                         c.sequence = {gen_ideal(c.ring, g, rng).principal()};
                     }
                     return c;
                 },
                 [](const Case& c, const SuiteConfig&) {
                     WprReport r = wpr_check(c.ring, c.sequence);
                     if (!r.witnessed()) return skip(r.to_string());
                     unsigned lag = 0;
                     for (const auto& d : r.degrees)
                         for (const auto& [i, j] : d.witness) lag = std::max(lag, j - i);
                     for (const auto& f : wpr_instances())
                         if (f.ring == c.ring && f.seq == c.sequence && lag > f.lag)
                             return fail("lag " + std::to_string(lag) + " exceeds " + std::to_string(f.lag));
                     return pass("lag " + std::to_string(lag));
                 }});

    s.push_back({{"gm-d", "RHom(A/a (x)^L M, N) = RHom(M, RHom(A/a, N)) and the classical direction",
                  {"gm-duality-derived"}, 100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::Coreduced, g, rng);
                     c.complexes["N"] = gen_complex(c.ring, ideal(c), TermFlag::Reduced, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const DerivedOptions opt = derived_options(cfg);
                     try {
                         DerivedReport r = gm_duality_derived_check(cx(c, "M"), cx(c, "N"), ideal(c), opt);
                         if (!r.holds()) return fail(r.to_string());
                         if (auto k = classical_duality_check(cx(c, "M"), cx(c, "N"), ideal(c), opt); k && !k->holds())
                             return fail("classical direction: " + k->to_string());
                         return pass();
                     } catch (const TruncationExceeded& e) {
                         return skip(e.what());
                     }
                 }});

    s.push_back({{"idempotence-d", "RHom(A/a, -) and A/a (x)^L - are idempotent", {"derived-idempotence-lemma"}, 100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     DerivedReport r = idempotence_derived_check(cx(c, "M"), ideal(c), derived_options(cfg));
                     return r.holds() ? pass() : fail(r.to_string());
                 }});

    s.push_back({{"rhom-torsion", "RHom(A/a, M) is killed by a and equals its own R Gamma", {"rhom-torsion-lemma"}, 100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     const DerivedOptions opt = derived_options(cfg);
                     const Ideal& a = ideal(c);
                     DerivedComplex H = rhom_quotient(DerivedComplex(cx(c, "M")), a, opt.max_len);
                     for (int n = H.complex.lo(); n <= H.complex.hi(); ++n)
                         if (!annihilated_by(cohomology(H.complex, n), a))
                             return fail("H^" + std::to_string(n) + " of RHom(A/a, M) not killed by a");
                     const Tri same = compare(r_gamma(H.complex, a, opt), H.table());
                     if (same == Tri::Unknown) return skip("R Gamma of RHom(A/a, M) did not settle");
                     return same == Tri::True ? pass() : fail("R Gamma of RHom(A/a, M) differs from it");
                 }});

    s.push_back({{"composition-d", "RHom(A/a, A/a (x)^L M) = A/a (x)^L M and A/a (x)^L RHom(A/a, M) = RHom(A/a, M)",
                  {"composition-proposition"}, 100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     DerivedReport r = composition_check(cx(c, "M"), ideal(c), derived_options(cfg));
                     return r.holds() ? pass() : fail(r.to_string());
                 }});

    s.push_back({{"mgm-lemma-d", "RHom(A/a, M) = M iff torsion and reduced; A/a (x)^L M = M iff complete and coreduced",
                  {"mgm-equality-lemma"}, 100},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t) {
                     Case c = start(rng, g);
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), TermFlag::None, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     try {
                         MgmDerivedReport r = mgm_derived_check(cx(c, "M"), ideal(c), derived_options(cfg));
                         if (r.tor_red == Tri::Unknown && r.com_cor == Tri::Unknown) return skip("memberships undecided");
                         if (r.rhom_lemma_consistent() && r.tensor_lemma_consistent()) return pass();
                         return fail(r.to_string());
                     } catch (const HypothesisUnmet& e) {
                         return skip(e.what());
                     }
                 }});

    s.push_back({{"mgm-d", "complete and coreduced = torsion and reduced in the derived category",
                  {"mgm-derived"}, 200},
                 P::Integers, true,
                 [](Rng& rng, const GenConfig& g, std::size_t index) {
                     Case c = start(rng, g);
                     const TermFlag flag = index % 3 == 0 ? TermFlag::Killed : TermFlag::None;
                     c.complexes["M"] = gen_complex(c.ring, ideal(c), flag, g, rng);
                     return c;
                 },
                 [](const Case& c, const SuiteConfig& cfg) {
                     try {
                         MgmDerivedReport r = mgm_derived_check(cx(c, "M"), ideal(c), derived_options(cfg));
                         if (!r.decidable()) return skip("memberships undecided");
                         return r.membership_equal() ? pass() : fail(r.to_string());
                     } catch (const HypothesisUnmet& e) {
                         return skip(e.what());
                     }
                 }});

    s.push_back({{"idempotent-d", "idempotent ideal: derived complete iff derived torsion, exhaustive over Z/6",
                  {"derived-idempotent-corollary"}, z6_enumeration().size()},
                 P::IntegersMod, false,
                 [](Rng&, const GenConfig&, std::size_t index) { return z6_case(index); },
                 [](const Case& c, const SuiteConfig& cfg) {
                     DerivedVerdict v = derived_classify(cx(c, "M"), ideal(c), Basis::Characterization, derived_options(cfg));
                     if (v.d_complete == Tri::Unknown) return skip("completeness undecided");
                     if (v.d_complete != v.d_torsion) return fail("derived complete and derived torsion differ");
                     MgmDerivedReport r = mgm_derived_check(cx(c, "M"), ideal(c), derived_options(cfg));
                     return r.membership_equal() ? pass() : fail(r.to_string());
                 }});

    return s;
}

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = build_suites();
    return all;
}

const Suite& find_suite(const std::string& id) {
    for (const auto& s : suites())
        if (s.info.id == id) return s;
    throw UnknownSuite(id);
}

GenConfig generator_config(const Suite& s, const SuiteConfig& cfg) {
    GenConfig g;
    g.seed = cfg.seed;
    g.ring_policy = s.policy;
    g.max_window = 3;
    if (s.small) {
        g.max_generators = 3;
        g.max_relations = 3;
    }
    if (cfg.ring) {
        g.ring_policy = cfg.ring->is_integers() ? GenConfig::RingPolicy::Integers : GenConfig::RingPolicy::IntegersMod;
        if (!cfg.ring->is_integers()) g.modulus = cfg.ring->modulus.get_si();
    }
    return g;
}

Case make_case(const Suite& s, const SuiteConfig& cfg, std::size_t index) {
    Rng rng(cfg.seed, s.info.id, index);
    Case c = s.make(rng, generator_config(s, cfg), index);
    c.suite = s.info.id;
    c.seed = cfg.seed;
    c.index = index;
    return c;
}

CaseRecord run_one(const Suite& s, const SuiteConfig& cfg, std::size_t index) {
    CaseRecord rec;
    rec.index = index;
    try {
        rec.instance = make_case(s, cfg, index);
    } catch (const GenerationExhausted& e) {
        rec.outcome = skip(std::string("generation exhausted: ") + e.what());
        return rec;
    }
    try {
        rec.outcome = s.check(*rec.instance, cfg);
    } catch (const NotStabilized& e) {
        rec.outcome = skip(e.what());
    } catch (const std::exception& e) {
        rec.outcome = fail(std::string("error: ") + e.what());
    }
    return rec;
}

}  // namespace

const std::vector<std::string>& statement_manifest() {
    static const std::vector<std::string> ids = {
        "hom-tensor-identities",
        "reduced-coreduced-definitions",
        "reduced-characterization",
        "coreduced-characterization",
        "idempotent-ideal-remark",
        "completion-of-coreduced",
        "completion-of-coreduced-corollary",
        "hom-reduced-coreduced-lemma",
        "hom-complex-proposition",
        "tensor-coreduced-lemma",
        "tensor-coreduced-proposition",
        "cogenerator-duality",
        "matlis-dual-corollary",
        "closure-properties",
        "cone-fiber-definition",
        "telescope-microscope-definition",
        "telescope-microscope-preservation",
        "idempotence-lemma",
        "gm-duality-complexes",
        "exactness-corollary",
        "representability-limits",
        "mgm-complexes",
        "idempotent-abelian-corollary",
        "comparison-maps",
        "derived-reduced-coreduced-definition",
        "derived-degreewise-characterization",
        "quasi-iso-example",
        "derived-torsion-complete-characterization",
        "killed-abelian-subcategory",
        "weak-proregularity",
        "gm-duality-derived",
        "derived-idempotence-lemma",
        "rhom-torsion-lemma",
        "composition-proposition",
        "mgm-equality-lemma",
        "mgm-derived",
        "derived-idempotent-corollary",
    };
    return ids;
}

const std::vector<SuiteInfo>& suite_index() {
    static const std::vector<SuiteInfo> index = [] {
        std::vector<SuiteInfo> out;
        for (const auto& s : suites()) out.push_back(s.info);
        return out;
    }();
    return index;
}

const SuiteInfo& suite_info(const std::string& id) { return find_suite(id).info; }

Case generate_case(const std::string& id, const SuiteConfig& cfg, std::size_t index) {
    return make_case(find_suite(id), cfg, index);
}

Outcome check_case(const Case& c, const SuiteConfig& cfg) {
    const Suite& s = find_suite(c.suite);
    try {
        return s.check(c, cfg);
    } catch (const NotStabilized& e) {
        return skip(e.what());
    }
}

SuiteReport run_suite(const std::string& id, const SuiteConfig& cfg) {
    const Suite& s = find_suite(id);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = cfg.cases.value_or(s.info.default_cases);
    std::vector<CaseRecord> records(n);
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) records[i] = run_one(s, cfg, i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    SuiteReport r;
    r.suite = id;
    r.statements = s.info.statements;
    r.seed = cfg.seed;
    r.cases = n;
    for (auto& rec : records) {
        switch (rec.outcome.status) {
            case Status::Pass: ++r.passes; break;
            case Status::Fail: r.failures.push_back(std::move(rec)); break;
            case Status::Skip: r.skipped.push_back(std::move(rec)); break;
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Node encode(const Case& c) {
    Node n("case");
    n.set("suite", Value::word(c.suite));
    n.set("seed", Value::of(Int(std::to_string(c.seed))));
    n.set("index", Value::of(Int(static_cast<unsigned long>(c.index))));
    n.set("ring", Value::word(c.ring.to_string()));
    if (c.ideal) n.set("ideal", Value::of(c.ideal->generators()));
    if (!c.sequence.empty()) n.set("sequence", Value::of(c.sequence));
    for (const auto& [name, M] : c.modules) n.add(name, encode(M));
    for (const auto& [name, C] : c.complexes) n.add(name, encode(C));
    for (const auto& [name, f] : c.maps) n.add(name, encode(f));
    return n;
}

Case decode_case(const Node& n) {
    n.expect("case");
    Case c;
    c.suite = n.field("suite").as_string();
    const Int seed = n.field("seed").as_int();
    if (seed < 0 || !seed.fits_ulong_p()) n.field("seed").fail("seed out of range");
    c.seed = seed.get_ui();
    c.index = static_cast<std::size_t>(n.field("index").as_long());
    try {
        c.ring = parse_ring(n.field("ring").as_string());
    } catch (const ParseError&) {
        n.field("ring").fail("expected a ring: Z or Z/n with n >= 2");
    }
    if (const Value* v = n.find("ideal")) {
        try {
            c.ideal = Ideal(c.ring, v->as_vector());
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            v->fail(e.what());
        }
    }
    if (const Value* v = n.find("sequence")) c.sequence = v->as_vector();
    for (const auto& [name, child] : n.children) {
        if (child.kind == "module") {
            c.modules[name] = decode_module(child);
        } else if (child.kind == "complex") {
            c.complexes[name] = decode_complex(child);
        } else if (child.kind == "chain-map") {
            c.maps[name] = decode_chain_map(child);
        } else {
            child.fail("unexpected block kind '" + child.kind + "' in a case");
        }
    }
    return c;
}

Node encode(const SuiteReport& r) {
    Node n("suite-report");
    n.set("suite", Value::word(r.suite));
    Value st = Value::list();
    for (const auto& s : r.statements) st.items.push_back(Value::word(s));
    n.set("statements", st);
    n.set("seed", Value::of(Int(std::to_string(r.seed))));
    n.set("cases", Value::of(Int(static_cast<unsigned long>(r.cases))));
    n.set("passes", Value::of(Int(static_cast<unsigned long>(r.passes))));
    n.set("failures", Value::of(Int(static_cast<unsigned long>(r.failures.size()))));
    n.set("skipped", Value::of(Int(static_cast<unsigned long>(r.skipped.size()))));
    for (const auto& f : r.failures) {
        Node x("failure");
        x.set("index", Value::of(Int(static_cast<unsigned long>(f.index))));
        x.set("detail", Value::quoted(f.outcome.detail));
        if (f.instance) x.add("instance", encode(*f.instance));
        n.add("failure" + std::to_string(f.index), std::move(x));
    }
    for (const auto& s : r.skipped) {
        Node x("skip");
        x.set("index", Value::of(Int(static_cast<unsigned long>(s.index))));
        x.set("reason", Value::quoted(s.outcome.detail));
        n.add("skip" + std::to_string(s.index), std::move(x));
    }
    return n;
}

}  // namespace redcor
