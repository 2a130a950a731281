#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "redcor/errors.hpp"
#include "redcor/functors.hpp"
#include "redcor/generators.hpp"

using namespace redcor;

namespace {
const RingSpec ZZ = RingSpec::integers();
Module Z() { return Module::cyclic(ZZ, 0); }
Module cyc(long d) { return Module::cyclic(ZZ, Int(d)); }
Complex conc(const Module& M) { return Complex::concentrated(M); }
Complex times4() { return Complex::two_term(Morphism::scalar(Z(), Int(4)), -1); }
Ideal two() { return Ideal(ZZ, {Int(2)}); }

bool chain_iso(const ChainMap& f) {
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (!is_isomorphism(f.component(n))) return false;
    return true;
}

GenConfig small_config() {
    GenConfig cfg;
    cfg.max_generators = 3;
    cfg.max_relations = 3;
    cfg.entry_bound = 8;
    cfg.max_window = 3;
    return cfg;
}
}  // namespace

TEST_CASE("gamma_complex examples") {
    GammaComplex G = gamma_complex(conc(cyc(4)), two());
    CHECK(isomorphic(G.complex.term(0), cyc(4)));
    CHECK_FALSE(G.evaluation.has_value());

    GammaComplex G2 = gamma_complex(conc(cyc(2)), two());
    CHECK(isomorphic(G2.complex.term(0), cyc(2)));
    REQUIRE(G2.evaluation.has_value());
    CHECK(chain_iso(*G2.evaluation));
    CHECK(oracle::count_homs(cyc(2), cyc(2)) == 2);

    CHECK(gamma_complex(conc(Z()), two()).complex.term(0).is_zero());
}

TEST_CASE("lambda_complex examples") {
    LambdaComplex L = lambda_complex(conc(cyc(4)), two());
    CHECK(isomorphic(L.complex.term(0), cyc(4)));
    CHECK(L.height == 2u);

    LambdaComplex L3 = lambda_complex(conc(cyc(3)), two());
    CHECK(L3.complex.term(0).is_zero());
    REQUIRE(L3.to_tensor.has_value());
    CHECK(chain_iso(*L3.to_tensor));
    CHECK(oracle::tensor_order(cyc(2), cyc(3)) == 1);

    CHECK_THROWS_AS(lambda_complex(conc(Z()), two()), NotStabilized);
}

TEST_CASE("quasi-isomorphic pair with different reducedness") {
    Complex M = times4(), N = conc(cyc(4));
    CHECK(is_reduced_complex(M, two()));
    CHECK_FALSE(is_reduced_complex(N, two()));
    CHECK(is_quasi_iso(ChainMap(M, N, {{0, Matrix{{1}}}})));
    CHECK(reduced_by_hom_criterion(M, two()));
    CHECK_FALSE(reduced_by_hom_criterion(N, two()));
}

TEST_CASE("predicate examples") {
    Ideal unit(ZZ, {Int(1)});
    CHECK(is_reduced_complex(conc(cyc(4)), unit));
    CHECK(is_coreduced_complex(conc(cyc(2)), two()));
    CHECK_FALSE(is_coreduced_complex(times4(), two()));
    CHECK(is_torsion_complex(conc(cyc(4)), two()));
    CHECK_FALSE(is_torsion_complex(conc(Z()), two()));
    CHECK(is_torsion_complex(Complex::zero(ZZ), two()));
    CHECK(is_complete_complex(conc(cyc(4)), two()) == Tri::True);
    CHECK(is_complete_complex(conc(cyc(2)), two()) == Tri::True);
    CHECK(is_complete_complex(conc(cyc(3)), two()) == Tri::False);
    CHECK(is_complete_complex(conc(Z()), two()) == Tri::Unknown);

    // over Z/6 the ideal (3) is idempotent, so every complex is reduced and coreduced
    RingSpec R6 = RingSpec::integers_mod(Int(6));
    Ideal three(R6, {Int(3)});
    CHECK(ideal_is_idempotent(three));
    Complex X = Complex::two_term(Morphism::scalar(Module::cyclic(R6, 6), Int(2)), 0);
    CHECK(is_reduced_complex(X, three));
    CHECK(is_coreduced_complex(X, three));
}

TEST_CASE("adjunction examples") {
    AdjunctionWitness w = adjunction_witness(conc(cyc(2)), conc(cyc(2)), two());
    CHECK(w.verified);
    CHECK(isomorphic(w.lhs.term(0), cyc(2)));
    CHECK(oracle::count_homs(cyc(2), cyc(2)) == 2);

    AdjunctionWitness w0 = adjunction_witness(conc(cyc(3)), conc(Z()), two());
    CHECK(w0.verified);
    CHECK(w0.lhs.term(0).is_zero());
    CHECK(w0.rhs.term(0).is_zero());

    RingSpec R6 = RingSpec::integers_mod(Int(6));
    Module Z6 = Module::cyclic(R6, 6);
    AdjunctionWitness w6 = adjunction_witness(conc(Z6), conc(Z6), Ideal(R6, {Int(3)}));
    CHECK(w6.verified);
    CHECK(w6.lhs.term(0).size() == 3);
    CHECK(oracle::count_homs(Module::cyclic(R6, 3), Z6) == 3);
    CHECK(oracle::count_homs(Z6, Module::cyclic(R6, 3)) == 3);

    CHECK_THROWS_AS(adjunction_witness(times4(), conc(cyc(2)), two()), PreconditionFailed);
    CHECK_THROWS_AS(adjunction_witness(conc(cyc(2)), conc(cyc(4)), two()), PreconditionFailed);
}

TEST_CASE("mgm classification examples") {
    ComplexVerdict v2 = mgm_c_classify(conc(cyc(2)), two());
    CHECK(v2.torsion_and_reduced() == Tri::True);
    CHECK(v2.complete_and_coreduced() == Tri::True);
    CHECK(v2.killed);
    CHECK(v2.consistent());

    ComplexVerdict v4 = mgm_c_classify(conc(cyc(4)), two());
    CHECK(v4.torsion);
    CHECK_FALSE(v4.reduced);
    CHECK(v4.complete == Tri::True);
    CHECK_FALSE(v4.coreduced);
    CHECK_FALSE(v4.killed);
    CHECK(v4.consistent());
    CHECK_FALSE(v4.witnesses.empty());

    ComplexVerdict vz = mgm_c_classify(conc(Z()), two());
    CHECK_FALSE(vz.torsion);
    CHECK_FALSE(vz.killed);
    CHECK_FALSE(vz.lambda_height.has_value());
    CHECK(vz.consistent());
}

TEST_CASE("random complexes: functor properties") {
    GenConfig cfg = small_config();
    for (std::uint64_t i = 0; i < 150; ++i) {
        Rng rng(11, "functors", i);
        RingSpec R = gen_ring(cfg, rng);
        Ideal a = gen_ideal(R, cfg, rng);
        Complex M = gen_complex(R, a, TermFlag::None, cfg, rng);
        Complex Aa = conc(quotient_ring(a));

        // definitions against the complex-level restatements
        CHECK(is_reduced_complex(M, a) == reduced_by_hom_criterion(M, a));
        CHECK(is_coreduced_complex(M, a) == coreduced_by_tensor_criterion(M, a));

        // idempotence and mixed idempotence of Hom(A/a, -) and A/a (x) -
        Complex H = hom_complex(Aa, M), T = tensor_complex(Aa, M);
        CHECK(degreewise_isomorphic(hom_complex(Aa, H), H));
        CHECK(degreewise_isomorphic(tensor_complex(Aa, T), T));
        CHECK(degreewise_isomorphic(tensor_complex(Aa, H), H));
        CHECK(degreewise_isomorphic(hom_complex(Aa, T), T));
        CHECK(degreewise_isomorphic(H, hom_quotient_degreewise(M, a)));
        CHECK(degreewise_isomorphic(T, tensor_quotient_degreewise(M, a)));

        GammaComplex G = gamma_complex(M, a);
        CHECK(is_quasi_iso(ChainMap::identity(G.complex)));
        for (int n = M.lo(); n <= M.hi(); ++n) CHECK(is_injective(G.inclusion.component(n)));

        ComplexVerdict v = mgm_c_classify(M, a);
        CHECK(v.consistent());
        CHECK(v.decidable());
    }
}

TEST_CASE("reduced complexes: Gamma is Hom(A/a, -) and lands in coreduced") {
    GenConfig cfg = small_config();
    for (std::uint64_t i = 0; i < 120; ++i) {
        Rng rng(12, "gamma-reduced", i);
        RingSpec R = gen_ring(cfg, rng);
        Ideal a = gen_ideal(R, cfg, rng);
        Complex M = gen_complex(R, a, TermFlag::Reduced, cfg, rng);
        GammaComplex G = gamma_complex(M, a);
        REQUIRE(G.evaluation.has_value());
        CHECK(chain_iso(*G.evaluation));
        CHECK(is_coreduced_complex(G.complex, a));
        CHECK(is_reduced_complex(G.complex, a));
    }
}

TEST_CASE("coreduced complexes: Lambda is A/a (x) - and lands in reduced") {
    GenConfig cfg = small_config();
    for (std::uint64_t i = 0; i < 120; ++i) {
        Rng rng(13, "lambda-coreduced", i);
        RingSpec R = gen_ring(cfg, rng);
        Ideal a = gen_ideal(R, cfg, rng);
        Complex M = gen_complex(R, a, TermFlag::Coreduced, cfg, rng);
        LambdaComplex L = lambda_complex(M, a);
        CHECK_FALSE(L.theory_backed);
        REQUIRE(L.to_tensor.has_value());
        CHECK(chain_iso(*L.to_tensor));
        CHECK(is_reduced_complex(L.complex, a));
        CHECK(is_coreduced_complex(L.complex, a));
    }
}

TEST_CASE("adjunction on random coreduced/reduced pairs") {
    GenConfig cfg = small_config();
    for (std::uint64_t i = 0; i < 120; ++i) {
        Rng rng(14, "adjunction", i);
        RingSpec R = gen_ring(cfg, rng);
        Ideal a = gen_ideal(R, cfg, rng);
        Complex M = gen_complex(R, a, TermFlag::Coreduced, cfg, rng);
        Complex N = gen_complex(R, a, TermFlag::Reduced, cfg, rng);
        AdjunctionWitness w = adjunction_witness(M, N, a);
        CHECK_MESSAGE(w.verified, w.detail);
    }
}

TEST_CASE("gamma and lambda on chain maps") {
    GenConfig cfg = small_config();
    for (std::uint64_t i = 0; i < 80; ++i) {
        Rng rng(15, "functor-maps", i);
        RingSpec R = gen_ring(cfg, rng);
        Ideal a = gen_ideal(R, cfg, rng);
        Complex M = gen_complex(R, a, TermFlag::Coreduced, cfg, rng);
        Complex N = gen_complex(R, a, TermFlag::Coreduced, cfg, rng);
        ChainMap f = gen_chain_map(M, N, rng);
        GammaComplex GM = gamma_complex(M, a), GN = gamma_complex(N, a);
        ChainMap gf = gamma_map(f, GM, GN);
        ChainMap lhs = compose(GN.inclusion, gf), rhs = compose(f, GM.inclusion);
        for (int n = lhs.lo(); n <= lhs.hi(); ++n) CHECK(lhs.component_matrix(n) == rhs.component_matrix(n));
        LambdaComplex LM = lambda_complex(M, a), LN = lambda_complex(N, a);
        ChainMap lf = lambda_map(f, LM, LN);
        ChainMap l1 = compose(lf, LM.projection), l2 = compose(LN.projection, f);
        for (int n = l1.lo(); n <= l1.hi(); ++n) CHECK((l1.component(n) + l2.component(n).scaled(Int(-1))).is_zero());
    }
}

TEST_CASE("idempotent ideals: complete iff torsion") {
    for (long n : {6L, 10L, 12L, 30L}) {
        RingSpec R = RingSpec::integers_mod(Int(n));
        GenConfig cfg = small_config();
        cfg.ring_policy = GenConfig::RingPolicy::IntegersMod;
        cfg.modulus = n;
        for (std::uint64_t i = 0; i < 40; ++i) {
            Rng rng(16, "idempotent", i + static_cast<std::uint64_t>(n) * 1000);
            Ideal a = gen_ideal(R, cfg, rng);
            if (!ideal_is_idempotent(a)) continue;
            Complex M = gen_complex(R, a, TermFlag::None, cfg, rng);
            Tri c = is_complete_complex(M, a);
            REQUIRE(c != Tri::Unknown);
            CHECK((c == Tri::True) == is_torsion_complex(M, a));
        }
    }
}
