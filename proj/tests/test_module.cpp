#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "redcor/errors.hpp"
#include "redcor/module.hpp"

using namespace redcor;

namespace {
const RingSpec ZZ = RingSpec::integers();
RingSpec zmod(long n) { return RingSpec::integers_mod(Int(n)); }
Module cyc(const RingSpec& R, long d) { return Module::cyclic(R, Int(d)); }
Invariants inv(std::initializer_list<long> t, std::size_t f = 0) {
    Invariants i;
    for (long x : t) i.torsion.push_back(Int(x));
    i.free_rank = f;
    return i;
}
}  // namespace

TEST_CASE("canonical forms") {
    CHECK(Module(ZZ, {2, 3}).invariants() == inv({6}));
    CHECK(Module(ZZ, {4, 0, 2, 1}).invariants() == inv({2, 4}, 1));
    CHECK(Module::from_presentation(ZZ, Matrix{{4, 2}, {2, 2}}).invariants() == inv({2, 2}));
    CHECK(Module::from_presentation(zmod(6), Matrix{{2}}).invariants() == inv({2}));
    CHECK(Module::from_presentation(zmod(4), Matrix(2, 0)).invariants() == inv({4, 4}));
    CHECK_THROWS(Module(zmod(6), {4}));
    CHECK(isomorphic(Module(ZZ, {6}), Module(ZZ, {3, 2})));
}

TEST_CASE("kernels and cokernels") {
    Module Z = cyc(ZZ, 0), Z4 = cyc(ZZ, 4);
    CHECK(kernel(Morphism::scalar(Z, 2)).module().is_zero());
    CHECK(kernel(Morphism::scalar(Z4, 2)).module().invariants() == inv({2}));
    Module M(ZZ, {2, 0});
    CHECK(isomorphic(kernel(Morphism::zero(M, Z4)).module(), M));
    CHECK(cokernel(Morphism::scalar(Z, 6)).module().invariants() == inv({6}));
    CHECK(cokernel(Morphism::scalar(Z4, 2)).module().invariants() == inv({2}));
    CHECK(cokernel(Morphism::identity(M)).module().is_zero());
    CHECK_THROWS_AS(Morphism(cyc(ZZ, 2), Z, Matrix{{1}}), InvalidMorphism);
}

TEST_CASE("kernel and image sizes match brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        RingSpec R = trial % 2 ? zmod(2 + static_cast<long>(rng() % 23)) : ZZ;
        Module M = oracle::random_finite_module(rng, R), N = oracle::random_finite_module(rng, R);
        Morphism f = oracle::random_morphism(rng, M, N);
        Submodule K = kernel(f);
        CHECK(K.module().size() == oracle::count_if(M, [&](const Vector& x) { return N.is_zero_element(f.apply(x)); }));
        CHECK(compose(f, K.inclusion()).is_zero());
        CHECK(is_injective(K.inclusion()));
        Quotient C = cokernel(f);
        CHECK(C.module().size() * image(f).module().size() == N.size());
        CHECK(compose(C.projection(), f).is_zero());
        for (const auto& x : oracle::elements(M)) {
            Vector y = f.apply(x);
            auto pre = preimage(f, y);
            REQUIRE(pre.has_value());
            CHECK(f.apply(*pre) == y);
            CHECK(image(f).contains(y));
        }
    }
}

TEST_CASE("submodule coordinates round trip") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        RingSpec R = trial % 3 == 0 ? zmod(2 + static_cast<long>(rng() % 30)) : ZZ;
        Module M = oracle::random_module(rng, R, 3, 10);
        Matrix S = oracle::random_matrix(rng, M.rank(), 1 + rng() % 3, 8);
        Submodule sub(M, S);
        for (std::size_t j = 0; j < S.cols(); ++j) {
            Vector x = M.normalize(S.column(j));
            CHECK(sub.contains(x));
            CHECK(M.normalize(sub.inclusion().apply(sub.to_sub(x))) == x);
        }
        Quotient Q(M, S);
        for (std::size_t j = 0; j < S.cols(); ++j) CHECK(Q.module().is_zero_element(Q.project(S.column(j))));
        Vector e(Q.module().rank());
        for (std::size_t k = 0; k < e.size(); ++k) {
            e[k] = 1;
            CHECK(Q.project(Q.lift() * e) == Q.module().normalize(e));
            e[k] = 0;
        }
    }
}

TEST_CASE("hom modules") {
    CHECK(HomModule(cyc(ZZ, 2), cyc(ZZ, 4)).module().invariants() == inv({2}));
    CHECK(oracle::count_homs(cyc(ZZ, 2), cyc(ZZ, 4)) == 2);
    Module M(ZZ, {3, 0});
    CHECK(isomorphic(HomModule(cyc(ZZ, 0), M).module(), M));
    CHECK(HomModule(cyc(ZZ, 2), cyc(ZZ, 3)).module().is_zero());
    CHECK(HomModule(cyc(ZZ, 2), cyc(ZZ, 0)).module().is_zero());

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        RingSpec R = trial % 2 ? zmod(2 + static_cast<long>(rng() % 23)) : ZZ;
        Module A = oracle::random_finite_module(rng, R, 2, 8), B = oracle::random_finite_module(rng, R, 2, 8);
        HomModule H(A, B);
        CHECK(H.module().size() == oracle::count_homs(A, B));
        for (const auto& c : oracle::elements(H.module())) CHECK(H.coordinates(H.evaluate(c)) == c);
    }
}

TEST_CASE("tensor modules") {
    CHECK(TensorModule(cyc(ZZ, 2), cyc(ZZ, 4)).module().invariants() == inv({2}));
    Module N(ZZ, {5, 0});
    CHECK(isomorphic(TensorModule(cyc(ZZ, 0), N).module(), N));
    CHECK(TensorModule(cyc(ZZ, 2), cyc(ZZ, 3)).module().is_zero());
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Module A = oracle::random_finite_module(rng, ZZ, 2, 10), B = oracle::random_finite_module(rng, ZZ, 2, 10);
        CHECK(TensorModule(A, B).module().size() == oracle::tensor_order(A, B));
    }
}

TEST_CASE("hom and tensor functoriality") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        RingSpec R = trial % 2 ? zmod(12) : ZZ;
        Module A = oracle::random_module(rng, R, 2, 6), B = oracle::random_module(rng, R, 2, 6);
        Module C = oracle::random_module(rng, R, 2, 6), D = oracle::random_module(rng, R, 2, 6);
        Morphism f = oracle::random_morphism(rng, A, B), g = oracle::random_morphism(rng, C, D);
        // Hom(B, C) -> Hom(A, D), phi -> g phi f, checked on the basis
        HomModule from(B, C), to(A, D);
        Morphism h = hom_map(from, to, f.matrix(), g.matrix());
        Vector e(from.module().rank());
        for (std::size_t s = 0; s < e.size(); ++s) {
            e[s] = 1;
            Morphism phi = from.as_morphism(e);
            CHECK(to.as_morphism(h.apply(e)) == compose(g, compose(phi, f)));
            e[s] = 0;
        }
        TensorModule t1(A, C), t2(B, D);
        Morphism fg = tensor_map(t1, t2, f.matrix(), g.matrix());
        for (std::size_t i = 0; i < A.rank(); ++i)
            for (std::size_t j = 0; j < C.rank(); ++j) {
                Vector expect(t2.module().rank());
                for (std::size_t k = 0; k < B.rank(); ++k)
                    for (std::size_t l = 0; l < D.rank(); ++l) {
                        Vector p = t2.pure(k, l);
                        for (std::size_t s = 0; s < p.size(); ++s) expect[s] += f.matrix()(k, i) * g.matrix()(l, j) * p[s];
                    }
                CHECK(fg.apply(t1.pure(i, j)) == t2.module().normalize(expect));
            }
    }
}

TEST_CASE("annihilator and scalar submodules") {
    Ideal two(ZZ, {2});
    CHECK(annihilator_submodule(cyc(ZZ, 4), two).module().invariants() == inv({2}));
    CHECK(annihilator_submodule(cyc(ZZ, 0), two).module().is_zero());
    CHECK(annihilator_submodule(cyc(zmod(6), 6), Ideal(zmod(6), {3})).module().invariants() == inv({3}));
    CHECK(scalar_submodule(cyc(ZZ, 4), two).module().invariants() == inv({2}));
    CHECK(same_submodule(scalar_submodule(cyc(ZZ, 0), Ideal(ZZ, {1})), Submodule(cyc(ZZ, 0), Matrix{{1}})));
    CHECK(scalar_submodule(cyc(zmod(6), 6), Ideal(zmod(6), {3})).module().invariants() == inv({2}));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        RingSpec R = trial % 2 ? zmod(2 + static_cast<long>(rng() % 40)) : ZZ;
        Module M = oracle::random_finite_module(rng, R);
        Ideal a(R, {Int(static_cast<long>(rng() % 9)), Int(static_cast<long>(rng() % 9))});
        auto ann = annihilator_submodule(M, a);
        CHECK(ann.module().size() == oracle::count_if(M, [&](const Vector& x) {
                  for (const auto& g : a.generators()) {
                      Vector y = x;
                      for (auto& c : y) c *= g;
                      if (!M.is_zero_element(y)) return false;
                  }
                  return true;
              }));
        CHECK(same_submodule(ann, annihilator_of_power(M, a, 1)));
        CHECK(same_submodule(scalar_submodule(M, a), power_multiple(M, a, 1)));
    }
}

TEST_CASE("reduced and coreduced modules") {
    Ideal two(ZZ, {2});
    CHECK(is_reduced_module(cyc(ZZ, 0), two));
    CHECK_FALSE(is_reduced_module(cyc(ZZ, 4), two));
    CHECK(is_reduced_module(cyc(zmod(6), 6), Ideal(zmod(6), {3})));
    CHECK(is_coreduced_module(cyc(ZZ, 2), two));
    CHECK_FALSE(is_coreduced_module(cyc(ZZ, 0), two));
    CHECK(is_coreduced_module(cyc(ZZ, 3), two));
}

TEST_CASE("torsion and completion of modules") {
    Ideal two(ZZ, {2});
    auto g = gamma_module(cyc(ZZ, 4), two);
    CHECK(g.sub.module().invariants() == inv({4}));
    CHECK(g.stabilized_at == 2);
    g = gamma_module(cyc(ZZ, 0), two);
    CHECK(g.sub.module().is_zero());
    CHECK(g.stabilized_at == 1);
    g = gamma_module(cyc(zmod(6), 6), Ideal(zmod(6), {3}));
    CHECK(g.sub.module().invariants() == inv({3}));
    CHECK(g.stabilized_at == 1);

    auto l = lambda_module(cyc(ZZ, 4), two);
    CHECK(l.quotient.module().invariants() == inv({4}));
    CHECK(l.stabilized_at == 2);
    CHECK_THROWS_AS(lambda_module(cyc(ZZ, 0), two), NotStabilized);
    l = lambda_module(cyc(ZZ, 3), two);
    CHECK(l.quotient.module().is_zero());
    CHECK(l.stabilized_at == 1);
}

TEST_CASE("matlis duals") {
    CHECK(matlis_dual(cyc(ZZ, 4)).invariants() == inv({4}));
    CHECK(oracle::count_homs(cyc(ZZ, 4), cyc(ZZ, 4)) == 4);
    CHECK(matlis_dual(cyc(zmod(6), 2)).invariants() == inv({2}));
    CHECK(matlis_dual(Module::zero(ZZ)).is_zero());
    CHECK_THROWS_AS(matlis_dual(cyc(ZZ, 0)), NotFiniteModule);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        Module M = oracle::random_finite_module(rng, ZZ);
        CHECK(isomorphic(matlis_dual(M), M));
    }
}

TEST_CASE("module-level characterizations and closure properties") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        RingSpec R = trial % 2 ? zmod(2 + static_cast<long>(rng() % 63)) : ZZ;
        Module M = oracle::random_module(rng, R, 3, 16);
        Ideal a(R, {Int(static_cast<long>(rng() % 13))});
        auto G = gamma_module(M, a);
        CHECK(is_reduced_module(M, a) == annihilated_by(G.sub.module(), a));
        auto k0 = lambda_stabilization(M, a);
        if (k0) {
            auto L = lambda_module(M, a);
            CHECK(is_coreduced_module(M, a) == annihilated_by(L.quotient.module(), a));
            if (is_coreduced_module(M, a))
                CHECK(isomorphic(L.quotient.module(), TensorModule(quotient_ring(a), M).module()));
        }
        Module X = oracle::random_module(rng, R, 2, 16);
        if (is_reduced_module(M, a)) CHECK(is_reduced_module(HomModule(X, M).module(), a));
        if (is_coreduced_module(M, a)) {
            CHECK(is_coreduced_module(HomModule(M, X).module(), a));
            CHECK(is_coreduced_module(TensorModule(M, X).module(), a));
            CHECK(is_coreduced_module(TensorModule(X, M).module(), a));
        }
        Module M2 = oracle::random_module(rng, R, 2, 16);
        if (is_reduced_module(M, a) && is_reduced_module(M2, a)) CHECK(is_reduced_module(direct_sum(M, M2), a));
        if (is_coreduced_module(M, a) && is_coreduced_module(M2, a)) CHECK(is_coreduced_module(direct_sum(M, M2), a));
        Matrix S = oracle::random_matrix(rng, M.rank(), 2, 6);
        if (is_reduced_module(M, a)) CHECK(is_reduced_module(Submodule(M, S).module(), a));
        if (is_coreduced_module(M, a)) CHECK(is_coreduced_module(Quotient(M, S).module(), a));
    }
}
