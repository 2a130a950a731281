#include "redcor/functors.hpp"

#include "redcor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace redcor {

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

Tri tri_or(Tri a, Tri b) {
    if (a == Tri::True || b == Tri::True) return Tri::True;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::False;
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::string vec_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

Int sign_of(int n) { return n % 2 == 0 ? Int(1) : Int(-1); }

// A/a (x) M^n summand of tensor_complex(A/a, M) and the image of x under m -> 1 (x) m.
Vector one_tensor(const TensorModule& t, const Vector& x) {
    Vector v(t.module().rank());
    for (std::size_t l = 0; l < x.size(); ++l) {
        if (x[l] == 0) continue;
        Vector p = t.pure(0, l);
        for (std::size_t s = 0; s < v.size(); ++s) v[s] += x[l] * p[s];
    }
    return t.module().normalize(v);
}

const TensorModule* tensor_block(const TensorComplex& T, int n) {
    for (const auto& b : T.blocks(n))
        if (b.i == 0) return &b.tensor;
    return nullptr;
}

}  // namespace

GammaComplex gamma_complex(const Complex& M, const Ideal& a, unsigned k_max) {
    require_same_ring(M.ring(), a.ring());
    unsigned K = 1;
    for (int n = M.lo(); n <= M.hi(); ++n) K = std::max(K, gamma_module(M.term(n), a, k_max).stabilized_at);
    std::vector<Submodule> subs;
    std::vector<Module> terms;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        subs.push_back(annihilator_of_power(M.term(n), a, K));
        terms.push_back(subs.back().module());
    }
    std::vector<Matrix> diffs;
    for (int n = M.lo(); n < M.hi(); ++n) {
        std::size_t k = static_cast<std::size_t>(n - M.lo());
        diffs.push_back(restricted_matrix(M.diff(n), subs[k], subs[k + 1]));
    }
    Complex G(M.ring(), M.lo(), terms, diffs);
    std::map<int, Matrix> incl;
    for (int n = M.lo(); n <= M.hi(); ++n) incl[n] = subs[static_cast<std::size_t>(n - M.lo())].inclusion().matrix();
    GammaComplex out{G, ChainMap(G, M, incl), subs, K, std::nullopt};

    if (is_reduced_complex(M, a)) {
        HomComplex H(Complex::concentrated(quotient_ring(a)), M);
        std::map<int, Matrix> ev;
        for (int n = M.lo(); n <= M.hi(); ++n) {
            const auto& blocks = H.blocks(n);
            const Submodule& sub = out.sub(n);
            Matrix m(sub.module().rank(), H.complex().term(n).rank());
            for (const auto& b : blocks) {
                Vector e(b.hom.module().rank());
                for (std::size_t s = 0; s < e.size(); ++s) {
                    e[s] = 1;
                    Vector x = b.hom.evaluate(e).column(0);
                    e[s] = 0;
                    // the Hom complex out of a degree-0 module carries the differential -d
                    for (auto& c : x) c *= sign_of(n);
                    m.set_column(b.offset + s, sub.to_sub(x));
                }
            }
            ev[n] = m;
        }
        out.evaluation = ChainMap(H.complex(), G, ev);
    }
    return out;
}

LambdaComplex lambda_complex(const Complex& M, const Ideal& a, unsigned k_max) {
    require_same_ring(M.ring(), a.ring());
    const bool coreduced = is_coreduced_complex(M, a);
    std::optional<unsigned> K = 1;
    for (int n = M.lo(); n <= M.hi() && K; ++n) {
        auto k0 = lambda_stabilization(M.term(n), a, k_max);
        K = k0 ? std::optional<unsigned>(std::max(*K, *k0)) : std::nullopt;
    }
    TensorComplex T(Complex::concentrated(quotient_ring(a)), M);
    LambdaComplex out;
    if (!K) {
        if (!coreduced)
            throw NotStabilized("completion tower of a non-coreduced complex did not settle by k = " +
                                std::to_string(k_max));
        std::map<int, Matrix> proj;
        for (int n = M.lo(); n <= M.hi(); ++n) {
            const TensorModule* t = tensor_block(T, n);
            Matrix m(T.complex().term(n).rank(), M.term(n).rank());
            Vector e(M.term(n).rank());
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = 1;
                m.set_column(k, one_tensor(*t, e));
                e[k] = 0;
            }
            proj[n] = m;
        }
        out.complex = T.complex();
        out.projection = ChainMap(M, out.complex, proj);
        out.theory_backed = true;
        out.to_tensor = ChainMap::identity(out.complex);
        return out;
    }

    const Int gK = principal_power(a, *K);
    std::vector<Module> terms;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        out.quotients.emplace_back(M.term(n), Matrix::identity(M.term(n).rank()).scaled(gK));
        terms.push_back(out.quotients.back().module());
    }
    std::vector<Matrix> diffs;
    for (int n = M.lo(); n < M.hi(); ++n) {
        std::size_t k = static_cast<std::size_t>(n - M.lo());
        diffs.push_back(quotient_matrix(M.diff(n), out.quotients[k], out.quotients[k + 1]));
    }
    out.complex = Complex(M.ring(), M.lo(), terms, diffs);
    out.height = K;
    std::map<int, Matrix> proj;
    for (int n = M.lo(); n <= M.hi(); ++n)
        proj[n] = out.quotients[static_cast<std::size_t>(n - M.lo())].projection().matrix();
    out.projection = ChainMap(M, out.complex, proj);

    if (coreduced) {
        std::map<int, Matrix> pi;
        for (int n = M.lo(); n <= M.hi(); ++n) {
            const Quotient& q = out.quotients[static_cast<std::size_t>(n - M.lo())];
            const TensorModule* t = tensor_block(T, n);
            Matrix m(T.complex().term(n).rank(), q.module().rank());
            for (std::size_t k = 0; k < q.module().rank(); ++k) m.set_column(k, one_tensor(*t, q.lift().column(k)));
            pi[n] = m;
        }
        out.to_tensor = ChainMap(out.complex, T.complex(), pi);
    }
    return out;
}

ChainMap gamma_map(const ChainMap& f, const GammaComplex& source, const GammaComplex& target) {
    std::map<int, Matrix> comps;
    const Complex& S = source.complex;
    const Complex& T = target.complex;
    for (int n = std::max(S.lo(), T.lo()); n <= std::min(S.hi(), T.hi()); ++n)
        comps[n] = restricted_matrix(f.component(n), source.sub(n), target.sub(n));
    return ChainMap(S, T, comps);
}

ChainMap lambda_map(const ChainMap& f, const LambdaComplex& source, const LambdaComplex& target) {
    const Complex& S = source.complex;
    const Complex& T = target.complex;
    if (source.theory_backed || target.theory_backed) {
        throw NotStabilized("lambda_map needs settled towers on both ends");
    }
    std::map<int, Matrix> comps;
    for (int n = std::max(S.lo(), T.lo()); n <= std::min(S.hi(), T.hi()); ++n)
        comps[n] = quotient_matrix(f.component(n), source.quotients[static_cast<std::size_t>(n - S.lo())],
                                   target.quotients[static_cast<std::size_t>(n - T.lo())]);
    return ChainMap(S, T, comps);
}

Complex hom_quotient_degreewise(const Complex& M, const Ideal& a) {
    Module Aa = quotient_ring(a);
    std::vector<HomModule> homs;
    std::vector<Module> terms;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        homs.emplace_back(Aa, M.term(n));
        terms.push_back(homs.back().module());
    }
    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k + 1 < homs.size(); ++k)
        diffs.push_back(hom_map(homs[k], homs[k + 1], Matrix::identity(Aa.rank()),
                                M.diff_matrix(M.lo() + static_cast<int>(k)))
                            .matrix());
    return Complex(M.ring(), M.lo(), terms, diffs);
}

Complex tensor_quotient_degreewise(const Complex& M, const Ideal& a) {
    Module Aa = quotient_ring(a);
    std::vector<TensorModule> ts;
    std::vector<Module> terms;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        ts.emplace_back(Aa, M.term(n));
        terms.push_back(ts.back().module());
    }
    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k)
        diffs.push_back(
            tensor_map(ts[k], ts[k + 1], Matrix::identity(Aa.rank()), M.diff_matrix(M.lo() + static_cast<int>(k)))
                .matrix());
    return Complex(M.ring(), M.lo(), terms, diffs);
}

Complex matlis_dual(const Complex& M) {
    Int e = 1;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        const Module& T = M.term(n);
        if (M.ring().is_integers() && !T.is_finite())
            throw NotFiniteModule("Matlis dual over Z needs finite terms, degree " + std::to_string(n) + " is " +
                                  T.to_string());
        if (M.ring().is_integers()) e = lcm(e, T.exponent());
    }
    return hom_complex(M, Complex::concentrated(matlis_coefficient(M.ring(), e)));
}

Complex degreewise_functor(const Complex& M, FunctorTag F, const Ideal& a, unsigned k_max) {
    switch (F) {
        case FunctorTag::Identity: return M;
        case FunctorTag::Gamma: return gamma_complex(M, a, k_max).complex;
        case FunctorTag::Lambda: return lambda_complex(M, a, k_max).complex;
        case FunctorTag::HomQuotient: return hom_quotient_degreewise(M, a);
        case FunctorTag::TensorQuotient: return tensor_quotient_degreewise(M, a);
        case FunctorTag::MatlisDual: return matlis_dual(M);
    }
    return M;
}

bool is_reduced_complex(const Complex& M, const Ideal& a) {
    for (int n = M.lo(); n <= M.hi(); ++n)
        if (!is_reduced_module(M.term(n), a)) return false;
    return true;
}

bool is_coreduced_complex(const Complex& M, const Ideal& a) {
    for (int n = M.lo(); n <= M.hi(); ++n)
        if (!is_coreduced_module(M.term(n), a)) return false;
    return true;
}

bool is_torsion_complex(const Complex& M, const Ideal& a, unsigned k_max) {
    for (int n = M.lo(); n <= M.hi(); ++n) {
        const Module& T = M.term(n);
        if (!gamma_module(T, a, k_max).sub.contains(Submodule(T, Matrix::identity(T.rank())))) return false;
    }
    return true;
}

Tri is_complete_complex(const Complex& M, const Ideal& a, unsigned k_max) {
    Tri result = Tri::True;
    for (int n = M.lo(); n <= M.hi(); ++n) {
        auto k0 = lambda_stabilization(M.term(n), a, k_max);
        if (!k0) {
            result = tri_and(result, Tri::Unknown);
            continue;
        }
        if (!power_multiple(M.term(n), a, *k0).module().is_zero()) return Tri::False;
    }
    return result;
}

bool is_killed_complex(const Complex& M, const Ideal& a) {
    for (int n = M.lo(); n <= M.hi(); ++n)
        if (!annihilated_by(M.term(n), a)) return false;
    return true;
}

bool reduced_by_hom_criterion(const Complex& M, const Ideal& a) {
    Complex A1 = Complex::concentrated(quotient_ring(a));
    Complex A2 = Complex::concentrated(quotient_ring_power(a, 2));
    return degreewise_isomorphic(hom_complex(A1, M), hom_complex(A2, M));
}

bool coreduced_by_tensor_criterion(const Complex& M, const Ideal& a) {
    Complex A1 = Complex::concentrated(quotient_ring(a));
    Complex A2 = Complex::concentrated(quotient_ring_power(a, 2));
    return degreewise_isomorphic(tensor_complex(A1, M), tensor_complex(A2, M));
}

bool ComplexVerdict::consistent() const {
    const bool tr = torsion && reduced;
    if (tr != killed) return false;
    Tri cc = complete_and_coreduced();
    if (cc != Tri::Unknown && (cc == Tri::True) != killed) return false;
    return true;
}

ComplexVerdict mgm_c_classify(const Complex& M, const Ideal& a, unsigned k_max) {
    ComplexVerdict v;
    v.reduced = is_reduced_complex(M, a);
    v.coreduced = is_coreduced_complex(M, a);
    v.torsion = is_torsion_complex(M, a, k_max);
    v.complete = is_complete_complex(M, a, k_max);
    v.killed = is_killed_complex(M, a);
    v.lambda_height = 1u;
    Ideal a2 = ideal_power(a, 2);
    for (int n = M.lo(); n <= M.hi(); ++n) {
        const Module& T = M.term(n);
        auto k0 = lambda_stabilization(T, a, k_max);
        if (v.lambda_height && k0)
            v.lambda_height = std::max(*v.lambda_height, *k0);
        else
            v.lambda_height.reset();

        Submodule ann1 = annihilator_submodule(T, a), ann2 = annihilator_submodule(T, a2);
        for (std::size_t k = 0; k < ann2.module().rank(); ++k) {
            Vector x = ann2.inclusion().matrix().column(k);
            if (!ann1.contains(x)) {
                v.witnesses.push_back({"reduced", n, "a^2 kills " + vec_string(T.normalize(x)) + " but a does not"});
                break;
            }
        }
        Submodule aT = scalar_submodule(T, a), a2T = scalar_submodule(T, a2);
        for (std::size_t k = 0; k < aT.module().rank(); ++k) {
            Vector x = aT.inclusion().matrix().column(k);
            if (!a2T.contains(x)) {
                v.witnesses.push_back({"coreduced", n, vec_string(T.normalize(x)) + " lies in aM but not in a^2 M"});
                break;
            }
        }
        Submodule G = gamma_module(T, a, k_max).sub;
        for (std::size_t k = 0; k < T.rank(); ++k) {
            Vector e(T.rank());
            e[k] = 1;
            if (!G.contains(e)) {
                v.witnesses.push_back({"torsion", n, "generator " + std::to_string(k) + " is not a-torsion"});
                break;
            }
        }
        if (!k0)
            v.witnesses.push_back({"complete", n, "tower a^k M did not settle by k = " + std::to_string(k_max)});
        else if (!power_multiple(T, a, *k0).module().is_zero())
            v.witnesses.push_back({"complete", n, "a^" + std::to_string(*k0) + " M is nonzero at the settled stage"});
    }
    return v;
}

AdjunctionWitness adjunction_witness(const Complex& M, const Complex& N, const Ideal& a, unsigned k_max) {
    if (!is_coreduced_complex(M, a)) throw PreconditionFailed("adjunction needs a coreduced first argument");
    if (!is_reduced_complex(N, a)) throw PreconditionFailed("adjunction needs a reduced second argument");
    LambdaComplex L = lambda_complex(M, a, k_max);
    GammaComplex G = gamma_complex(N, a, k_max);
    HomComplex lhs(L.complex, N), rhs(M, G.complex);
    TensorComplex T(Complex::concentrated(quotient_ring(a)), M);
    const Module Aa = quotient_ring(a);

    // inverse of the canonical isomorphism Lambda M -> A/a (x) M, degreewise
    std::map<int, Matrix> pi_inv;
    for (int i = M.lo(); i <= M.hi(); ++i) {
        Morphism pi = L.to_tensor->component(i);
        Matrix inv(pi.source().rank(), pi.target().rank());
        Vector e(pi.target().rank());
        for (std::size_t t = 0; t < e.size(); ++t) {
            e[t] = 1;
            auto pre = preimage(pi, e);
            e[t] = 0;
            if (!pre) return {lhs.complex(), rhs.complex(), std::nullopt, false, "A/a (x) M -> Lambda M is not onto"};
            inv.set_column(t, *pre);
        }
        pi_inv[i] = inv;
    }

    std::map<int, Matrix> comps;
    const Complex& S = lhs.complex();
    const Complex& R = rhs.complex();
    for (int n = S.lo(); n <= S.hi(); ++n) {
        Matrix m(R.term(n).rank(), S.term(n).rank());
        for (const auto& b : lhs.blocks(n)) {
            const HomComplex::Block* target = nullptr;
            for (const auto& c : rhs.blocks(n))
                if (c.i == b.i) target = &c;
            const TensorModule* t = tensor_block(T, b.i);
            HomModule hom_from_quotient(Aa, N.term(b.j));
            const Submodule& gamma_sub = G.sub(b.j);
            const Module& Mi = M.term(b.i);
            Vector e(b.hom.module().rank());
            for (std::size_t s = 0; s < e.size(); ++s) {
                e[s] = 1;
                Matrix psi = b.hom.evaluate(e);
                e[s] = 0;
                Matrix chi = psi * pi_inv[b.i];  // on A/a (x) M^i
                Matrix phi(gamma_sub.module().rank(), Mi.rank());
                Vector u(Mi.rank());
                for (std::size_t k = 0; k < Mi.rank(); ++k) {
                    u[k] = 1;
                    Vector y = chi * one_tensor(*t, u);
                    u[k] = 0;
                    // curry: m -> (r -> (-1)^j chi(r (x) m)) in Hom(A/a, N^j)
                    Matrix as_map(y.size(), 1);
                    for (std::size_t r = 0; r < y.size(); ++r) as_map(r, 0) = sign_of(b.j) * y[r];
                    Vector curried = hom_from_quotient.coordinates(as_map);
                    // evaluation at 1 into Gamma N^j, with the sign of Hom(A/a, N)
                    Vector z = hom_from_quotient.evaluate(curried).column(0);
                    for (auto& c : z) c *= sign_of(b.j);
                    phi.set_column(k, gamma_sub.to_sub(z));
                }
                if (!target) continue;
                Vector c = target->hom.coordinates(phi);
                for (std::size_t r = 0; r < c.size(); ++r) m(target->offset + r, b.offset + s) = c[r];
            }
        }
        comps[n] = m;
    }

    AdjunctionWitness w{S, R, std::nullopt, false, ""};
    try {
        w.iso = ChainMap(S, R, comps);
    } catch (const InvalidComplex& e) {
        w.detail = std::string("comparison map is not a chain map: ") + e.what();
        return w;
    }
    for (int n = S.lo(); n <= S.hi(); ++n) {
        if (!is_isomorphism(w.iso->component(n))) {
            w.detail = "comparison map is not bijective in degree " + std::to_string(n);
            return w;
        }
    }
    w.verified = true;
    return w;
}

}  // namespace redcor
