#include "redcor/derived.hpp"

#include "redcor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace redcor {

namespace {

// Smallest divisor u of n sharing all prime factors of o with n; Z/u is the
// projective cover of Z/o over Z/n.
Int unitary_part(const Int& n, const Int& o) {
    Int rest = n, u = 1;
    for (Int g = gcd(rest, o); g > 1; g = gcd(rest, o)) {
        rest /= g;
        u *= g;
    }
    return u;
}

// Idempotent of Z/n that is 1 on the Z/u factor and 0 on the complement.
Int idempotent_for(const RingSpec& ring, const Int& u) {
    if (ring.is_integers() || u == 0 || u == ring.modulus) return 1;
    Int m = ring.modulus / u, inv;
    Int mu = reduce_mod(m, u);
    mpz_invert(inv.get_mpz_t(), mu.get_mpz_t(), u.get_mpz_t());
    return reduce_mod(m * inv, ring.modulus);
}

Vector concat(const Vector& a, const Vector& b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

long clamp_add(long base, long delta) {
    if (base == INT_MIN || base == INT_MAX) return base;
    return base + delta;
}

void narrow(DerivedComplex& D, long lo, long hi) {
    D.valid_lo = static_cast<int>(std::max<long>(D.valid_lo, std::max<long>(lo, INT_MIN)));
    D.valid_hi = static_cast<int>(std::min<long>(D.valid_hi, std::min<long>(hi, INT_MAX)));
}

bool limited(const DerivedComplex& D) { return D.valid_lo != INT_MIN || D.valid_hi != INT_MAX; }

ChainMap quotient_projection(const Ideal& a, unsigned from_k, unsigned to_k) {
    Module from = quotient_ring_power(a, from_k), to = quotient_ring_power(a, to_k);
    return ChainMap(Complex::concentrated(from), Complex::concentrated(to), {{0, Matrix::identity(1)}});
}

std::optional<unsigned> constant_from(const Ideal& a, unsigned k_max) {
    if (!a.ring().is_integers()) return ideal_power_stabilization(a, k_max);
    const Int g = abs(a.principal());
    if (g == 0 || g == 1) return 1u;
    return std::nullopt;
}

}  // namespace

bool is_projective(const Module& M) {
    for (const auto& o : M.orders) {
        if (o == 1) continue;
        if (M.ring.is_integers()) {
            if (o != 0) return false;
        } else if (gcd(o, M.ring.modulus / o) != 1) {
            return false;
        }
    }
    return true;
}

Morphism projective_cover(const Module& M) {
    Vector orders;
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < M.rank(); ++i) {
        const Int& o = M.orders[i];
        if (o == 1) continue;
        orders.push_back(M.ring.is_integers() ? Int(0) : unitary_part(M.ring.modulus, o));
        hit.push_back(i);
    }
    Module P(M.ring, orders);
    Matrix m(M.rank(), P.rank());
    for (std::size_t j = 0; j < hit.size(); ++j) m(hit[j], j) = 1;
    return Morphism(P, M, m);
}

Resolution projective_resolution(const Complex& M, unsigned max_len) {
    Resolution out;
    out.target = M;
    const int hi = M.hi();
    std::vector<Module> Q;  // Q[k] sits in degree hi - k
    std::vector<Matrix> D, E;
    const Module none = Module::zero(M.ring());
    auto q_at = [&](int n) -> const Module& {
        const long k = hi - n;
        return k < 0 || k >= static_cast<long>(Q.size()) ? none : Q[static_cast<std::size_t>(k)];
    };
    auto d_at = [&](int n) {
        const long k = hi - n;
        if (k < 0 || k >= static_cast<long>(D.size())) return Matrix(q_at(n + 1).rank(), q_at(n).rank());
        return D[static_cast<std::size_t>(k)];
    };
    auto e_at = [&](int n) {
        const long k = hi - n;
        if (k < 0 || k >= static_cast<long>(E.size())) return Matrix(M.term(n).rank(), q_at(n).rank());
        return E[static_cast<std::size_t>(k)];
    };

    for (int n = hi;; --n) {
        const Module &Q1 = q_at(n + 1), &Q2 = q_at(n + 2);
        const Module &Mn = M.term(n), &M1 = M.term(n + 1);
        Module S = direct_sum(Q1, Mn), T = direct_sum(Q2, M1);
        Matrix phi(T.rank(), S.rank());
        phi.place(0, 0, d_at(n + 1));
        phi.place(Q2.rank(), 0, e_at(n + 1));
        phi.place(Q2.rank(), Q1.rank(), -M.diff_matrix(n));
        Submodule Z = kernel(Morphism(S, T, phi));
        if (n < M.lo()) {
            if (Z.module().is_zero()) break;
            if (M.lo() - n > static_cast<int>(max_len)) {
                out.truncated = true;
                break;
            }
        }
        Morphism cover = projective_cover(Z.module());
        Matrix p = Z.inclusion().matrix() * cover.matrix();
        const std::size_t q1 = Q1.rank(), mn = Mn.rank();
        Q.push_back(cover.source());
        D.push_back(p.row_range(0, q1));
        E.push_back(p.row_range(q1, mn));
        out.pairs.emplace(n, Morphism(cover.source(), S, p));
    }

    const int low = hi - static_cast<int>(Q.size()) + 1;
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    std::map<int, Matrix> aug;
    for (int n = low; n <= hi; ++n) {
        const std::size_t k = static_cast<std::size_t>(hi - n);
        terms.push_back(Q[k]);
        if (n < hi) diffs.push_back(D[k]);
        aug[n] = E[k];
    }
    out.complex = Complex(M.ring(), low, terms, diffs);
    out.augmentation = ChainMap(out.complex, M, aug);
    out.length = static_cast<unsigned>(std::max(0, M.lo() - low));

    for (int n = std::max(out.exact_from(), std::min(low, M.lo()) - 1); n <= hi + 1; ++n)
        if (!is_isomorphism(induced_map(out.augmentation, n)))
            throw Error("resolution is not a quasi-isomorphism in degree " + std::to_string(n));
    return out;
}

Resolution free_resolution(const Module& X, unsigned max_len) {
    return projective_resolution(Complex::concentrated(X), max_len);
}

ChainMap lift(const ChainMap& f, const Resolution& from, const Resolution& to) {
    const Complex &P = from.complex, &Q = to.complex;
    std::map<int, Matrix> comps;
    Matrix above(Q.term(P.hi() + 1).rank(), P.term(P.hi() + 1).rank());
    for (int n = P.hi(); n >= P.lo(); --n) {
        const Module& Pn = P.term(n);
        Matrix m(Q.term(n).rank(), Pn.rank());
        Matrix d = P.diff_matrix(n), e = from.augmentation.component_matrix(n), fn = f.component_matrix(n);
        for (std::size_t c = 0; c < Pn.rank(); ++c) {
            Vector pair = concat(above * d.column(c), fn * e.column(c));
            auto it = to.pairs.find(n);
            if (it == to.pairs.end()) {
                if (!is_zero(direct_sum(Q.term(n + 1), to.target.term(n)).normalize(pair)))
                    throw TruncationExceeded("lift needs the target resolution below degree " + std::to_string(n + 1));
                continue;
            }
            auto y = preimage(it->second, pair);
            if (!y) throw Error("lift: pair outside the covered submodule in degree " + std::to_string(n));
            const Int e_u = idempotent_for(P.ring(), Pn.orders[c]);
            for (auto& x : *y) x *= e_u;
            m.set_column(c, Q.term(n).normalize(*y));
        }
        comps[n] = m;
        above = m;
    }
    return ChainMap(P, Q, comps);
}

Invariants CohomologyTable::at(int n) const {
    auto it = groups.find(n);
    return it == groups.end() ? Invariants{} : it->second;
}

std::string CohomologyTable::to_string() const {
    std::ostringstream os;
    if (groups.empty()) os << "0";
    bool first = true;
    for (const auto& [n, g] : groups) {
        os << (first ? "" : ", ") << "H^" << n << " = " << g.to_string();
        first = false;
    }
    if (limited()) {
        os << " [valid";
        if (valid_lo != INT_MIN) os << " from " << valid_lo;
        if (valid_hi != INT_MAX) os << " up to " << valid_hi;
        os << "]";
    }
    return os.str();
}

CohomologyTable cohomology_table(const Complex& C, int valid_lo, int valid_hi) {
    CohomologyTable t;
    t.valid_lo = valid_lo;
    t.valid_hi = valid_hi;
    for (int n = std::max(C.lo(), valid_lo); n <= std::min(C.hi(), valid_hi); ++n) {
        Module H = cohomology(C, n);
        if (!H.is_zero()) t.groups[n] = H.invariants();
    }
    return t;
}

bool tables_match(const CohomologyTable& a, const CohomologyTable& b) {
    std::vector<int> degrees;
    for (const auto& [n, g] : a.groups) degrees.push_back(n);
    for (const auto& [n, g] : b.groups) degrees.push_back(n);
    for (int n : degrees)
        if (a.valid(n) && b.valid(n) && !(a.at(n) == b.at(n))) return false;
    return true;
}

DerivedComplex rhom(const Resolution& P, const DerivedComplex& N) {
    DerivedComplex out(hom_complex(P.complex, N.complex));
    const long L = P.complex.lo(), top = P.complex.hi();
    if (P.truncated) narrow(out, INT_MIN, N.complex.lo() - L - 1);
    if (limited(N)) narrow(out, clamp_add(N.valid_lo, -L + 1), clamp_add(N.valid_hi, -top - 1));
    return out;
}

DerivedComplex derived_tensor(const Resolution& P, const DerivedComplex& N) {
    DerivedComplex out(tensor_complex(P.complex, N.complex));
    const long L = P.complex.lo(), top = P.complex.hi();
    if (P.truncated) narrow(out, L + N.complex.hi() + 1, INT_MAX);
    if (limited(N)) narrow(out, clamp_add(N.valid_lo, top + 1), clamp_add(N.valid_hi, L - 1));
    return out;
}

DerivedComplex rhom(const DerivedComplex& M, const DerivedComplex& N, unsigned max_len) {
    DerivedComplex out = rhom(projective_resolution(M.complex, max_len), N);
    if (limited(M))
        narrow(out, clamp_add(-static_cast<long>(M.valid_hi), N.complex.hi() + 1),
               clamp_add(-static_cast<long>(M.valid_lo), N.complex.lo() - 1));
    return out;
}

DerivedComplex derived_tensor(const DerivedComplex& M, const DerivedComplex& N, unsigned max_len) {
    DerivedComplex out = derived_tensor(projective_resolution(M.complex, max_len), N);
    if (limited(M)) narrow(out, clamp_add(M.valid_lo, N.complex.hi() + 1), clamp_add(M.valid_hi, N.complex.lo() - 1));
    return out;
}

Resolution quotient_resolution(const Ideal& a, unsigned k, unsigned max_len) {
    return free_resolution(quotient_ring_power(a, k), max_len);
}

DerivedComplex rhom_quotient(const DerivedComplex& M, const Ideal& a, unsigned max_len) {
    return rhom(quotient_resolution(a, 1, max_len), M);
}

DerivedComplex tensor_quotient(const DerivedComplex& M, const Ideal& a, unsigned max_len) {
    return derived_tensor(quotient_resolution(a, 1, max_len), M);
}

std::vector<Module> ext_groups(const Module& X, const Complex& M, int i_max, unsigned max_len) {
    DerivedComplex D = rhom(free_resolution(X, max_len), DerivedComplex(M));
    std::vector<Module> out;
    for (int i = 0; i <= i_max; ++i) {
        if (i > D.valid_hi || i < D.valid_lo)
            throw TruncationExceeded("Ext^" + std::to_string(i) + " needs a longer resolution than " +
                                     std::to_string(max_len));
        out.push_back(cohomology(D.complex, i));
    }
    return out;
}

std::vector<Module> tor_groups(const Module& X, const Complex& M, int i_max, unsigned max_len) {
    DerivedComplex D = derived_tensor(free_resolution(X, max_len), DerivedComplex(M));
    std::vector<Module> out;
    for (int i = 0; i <= i_max; ++i) {
        if (-i > D.valid_hi || -i < D.valid_lo)
            throw TruncationExceeded("Tor_" + std::to_string(i) + " needs a longer resolution than " +
                                     std::to_string(max_len));
        out.push_back(cohomology(D.complex, -i));
    }
    return out;
}

std::string to_string(StabilizationRule r) {
    switch (r) {
        case StabilizationRule::ExactConstant: return "exact-constant";
        case StabilizationRule::IsoRun: return "iso-run";
        case StabilizationRule::ZeroComposite: return "zero-composite";
        case StabilizationRule::NotStabilized: return "not-stabilized";
    }
    return "not-stabilized";
}

bool SystemTable::stabilized() const {
    for (const auto& [n, v] : degrees)
        if (!v.value) return false;
    return true;
}

CohomologyTable SystemTable::known() const {
    CohomologyTable t;
    t.valid_lo = valid_lo;
    t.valid_hi = valid_hi;
    for (const auto& [n, v] : degrees)
        if (v.value && !(*v.value == Invariants{})) t.groups[n] = *v.value;
    return t;
}

std::string SystemTable::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, v] : degrees) {
        os << (first ? "" : ", ") << "H^" << n << " = " << (v.value ? v.value->to_string() : "?") << " ("
           << redcor::to_string(v.rule);
        if (v.value) os << " at " << v.stage;
        os << ")";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

enum class Direction { Colimit, Limit };

SystemTable build_system(const Complex& M, const Ideal& a, const DerivedOptions& opt, Direction dir) {
    require_same_ring(M.ring(), a.ring());
    auto stage = [&](const Resolution& R) {
        return dir == Direction::Colimit ? rhom(R, DerivedComplex(M)) : derived_tensor(R, DerivedComplex(M));
    };
    SystemTable out;
    if (auto k0 = constant_from(a, opt.k_max)) {
        DerivedComplex C = stage(quotient_resolution(a, *k0, opt.max_len));
        out.valid_lo = C.valid_lo;
        out.valid_hi = C.valid_hi;
        for (int n = std::max(C.complex.lo(), C.valid_lo); n <= std::min(C.complex.hi(), C.valid_hi); ++n)
            out.degrees[n] = {cohomology(C.complex, n).invariants(), StabilizationRule::ExactConstant, *k0};
        return out;
    }

    const unsigned S = std::max(opt.stages, opt.window + 1);
    std::vector<Resolution> R;
    std::vector<DerivedComplex> C;
    for (unsigned k = 1; k <= S; ++k) {
        R.push_back(quotient_resolution(a, k, opt.max_len));
        C.push_back(stage(R.back()));
    }
    // T[k] links stage k+1 and stage k (0-based), in the direction of the system.
    std::vector<ChainMap> T;
    for (unsigned k = 0; k + 1 < S; ++k) {
        ChainMap up = lift(quotient_projection(a, k + 2, k + 1), R[k + 1], R[k]);
        if (dir == Direction::Colimit) {
            HomComplex from(R[k].complex, M), to(R[k + 1].complex, M);
            T.push_back(hom_complex_map(from, to, up, ChainMap::identity(M)));
        } else {
            TensorComplex from(R[k + 1].complex, M), to(R[k].complex, M);
            T.push_back(tensor_complex_map(from, to, up, ChainMap::identity(M)));
        }
    }

    int lo = INT_MAX, hi = INT_MIN;
    out.valid_lo = INT_MIN;
    out.valid_hi = INT_MAX;
    for (const auto& c : C) {
        lo = std::min(lo, c.complex.lo());
        hi = std::max(hi, c.complex.hi());
        out.valid_lo = std::max(out.valid_lo, c.valid_lo);
        out.valid_hi = std::min(out.valid_hi, c.valid_hi);
    }
    const unsigned W = opt.window;
    for (int n = std::max(lo, out.valid_lo); n <= std::min(hi, out.valid_hi); ++n) {
        std::vector<Morphism> h;
        for (const auto& t : T) h.push_back(induced_map(t, n));
        StableValue v;
        for (unsigned k = 0; k + W <= h.size() && !v.value; ++k) {
            bool run = true;
            for (unsigned s = k; s < k + W && run; ++s) run = is_isomorphism(h[s]);
            if (run) v = {cohomology(C[k].complex, n).invariants(), StabilizationRule::IsoRun, k + 1};
        }
        if (!v.value) {
            bool zero = true;
            for (unsigned k = 0; k + W <= h.size() && zero; ++k) {
                Morphism c = h[k];
                for (unsigned s = k + 1; s < k + W; ++s)
                    c = dir == Direction::Colimit ? compose(h[s], c) : compose(c, h[s]);
                zero = c.is_zero();
            }
            if (zero) v = {Invariants{}, StabilizationRule::ZeroComposite, 1};
        }
        out.degrees[n] = v;
    }
    return out;
}

}  // namespace

SystemTable r_gamma(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    return build_system(M, a, opt, Direction::Colimit);
}

SystemTable l_lambda(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    return build_system(M, a, opt, Direction::Limit);
}

namespace {

std::vector<ComparisonMap> comparison_maps(const Complex& M, const Ideal& a, const DerivedOptions& opt,
                                           Direction dir) {
    const SystemTable s = build_system(M, a, opt, dir);
    const Resolution first = quotient_resolution(a, 1, opt.max_len);
    const DerivedComplex C1 = dir == Direction::Colimit ? rhom(first, DerivedComplex(M))
                                                        : derived_tensor(first, DerivedComplex(M));
    std::map<unsigned, ChainMap> to_stage;  // stage K complex linked with stage 1
    auto link = [&](unsigned K) -> const ChainMap& {
        auto it = to_stage.find(K);
        if (it != to_stage.end()) return it->second;
        Resolution RK = quotient_resolution(a, K, opt.max_len);
        ChainMap down = lift(quotient_projection(a, K, 1), RK, first);
        const ChainMap id = ChainMap::identity(M);
        ChainMap m = dir == Direction::Colimit
                         ? hom_complex_map(HomComplex(first.complex, M), HomComplex(RK.complex, M), down, id)
                         : tensor_complex_map(TensorComplex(RK.complex, M), TensorComplex(first.complex, M), down, id);
        return to_stage.emplace(K, m).first->second;
    };
    std::vector<ComparisonMap> out;
    const Module none = Module::zero(M.ring());
    for (const auto& [n, v] : s.degrees) {
        ComparisonMap c{n, std::nullopt, v.rule};
        if (v.rule == StabilizationRule::ZeroComposite) {
            Module H = cohomology(C1.complex, n);
            c.map = dir == Direction::Colimit ? Morphism::zero(H, none) : Morphism::zero(none, H);
        } else if (v.value) {
            c.map = v.stage == 1 ? Morphism::identity(cohomology(C1.complex, n)) : induced_map(link(v.stage), n);
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::vector<ComparisonMap> alpha_maps(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    return comparison_maps(M, a, opt, Direction::Colimit);
}

std::vector<ComparisonMap> beta_maps(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    return comparison_maps(M, a, opt, Direction::Limit);
}

Tri compare(const SystemTable& s, const CohomologyTable& t) {
    std::vector<int> degrees;
    for (const auto& [n, v] : s.degrees) degrees.push_back(n);
    for (const auto& [n, g] : t.groups) degrees.push_back(n);
    bool unknown = false;
    for (int n : degrees) {
        if (!t.valid(n) || n < s.valid_lo || n > s.valid_hi) continue;
        auto it = s.degrees.find(n);
        if (it != s.degrees.end() && !it->second.value) {
            unknown = true;
            continue;
        }
        Invariants v = it == s.degrees.end() ? Invariants{} : *it->second.value;
        if (!(v == t.at(n))) return Tri::False;
    }
    return unknown ? Tri::Unknown : Tri::True;
}

std::string to_string(Basis b) { return b == Basis::Characterization ? "characterization" : "direct-comparison"; }

int DerivedVerdict::decidable_pairs() const {
    int count = 0;
    const std::pair<Tri, Tri> pairs[] = {{d_reduced, direct_reduced},
                                         {d_coreduced, direct_coreduced},
                                         {d_torsion, direct_torsion},
                                         {d_complete, direct_complete}};
    for (const auto& [c, d] : pairs)
        if (c != Tri::Unknown && d != Tri::Unknown) ++count;
    return count;
}

std::string DerivedVerdict::to_string() const {
    std::ostringstream os;
    os << "basis: " << redcor::to_string(basis) << '\n';
    os << "reduced: " << redcor::to_string(d_reduced) << ", coreduced: " << redcor::to_string(d_coreduced)
       << ", torsion: " << redcor::to_string(d_torsion) << ", complete: " << redcor::to_string(d_complete) << '\n';
    if (basis == Basis::DirectComparison) {
        os << "direct reduced: " << redcor::to_string(direct_reduced)
           << ", direct coreduced: " << redcor::to_string(direct_coreduced)
           << ", direct torsion: " << redcor::to_string(direct_torsion)
           << ", direct complete: " << redcor::to_string(direct_complete) << '\n';
        for (const auto& [name, t] : tables) os << name << ": " << t.to_string() << '\n';
        if (gamma_system) os << "RGamma system: " << gamma_system->to_string() << '\n';
        if (lambda_system) os << "LLambda system: " << lambda_system->to_string() << '\n';
        for (const auto& c : contradictions) os << "contradiction: " << c << '\n';
    }
    return os.str();
}

DerivedVerdict derived_classify(const Complex& M, const Ideal& a, Basis basis, const DerivedOptions& opt) {
    require_same_ring(M.ring(), a.ring());
    DerivedVerdict v;
    v.basis = basis;
    v.d_reduced = to_tri(is_reduced_complex(M, a));
    v.d_coreduced = to_tri(is_coreduced_complex(M, a));
    v.d_torsion = to_tri(is_torsion_complex(M, a, opt.k_max));
    v.d_complete = is_complete_complex(M, a, opt.k_max);
    if (basis == Basis::Characterization) return v;

    CohomologyTable H = cohomology_table(M);
    CohomologyTable rh = rhom_quotient(DerivedComplex(M), a, opt.max_len).table();
    CohomologyTable tq = tensor_quotient(DerivedComplex(M), a, opt.max_len).table();
    v.gamma_system = r_gamma(M, a, opt);
    v.lambda_system = l_lambda(M, a, opt);
    v.tables["H(M)"] = H;
    v.tables["RHom(A/a, M)"] = rh;
    v.tables["A/a (x)^L M"] = tq;
    v.tables["RGamma(M)"] = v.gamma_system->known();
    v.tables["LLambda(M)"] = v.lambda_system->known();
    v.direct_reduced = compare(*v.gamma_system, rh);
    v.direct_torsion = compare(*v.gamma_system, H);
    v.direct_coreduced = compare(*v.lambda_system, tq);
    v.direct_complete = compare(*v.lambda_system, H);

    const std::tuple<const char*, Tri, Tri> pairs[] = {{"reduced", v.d_reduced, v.direct_reduced},
                                                       {"coreduced", v.d_coreduced, v.direct_coreduced},
                                                       {"torsion", v.d_torsion, v.direct_torsion},
                                                       {"complete", v.d_complete, v.direct_complete}};
    for (const auto& [name, c, d] : pairs)
        if (c != Tri::Unknown && d != Tri::Unknown && c != d)
            v.contradictions.push_back(std::string(name) + ": degreewise " + redcor::to_string(c) +
                                       ", cohomology tables " + redcor::to_string(d));
    return v;
}

bool DerivedReport::holds() const {
    for (const auto& c : comparisons)
        if (!c.match) return false;
    return true;
}

bool DerivedReport::range_limited() const {
    for (const auto& c : comparisons)
        if (c.lhs.limited() || c.rhs.limited()) return true;
    return false;
}

std::string DerivedReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : comparisons) {
        os << c.name << ": " << (c.match ? "match" : "mismatch") << '\n';
        os << "  lhs: " << c.lhs.to_string() << '\n';
        os << "  rhs: " << c.rhs.to_string() << '\n';
    }
    return os.str();
}

namespace {

TableComparison comparison(std::string name, const DerivedComplex& lhs, const DerivedComplex& rhs) {
    TableComparison c{std::move(name), lhs.table(), rhs.table(), false};
    c.match = tables_match(c.lhs, c.rhs);
    return c;
}

}  // namespace

DerivedReport idempotence_derived_check(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    Resolution P = quotient_resolution(a, 1, opt.max_len);
    DerivedComplex H = rhom(P, DerivedComplex(M)), T = derived_tensor(P, DerivedComplex(M));
    DerivedReport r;
    r.comparisons.push_back(comparison("RHom(A/a, RHom(A/a, M)) vs RHom(A/a, M)", rhom(P, H), H));
    r.comparisons.push_back(comparison("A/a (x)^L (A/a (x)^L M) vs A/a (x)^L M", derived_tensor(P, T), T));
    return r;
}

DerivedReport composition_check(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    Resolution P = quotient_resolution(a, 1, opt.max_len);
    DerivedComplex H = rhom(P, DerivedComplex(M)), T = derived_tensor(P, DerivedComplex(M));
    DerivedReport r;
    r.comparisons.push_back(comparison("RHom(A/a, A/a (x)^L M) vs A/a (x)^L M", rhom(P, T), T));
    r.comparisons.push_back(comparison("A/a (x)^L RHom(A/a, M) vs RHom(A/a, M)", derived_tensor(P, H), H));
    return r;
}

DerivedReport gm_duality_derived_check(const Complex& M, const Complex& N, const Ideal& a,
                                       const DerivedOptions& opt) {
    if (!is_coreduced_complex(M, a)) throw PreconditionFailed("duality needs a coreduced first argument");
    if (!is_reduced_complex(N, a)) throw PreconditionFailed("duality needs a reduced second argument");
    Resolution P = quotient_resolution(a, 1, opt.max_len);
    DerivedComplex lhs = rhom(derived_tensor(P, DerivedComplex(M)), DerivedComplex(N), opt.max_len);
    DerivedComplex rhs = rhom(DerivedComplex(M), rhom(P, DerivedComplex(N)), opt.max_len);
    DerivedReport r;
    r.comparisons.push_back(comparison("RHom(A/a (x)^L M, N) vs RHom(M, RHom(A/a, N))", lhs, rhs));
    return r;
}

namespace {

// Sum of the shifted stable cohomology modules. Over a hereditary ring every
// complex is quasi-isomorphic to the sum of its shifted cohomology.
std::optional<DerivedComplex> formal_representative(const SystemTable& s, const RingSpec& ring) {
    if (!s.stabilized()) return std::nullopt;
    if (s.degrees.empty()) return DerivedComplex(Complex::concentrated(Module::zero(ring)));
    const int lo = s.degrees.begin()->first, hi = s.degrees.rbegin()->first;
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        auto it = s.degrees.find(n);
        terms.push_back(it == s.degrees.end() ? Module::zero(ring) : Module::from_invariants(ring, *it->second.value));
        if (n > lo) diffs.push_back(Matrix(terms.back().rank(), terms[terms.size() - 2].rank()));
    }
    return DerivedComplex(Complex(ring, lo, terms, diffs));
}

// Over Z/n the system is eventually constant and its stage complex represents it.
std::optional<DerivedComplex> representative(const SystemTable& s, const Complex& M, const Ideal& a,
                                             const DerivedOptions& opt, bool gamma) {
    if (M.ring().is_integers()) return formal_representative(s, M.ring());
    for (const auto& [n, v] : s.degrees)
        if (v.rule != StabilizationRule::ExactConstant) return std::nullopt;
    auto k0 = ideal_power_stabilization(a, opt.k_max);
    if (!k0) return std::nullopt;
    Resolution P = quotient_resolution(a, *k0, opt.max_len);
    DerivedComplex C = gamma ? rhom(P, DerivedComplex(M)) : derived_tensor(P, DerivedComplex(M));
    if (compare(s, C.table()) != Tri::True) return std::nullopt;
    return C;
}

}  // namespace

std::optional<DerivedReport> classical_duality_check(const Complex& M, const Complex& N, const Ideal& a,
                                                     const DerivedOptions& opt) {
    auto gamma = representative(r_gamma(M, a, opt), M, a, opt, true);
    auto lambda = representative(l_lambda(N, a, opt), N, a, opt, false);
    if (!gamma || !lambda) return std::nullopt;
    DerivedReport r;
    r.comparisons.push_back(comparison("RHom(RGamma M, N) vs RHom(M, LLambda N)",
                                       rhom(*gamma, DerivedComplex(N), opt.max_len),
                                       rhom(DerivedComplex(M), *lambda, opt.max_len)));
    return r;
}

std::string MgmDerivedReport::to_string() const {
    std::ostringstream os;
    os << "complete and coreduced: " << redcor::to_string(com_cor) << '\n';
    os << "torsion and reduced: " << redcor::to_string(tor_red) << '\n';
    os << "membership equal: " << (membership_equal() ? "yes" : "no") << (decidable() ? "" : " (undecided)") << '\n';
    os << "RHom(A/a, M) ~ M on cohomology: " << (rhom_fixed ? "yes" : "no") << '\n';
    os << "A/a (x)^L M ~ M on cohomology: " << (tensor_fixed ? "yes" : "no") << '\n';
    return os.str();
}

MgmDerivedReport mgm_derived_check(const Complex& M, const Ideal& a, const DerivedOptions& opt) {
    if (!M.ring().is_integers() && !M.ring().squarefree_modulus())
        throw HypothesisUnmet("finite injective and Tor dimension fail over " + M.ring().to_string());
    MgmDerivedReport r;
    r.verdict = derived_classify(M, a, Basis::Characterization, opt);
    r.com_cor = r.verdict.com_cor();
    r.tor_red = r.verdict.tor_red();
    CohomologyTable H = cohomology_table(M);
    r.rhom_fixed = tables_match(rhom_quotient(DerivedComplex(M), a, opt.max_len).table(), H);
    r.tensor_fixed = tables_match(tensor_quotient(DerivedComplex(M), a, opt.max_len).table(), H);
    return r;
}

}  // namespace redcor
