#include "redcor/systems.hpp"

#include "redcor/errors.hpp"

#include <sstream>

namespace redcor {

namespace {

void check_height(std::size_t stages, std::size_t transitions) {
    if (stages < 2) throw PreconditionFailed("a truncated system needs at least two stages");
    if (transitions + 1 != stages)
        throw PreconditionFailed("a system with " + std::to_string(stages) + " stages needs " +
                                 std::to_string(stages - 1) + " transitions");
}

// Offsets of each summand's generators in degree n of direct_sum(parts).
std::vector<std::size_t> offsets(const std::vector<Complex>& parts, int n) {
    std::vector<std::size_t> out;
    std::size_t at = 0;
    for (const auto& p : parts) {
        out.push_back(at);
        at += p.term(n).rank();
    }
    out.push_back(at);
    return out;
}

}  // namespace

DirectSystem::DirectSystem(std::vector<Complex> s, std::vector<ChainMap> t)
    : stages(std::move(s)), transitions(std::move(t)) {
    check_height(stages.size(), transitions.size());
    for (std::size_t n = 0; n < transitions.size(); ++n)
        if (!(transitions[n].source() == stages[n]) || !(transitions[n].target() == stages[n + 1]))
            throw PreconditionFailed("transition " + std::to_string(n + 1) + " does not connect consecutive stages");
}

DirectSystem DirectSystem::constant(const Complex& C, unsigned height) {
    return DirectSystem(std::vector<Complex>(height, C), std::vector<ChainMap>(height - 1, ChainMap::identity(C)));
}

InverseSystem::InverseSystem(std::vector<Complex> s, std::vector<ChainMap> t)
    : stages(std::move(s)), transitions(std::move(t)) {
    check_height(stages.size(), transitions.size());
    for (std::size_t n = 0; n < transitions.size(); ++n)
        if (!(transitions[n].source() == stages[n + 1]) || !(transitions[n].target() == stages[n]))
            throw PreconditionFailed("transition " + std::to_string(n + 1) + " does not connect consecutive stages");
}

InverseSystem InverseSystem::constant(const Complex& C, unsigned height) {
    return InverseSystem(std::vector<Complex>(height, C), std::vector<ChainMap>(height - 1, ChainMap::identity(C)));
}

Complex direct_sum(const std::vector<Complex>& parts) {
    if (parts.empty()) throw PreconditionFailed("direct sum of an empty list");
    Complex out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out = direct_sum(out, parts[k]);
    return out;
}

ChainMap telescope_map(const DirectSystem& D) {
    const std::size_t K = D.stages.size();
    std::vector<Complex> head(D.stages.begin(), D.stages.end() - 1);
    Complex S = direct_sum(head), T = direct_sum(D.stages);
    std::map<int, Matrix> comps;
    for (int n = std::min(S.lo(), T.lo()); n <= std::max(S.hi(), T.hi()); ++n) {
        auto src = offsets(head, n), tgt = offsets(D.stages, n);
        Matrix m(T.term(n).rank(), S.term(n).rank());
        for (std::size_t k = 0; k + 1 < K; ++k) {
            const std::size_t r = D.stages[k].term(n).rank();
            m.place(tgt[k], src[k], Matrix::identity(r));
            m.place(tgt[k + 1], src[k], -D.transitions[k].component_matrix(n));
        }
        comps[n] = m;
    }
    return ChainMap(S, T, comps);
}

Complex telescope(const DirectSystem& D) { return cone(telescope_map(D)); }

ChainMap microscope_map(const InverseSystem& B) {
    const std::size_t K = B.stages.size();
    std::vector<Complex> head(B.stages.begin(), B.stages.end() - 1);
    Complex S = direct_sum(B.stages), T = direct_sum(head);
    std::map<int, Matrix> comps;
    for (int n = std::min(S.lo(), T.lo()); n <= std::max(S.hi(), T.hi()); ++n) {
        auto src = offsets(B.stages, n), tgt = offsets(head, n);
        Matrix m(T.term(n).rank(), S.term(n).rank());
        for (std::size_t k = 0; k + 1 < K; ++k) {
            const std::size_t r = B.stages[k].term(n).rank();
            m.place(tgt[k], src[k], Matrix::identity(r));
            m.place(tgt[k], src[k + 1], -B.transitions[k].component_matrix(n));
        }
        comps[n] = m;
    }
    return ChainMap(S, T, comps);
}

Complex microscope(const InverseSystem& B) { return fiber(microscope_map(B)); }

namespace {

Complex koszul_factor(const RingSpec& ring, const Int& x, unsigned power) {
    Module A = Module::free(ring, 1);
    return Complex::two_term(Morphism::scalar(A, pow(x, power)), -1);
}

void check_sequence(const Vector& seq) {
    if (seq.empty()) throw PreconditionFailed("Koszul complex of an empty sequence");
    if (seq.size() > kMaxKoszulLength)
        throw PreconditionFailed("Koszul sequences are limited to length " + std::to_string(kMaxKoszulLength));
}

}  // namespace

Complex koszul_complex(const RingSpec& ring, const Vector& seq, unsigned power) {
    check_sequence(seq);
    if (power == 0) throw PreconditionFailed("Koszul power must be positive");
    Complex K = koszul_factor(ring, seq[0], power);
    for (std::size_t l = 1; l < seq.size(); ++l) K = tensor_complex(K, koszul_factor(ring, seq[l], power));
    return K;
}

KoszulTower::KoszulTower(const RingSpec& ring, Vector seq, unsigned height) : ring_(ring), seq_(std::move(seq)) {
    check_sequence(seq_);
    if (height == 0) throw PreconditionFailed("Koszul tower height must be positive");
    for (auto& x : seq_) x = reduce_mod(x, ring_.modulus);
    for (unsigned i = 1; i <= height; ++i) stages_.push_back(koszul_complex(ring_, seq_, i));
}

ChainMap KoszulTower::transition(unsigned j, unsigned i) const {
    if (i < 1 || j < i || j > height())
        throw PreconditionFailed("transition needs 1 <= i <= j <= height, got j = " + std::to_string(j) +
                                 ", i = " + std::to_string(i));
    auto factor = [&](const Int& x) {
        Complex from = koszul_factor(ring_, x, j), to = koszul_factor(ring_, x, i);
        Matrix mult(1, 1);
        mult(0, 0) = pow(x, j - i);
        return ChainMap(from, to, {{-1, mult}, {0, Matrix::identity(1)}});
    };
    ChainMap f = factor(seq_[0]);
    Complex from = koszul_factor(ring_, seq_[0], j), to = koszul_factor(ring_, seq_[0], i);
    for (std::size_t l = 1; l < seq_.size(); ++l) {
        Complex from_l = koszul_factor(ring_, seq_[l], j), to_l = koszul_factor(ring_, seq_[l], i);
        TensorComplex TF(from, from_l), TT(to, to_l);
        f = tensor_complex_map(TF, TT, f, factor(seq_[l]));
        from = TF.complex();
        to = TT.complex();
    }
    return f;
}

ProZeroResult pro_zero_check(const KoszulTower& tower, int q, unsigned window) {
    if (q >= 0) throw PreconditionFailed("pro-zero check is for negative degrees");
    if (window > tower.height()) throw PreconditionFailed("window exceeds the tower height");
    ProZeroResult out;
    out.degree = q;
    const unsigned last = tower.height() > window ? tower.height() - window : 1;
    out.witnessed = true;
    for (unsigned i = 1; i <= last; ++i) {
        std::optional<unsigned> hit;
        for (unsigned j = i; j <= std::min(i + window, tower.height()) && !hit; ++j)
            if (induced_map(tower.transition(j, i), q).is_zero()) hit = j;
        if (!hit) {
            out.witnessed = false;
            out.detail = "inconclusive: no zero map on H^" + std::to_string(q) + " from stages " + std::to_string(i) +
                         ".." + std::to_string(std::min(i + window, tower.height())) + " to stage " +
                         std::to_string(i);
            out.witness.clear();
            return out;
        }
        out.witness[i] = *hit;
    }
    return out;
}

bool WprReport::witnessed() const {
    for (const auto& d : degrees)
        if (!d.witnessed) return false;
    return true;
}

std::string WprReport::to_string() const {
    std::ostringstream os;
    for (const auto& d : degrees) {
        os << "H^" << d.degree << ": ";
        if (!d.witnessed) {
            os << d.detail << '\n';
            continue;
        }
        os << "witnessed";
        for (const auto& [i, j] : d.witness) os << ' ' << i << "->" << j;
        os << '\n';
    }
    return os.str();
}

WprReport wpr_check(const RingSpec& ring, const Vector& seq, unsigned height, unsigned window) {
    KoszulTower tower(ring, seq, height);
    WprReport report;
    for (int q = -static_cast<int>(seq.size()); q <= -1; ++q) report.degrees.push_back(pro_zero_check(tower, q, window));
    return report;
}

}  // namespace redcor
