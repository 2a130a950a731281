#include "redcor/complex.hpp"

#include "redcor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace redcor {

Complex::Complex(RingSpec ring, int lo, std::vector<Module> terms, std::vector<Matrix> diffs)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)), zero_(Module::zero(ring_)) {
    if (terms_.empty()) terms_.push_back(zero_);
    for (const auto& t : terms_) require_same_ring(ring_, t.ring);
    if (diffs.size() > terms_.size()) throw InvalidComplex("too many differentials", lo_);
    diffs.resize(terms_.size() - 1);
    diffs_.reserve(diffs.size());
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        const int n = lo_ + static_cast<int>(k);
        Matrix d = diffs[k];
        if (d.rows() == 0 && d.cols() == 0) d = Matrix(terms_[k + 1].rank(), terms_[k].rank());
        try {
            diffs_.push_back(Morphism(terms_[k], terms_[k + 1], d).matrix());
        } catch (const InvalidMorphism& e) {
            throw InvalidComplex(std::string("invalid differential: ") + e.what(), n);
        }
    }
    validate();
}

void Complex::validate() const {
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        Matrix dd = diffs_[k + 1] * diffs_[k];
        const Module& T = terms_[k + 2];
        for (std::size_t j = 0; j < dd.cols(); ++j)
            if (!T.is_zero_element(dd.column(j)))
                throw InvalidComplex("d∘d is not zero", lo_ + static_cast<int>(k));
    }
}

Complex Complex::zero(const RingSpec& ring) { return Complex(ring, 0, {Module::zero(ring)}, {}); }

Complex Complex::concentrated(const Module& M, int degree) { return Complex(M.ring, degree, {M}, {}); }

Complex Complex::two_term(const Morphism& f, int degree) {
    return Complex(f.source().ring, degree, {f.source(), f.target()}, {f.matrix()});
}

const Module& Complex::term(int n) const {
    if (n < lo_ || n > hi()) return zero_;
    return terms_[static_cast<std::size_t>(n - lo_)];
}

Matrix Complex::diff_matrix(int n) const {
    if (n < lo_ || n >= hi()) return Matrix(term(n + 1).rank(), term(n).rank());
    return diffs_[static_cast<std::size_t>(n - lo_)];
}

Morphism Complex::diff(int n) const { return Morphism(term(n), term(n + 1), diff_matrix(n)); }

bool Complex::is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Module& M) { return M.is_zero(); });
}

std::string Complex::to_string() const {
    std::ostringstream out;
    for (int n = lo_; n <= hi(); ++n) {
        if (n > lo_) out << " --" << diff_matrix(n - 1).to_string() << "--> ";
        out << "[" << n << "] " << term(n).to_string();
    }
    return out.str();
}

ChainMap::ChainMap(Complex source, Complex target, const std::map<int, Matrix>& components)
    : source_(std::move(source)), target_(std::move(target)) {
    require_same_ring(source_.ring(), target_.ring());
    for (int n = lo(); n <= hi(); ++n) {
        auto it = components.find(n);
        Matrix m = it == components.end() ? Matrix(target_.term(n).rank(), source_.term(n).rank()) : it->second;
        try {
            components_[n] = Morphism(source_.term(n), target_.term(n), m).matrix();
        } catch (const InvalidMorphism& e) {
            throw InvalidComplex(std::string("invalid chain map component: ") + e.what(), n);
        }
    }
    for (int n = lo() - 1; n <= hi(); ++n) {
        Matrix lhs = component_matrix(n + 1) * source_.diff_matrix(n);
        Matrix rhs = target_.diff_matrix(n) * component_matrix(n);
        Matrix diff = lhs + (-rhs);
        const Module& T = target_.term(n + 1);
        for (std::size_t j = 0; j < diff.cols(); ++j)
            if (!T.is_zero_element(diff.column(j))) throw InvalidComplex("chain map does not commute with d", n);
    }
}

ChainMap ChainMap::identity(const Complex& C) {
    std::map<int, Matrix> comps;
    for (int n = C.lo(); n <= C.hi(); ++n) comps[n] = Matrix::identity(C.term(n).rank());
    return ChainMap(C, C, comps);
}

ChainMap ChainMap::zero(const Complex& source, const Complex& target) { return ChainMap(source, target, {}); }

Matrix ChainMap::component_matrix(int n) const {
    auto it = components_.find(n);
    if (it == components_.end()) return Matrix(target_.term(n).rank(), source_.term(n).rank());
    return it->second;
}

Morphism ChainMap::component(int n) const { return Morphism(source_.term(n), target_.term(n), component_matrix(n)); }

ChainMap ChainMap::operator+(const ChainMap& o) const {
    std::map<int, Matrix> comps;
    for (int n = lo(); n <= hi(); ++n) comps[n] = component_matrix(n) + o.component_matrix(n);
    return ChainMap(source_, target_, comps);
}

ChainMap ChainMap::operator-() const {
    std::map<int, Matrix> comps;
    for (int n = lo(); n <= hi(); ++n) comps[n] = -component_matrix(n);
    return ChainMap(source_, target_, comps);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, Matrix> comps;
    int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
    for (int n = lo; n <= hi; ++n) comps[n] = g.component_matrix(n) * f.component_matrix(n);
    return ChainMap(f.source(), g.target(), comps);
}

namespace {

Quotient boundaries_in_cycles(const Complex& C, int n, const Submodule& cycles) {
    Matrix in = C.diff_matrix(n - 1);
    Matrix gens(cycles.module().rank(), in.cols());
    for (std::size_t j = 0; j < in.cols(); ++j) gens.set_column(j, cycles.to_sub(in.column(j)));
    return Quotient(cycles.module(), gens);
}

}  // namespace

Cohomology::Cohomology(const Complex& C, int n)
    : cycles_(kernel(C.diff(n))), quotient_(boundaries_in_cycles(C, n, cycles_)) {
    lift_ = cycles_.inclusion().matrix() * quotient_.lift();
}

Vector Cohomology::project(const Vector& cycle) const { return quotient_.project(cycles_.to_sub(cycle)); }

Module cohomology(const Complex& C, int n) { return Cohomology(C, n).module(); }

Morphism induced_map(const ChainMap& f, int n) {
    Cohomology hs(f.source(), n), ht(f.target(), n);
    Matrix fn = f.component_matrix(n);
    Matrix m(ht.module().rank(), hs.module().rank());
    for (std::size_t k = 0; k < hs.module().rank(); ++k) m.set_column(k, ht.project(fn * hs.lift().column(k)));
    return Morphism(hs.module(), ht.module(), m);
}

bool is_quasi_iso(const ChainMap& f) {
    for (int n = f.lo(); n <= f.hi(); ++n)
        if (!is_isomorphism(induced_map(f, n))) return false;
    return true;
}

bool is_acyclic(const Complex& C) {
    for (int n = C.lo(); n <= C.hi(); ++n)
        if (!cohomology(C, n).is_zero()) return false;
    return true;
}

bool same_cohomology(const Complex& A, const Complex& B) {
    int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
    for (int n = lo; n <= hi; ++n)
        if (!isomorphic(cohomology(A, n), cohomology(B, n))) return false;
    return true;
}

bool degreewise_isomorphic(const Complex& A, const Complex& B) {
    int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
    for (int n = lo; n <= hi; ++n)
        if (!isomorphic(A.term(n), B.term(n))) return false;
    return true;
}

Complex shift(const Complex& C, int t) {
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    const bool odd = t % 2 != 0;
    for (int n = C.lo(); n <= C.hi(); ++n) {
        terms.push_back(C.term(n));
        if (n < C.hi()) diffs.push_back(odd ? -C.diff_matrix(n) : C.diff_matrix(n));
    }
    return Complex(C.ring(), C.lo() - t, terms, diffs);
}

ChainMap shift(const ChainMap& f, int t) {
    std::map<int, Matrix> comps;
    for (int n = f.lo(); n <= f.hi(); ++n) comps[n - t] = f.component_matrix(n);
    return ChainMap(shift(f.source(), t), shift(f.target(), t), comps);
}

Complex direct_sum(const Complex& A, const Complex& B) {
    require_same_ring(A.ring(), B.ring());
    int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        terms.push_back(direct_sum(A.term(n), B.term(n)));
        if (n < hi) diffs.push_back(direct_sum(A.diff(n), B.diff(n)).matrix());
    }
    return Complex(A.ring(), lo, terms, diffs);
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
    Complex S = direct_sum(f.source(), g.source()), T = direct_sum(f.target(), g.target());
    std::map<int, Matrix> comps;
    for (int n = std::min(S.lo(), T.lo()); n <= std::max(S.hi(), T.hi()); ++n)
        comps[n] = direct_sum(f.component(n), g.component(n)).matrix();
    return ChainMap(S, T, comps);
}

Complex cone(const ChainMap& f) {
    const Complex& M = f.source();
    const Complex& N = f.target();
    int lo = std::min(M.lo() - 1, N.lo()), hi = std::max(M.hi() - 1, N.hi());
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        terms.push_back(direct_sum(M.term(n + 1), N.term(n)));
        if (n == hi) break;
        const std::size_t m1 = M.term(n + 1).rank(), n0 = N.term(n).rank();
        const std::size_t m2 = M.term(n + 2).rank(), n1 = N.term(n + 1).rank();
        Matrix d(m2 + n1, m1 + n0);
        d.place(0, 0, -M.diff_matrix(n + 1));
        d.place(m2, 0, f.component_matrix(n + 1));
        d.place(m2, m1, N.diff_matrix(n));
        diffs.push_back(d);
    }
    return Complex(M.ring(), lo, terms, diffs);
}

Complex fiber(const ChainMap& f) {
    const Complex& M = f.source();
    const Complex& N = f.target();
    int lo = std::min(M.lo(), N.lo() + 1), hi = std::max(M.hi(), N.hi() + 1);
    std::vector<Module> terms;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        terms.push_back(direct_sum(M.term(n), N.term(n - 1)));
        if (n == hi) break;
        const std::size_t m0 = M.term(n).rank(), nm = N.term(n - 1).rank();
        const std::size_t m1 = M.term(n + 1).rank(), n0 = N.term(n).rank();
        Matrix d(m1 + n0, m0 + nm);
        d.place(0, 0, M.diff_matrix(n));
        d.place(m1, 0, f.component_matrix(n));
        d.place(m1, m0, -N.diff_matrix(n - 1));
        diffs.push_back(d);
    }
    return Complex(M.ring(), lo, terms, diffs);
}

HomComplex::HomComplex(const Complex& M, const Complex& N) : source_(M), target_(N) {
    require_same_ring(M.ring(), N.ring());
    const int lo = N.lo() - M.hi(), hi = N.hi() - M.lo();
    std::vector<Module> terms;
    for (int n = lo; n <= hi; ++n) {
        auto& bl = blocks_[n];
        std::vector<Module> parts;
        std::size_t offset = 0;
        for (int i = M.lo(); i <= M.hi(); ++i) {
            int j = i + n;
            if (j < N.lo() || j > N.hi()) continue;
            HomModule h(M.term(i), N.term(j));
            bl.push_back({i, j, h, offset});
            offset += h.module().rank();
            parts.push_back(h.module());
        }
        terms.push_back(parts.empty() ? Module::zero(M.ring()) : direct_sum(parts));
    }
    std::vector<Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        const auto& from = blocks_[n];
        const auto& to = blocks_[n + 1];
        auto find = [&](int i) -> const Block* {
            for (const auto& b : to)
                if (b.i == i) return &b;
            return nullptr;
        };
        Matrix d(terms[static_cast<std::size_t>(n + 1 - lo)].rank(), terms[static_cast<std::size_t>(n - lo)].rank());
        for (const auto& b : from) {
            const Block* pre = find(b.i - 1);   // phi . d_M^(i-1)
            const Block* post = find(b.i);      // d_N^j . phi
            Matrix dM = M.diff_matrix(b.i - 1);
            Matrix dN = N.diff_matrix(b.j);
            const bool negative = (b.i + 1) % 2 != 0;
            Vector e(b.hom.module().rank());
            for (std::size_t s = 0; s < e.size(); ++s) {
                e[s] = 1;
                Matrix phi = b.hom.evaluate(e);
                e[s] = 0;
                const std::size_t col = b.offset + s;
                if (pre) {
                    Vector c = pre->hom.coordinates(phi * dM);
                    for (std::size_t r = 0; r < c.size(); ++r) d(pre->offset + r, col) += c[r];
                }
                if (post) {
                    Matrix psi = dN * phi;
                    Vector c = post->hom.coordinates(negative ? -psi : psi);
                    for (std::size_t r = 0; r < c.size(); ++r) d(post->offset + r, col) += c[r];
                }
            }
        }
        diffs.push_back(d);
    }
    complex_ = Complex(M.ring(), lo, terms, diffs);
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int n) const {
    static const std::vector<Block> none;
    auto it = blocks_.find(n);
    return it == blocks_.end() ? none : it->second;
}

Matrix HomComplex::component(int n, const Vector& x, int i) const {
    for (const auto& b : blocks(n)) {
        if (b.i != i) continue;
        Vector c(x.begin() + static_cast<std::ptrdiff_t>(b.offset),
                 x.begin() + static_cast<std::ptrdiff_t>(b.offset + b.hom.module().rank()));
        return b.hom.evaluate(c);
    }
    return Matrix(target_.term(i + n).rank(), source_.term(i).rank());
}

Vector HomComplex::element(int n, const std::map<int, Matrix>& components) const {
    Vector x(complex_.term(n).rank());
    for (const auto& b : blocks(n)) {
        auto it = components.find(b.i);
        if (it == components.end()) continue;
        Vector c = b.hom.coordinates(it->second);
        for (std::size_t r = 0; r < c.size(); ++r) x[b.offset + r] = c[r];
    }
    return x;
}

TensorComplex::TensorComplex(const Complex& M, const Complex& N) {
    require_same_ring(M.ring(), N.ring());
    const int lo = M.lo() + N.lo(), hi = M.hi() + N.hi();
    std::vector<Module> terms;
    for (int n = lo; n <= hi; ++n) {
        auto& bl = blocks_[n];
        std::vector<Module> parts;
        std::size_t offset = 0;
        for (int i = M.lo(); i <= M.hi(); ++i) {
            int j = n - i;
            if (j < N.lo() || j > N.hi()) continue;
            TensorModule t(M.term(i), N.term(j));
            bl.push_back({i, j, t, offset});
            offset += t.module().rank();
            parts.push_back(t.module());
        }
        terms.push_back(parts.empty() ? Module::zero(M.ring()) : direct_sum(parts));
    }
    std::vector<Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
        const auto& to = blocks_[n + 1];
        auto find = [&](int i) -> const Block* {
            for (const auto& b : to)
                if (b.i == i) return &b;
            return nullptr;
        };
        Matrix d(terms[static_cast<std::size_t>(n + 1 - lo)].rank(), terms[static_cast<std::size_t>(n - lo)].rank());
        for (const auto& b : blocks_[n]) {
            const Block* first = find(b.i + 1);  // d_M (x) id
            const Block* second = find(b.i);     // (-1)^i id (x) d_N
            Matrix dM = M.diff_matrix(b.i);
            Matrix dN = N.diff_matrix(b.j);
            const Int sign = b.i % 2 == 0 ? 1 : -1;
            for (std::size_t s = 0; s < b.tensor.slots().size(); ++s) {
                auto [k, l] = b.tensor.slots()[s];
                const std::size_t col = b.offset + s;
                if (first)
                    for (std::size_t p = 0; p < dM.rows(); ++p) {
                        if (dM(p, k) == 0) continue;
                        long t = first->tensor.slot(p, l);
                        if (t >= 0) d(first->offset + static_cast<std::size_t>(t), col) += dM(p, k);
                    }
                if (second)
                    for (std::size_t q = 0; q < dN.rows(); ++q) {
                        if (dN(q, l) == 0) continue;
                        long t = second->tensor.slot(k, q);
                        if (t >= 0) d(second->offset + static_cast<std::size_t>(t), col) += sign * dN(q, l);
                    }
            }
        }
        diffs.push_back(d);
    }
    complex_ = Complex(M.ring(), lo, terms, diffs);
}

const std::vector<TensorComplex::Block>& TensorComplex::blocks(int n) const {
    static const std::vector<Block> none;
    auto it = blocks_.find(n);
    return it == blocks_.end() ? none : it->second;
}

ChainMap hom_complex_map(const HomComplex& from, const HomComplex& to, const ChainMap& f, const ChainMap& g) {
    const Complex& A = from.complex();
    const Complex& B = to.complex();
    std::map<int, Matrix> comps;
    for (int n = std::min(A.lo(), B.lo()); n <= std::max(A.hi(), B.hi()); ++n) {
        Matrix m(B.term(n).rank(), A.term(n).rank());
        for (const auto& b : from.blocks(n)) {
            const HomComplex::Block* tb = nullptr;
            for (const auto& c : to.blocks(n))
                if (c.i == b.i) tb = &c;
            if (!tb) continue;
            Morphism part = hom_map(b.hom, tb->hom, f.component_matrix(b.i), g.component_matrix(b.j));
            m.place(tb->offset, b.offset, part.matrix());
        }
        comps[n] = m;
    }
    return ChainMap(A, B, comps);
}

ChainMap tensor_complex_map(const TensorComplex& from, const TensorComplex& to, const ChainMap& f, const ChainMap& g) {
    const Complex& A = from.complex();
    const Complex& B = to.complex();
    std::map<int, Matrix> comps;
    for (int n = std::min(A.lo(), B.lo()); n <= std::max(A.hi(), B.hi()); ++n) {
        Matrix m(B.term(n).rank(), A.term(n).rank());
        for (const auto& b : from.blocks(n)) {
            const TensorComplex::Block* tb = nullptr;
            for (const auto& c : to.blocks(n))
                if (c.i == b.i) tb = &c;
            if (!tb) continue;
            Morphism part = tensor_map(b.tensor, tb->tensor, f.component_matrix(b.i), g.component_matrix(b.j));
            m.place(tb->offset, b.offset, part.matrix());
        }
        comps[n] = m;
    }
    return ChainMap(A, B, comps);
}

Matrix restricted_matrix(const Morphism& f, const Submodule& A, const Submodule& B) {
    Matrix m(B.module().rank(), A.module().rank());
    const Matrix& incl = A.inclusion().matrix();
    for (std::size_t k = 0; k < A.module().rank(); ++k) m.set_column(k, B.to_sub(f.matrix() * incl.column(k)));
    return m;
}

Matrix quotient_matrix(const Morphism& f, const Quotient& P, const Quotient& Q) {
    Matrix m(Q.module().rank(), P.module().rank());
    for (std::size_t k = 0; k < P.module().rank(); ++k) m.set_column(k, Q.project(f.matrix() * P.lift().column(k)));
    return m;
}

}  // namespace redcor
