#include "redcor/module.hpp"

#include "redcor/errors.hpp"

#include <sstream>

namespace redcor {

std::string Invariants::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& d : torsion) {
        out << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank > 0) {
        out << (first ? "" : " + ") << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Module::Module(RingSpec r, Vector o) : ring(std::move(r)), orders(std::move(o)) {
    for (auto& d : orders) {
        d = abs(d);
        if (ring.is_integers()) continue;
        if (d == 0 || !divides(d, ring.modulus))
            throw Error("order " + d.get_str() + " does not divide the modulus " + ring.modulus.get_str());
    }
}

Module Module::free(const RingSpec& r, std::size_t rank) { return Module(r, Vector(rank, r.free_order())); }

Module Module::from_presentation(const RingSpec& r, const Matrix& relations) {
    Matrix R = relations;
    if (!r.is_integers()) R = R.hconcat(Matrix::identity(relations.rows()).scaled(r.modulus));
    SmithForm s = smith_normal_form(R);
    Vector orders;
    for (std::size_t i = 0; i < R.rows(); ++i) {
        Int d = i < s.rank ? s.diagonal[i] : Int(0);
        if (d != 1) orders.push_back(d);
    }
    return Module(r, orders).canonical();
}

Module Module::from_invariants(const RingSpec& r, const Invariants& inv) {
    Vector orders = inv.torsion;
    for (std::size_t i = 0; i < inv.free_rank; ++i) orders.push_back(Int(0));
    return Module(r, orders);
}

bool Module::is_zero() const {
    for (const auto& d : orders)
        if (d != 1) return false;
    return true;
}

bool Module::is_finite() const {
    for (const auto& d : orders)
        if (d == 0) return false;
    return true;
}

Int Module::size() const {
    if (!is_finite()) throw NotFiniteModule("module " + to_string() + " is infinite");
    Int s = 1;
    for (const auto& d : orders) s *= d;
    return s;
}

Int Module::exponent() const {
    if (!is_finite()) throw NotFiniteModule("module " + to_string() + " is infinite");
    Int e = 1;
    for (const auto& d : orders) e = lcm(e, d);
    return e;
}

Invariants Module::invariants() const {
    Invariants inv;
    Vector finite;
    for (const auto& d : orders) {
        if (d == 0)
            ++inv.free_rank;
        else if (d != 1)
            finite.push_back(d);
    }
    if (!finite.empty()) {
        SmithForm s = smith_normal_form(Matrix::diagonal(finite));
        for (const auto& d : s.diagonal)
            if (d != 1) inv.torsion.push_back(d);
    }
    return inv;
}

Vector Module::normalize(Vector x) const {
    if (x.size() != orders.size()) throw Error("element has wrong length for " + to_string());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = reduce_mod(x[i], orders[i]);
    return x;
}

bool Module::is_zero_element(const Vector& x) const {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!divides(orders[i], x[i])) return false;
    return true;
}

Int Module::element_order(const Vector& x) const {
    Int o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (orders[i] == 0) {
            if (x[i] != 0) return 0;
            continue;
        }
        o = lcm(o, exact_div(orders[i], gcd(orders[i], x[i])));
    }
    return o;
}

Matrix Module::relations() const { return Matrix::diagonal(orders); }

std::string Module::to_string() const { return invariants().to_string(); }

bool isomorphic(const Module& a, const Module& b) { return a.ring == b.ring && a.invariants() == b.invariants(); }

Module direct_sum(const Module& a, const Module& b) {
    require_same_ring(a.ring, b.ring);
    Vector o = a.orders;
    o.insert(o.end(), b.orders.begin(), b.orders.end());
    return Module(a.ring, o);
}

Module direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw Error("direct_sum of no modules needs a ring");
    Module s = Module::zero(parts.front().ring);
    for (const auto& p : parts) s = direct_sum(s, p);
    return s;
}

bool is_compatible(const Module& source, const Module& target, const Matrix& m) {
    if (m.rows() != target.rank() || m.cols() != source.rank()) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0 && !divides(target.orders[i], source.orders[j] * m(i, j))) return false;
    return true;
}

Morphism::Morphism(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    require_same_ring(source_.ring, target_.ring);
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
        throw InvalidMorphism("morphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                              std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.rank()) + "x" +
                              std::to_string(source_.rank()));
    if (!is_compatible(source_, target_, matrix_))
        throw InvalidMorphism("matrix " + matrix_.to_string() + " does not respect the relations of " +
                              source_.to_string());
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(i, j) = reduce_mod(matrix_(i, j), target_.orders[i]);
}

Morphism Morphism::identity(const Module& M) { return Morphism(M, M, Matrix::identity(M.rank())); }

Morphism Morphism::zero(const Module& source, const Module& target) {
    return Morphism(source, target, Matrix(target.rank(), source.rank()));
}

Morphism Morphism::scalar(const Module& M, const Int& c) {
    return Morphism(M, M, Matrix::identity(M.rank()).scaled(c));
}

Vector Morphism::apply(const Vector& x) const { return target_.normalize(matrix_ * x); }

Morphism Morphism::operator+(const Morphism& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) throw InvalidMorphism("sum of morphisms with different ends");
    return Morphism(source_, target_, matrix_ + o.matrix_);
}

Morphism Morphism::operator-() const { return Morphism(source_, target_, -matrix_); }

Morphism Morphism::scaled(const Int& c) const { return Morphism(source_, target_, matrix_.scaled(c)); }

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target() == g.source())) throw InvalidMorphism("composition of non-composable morphisms");
    return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
    Matrix m(f.target().rank() + g.target().rank(), f.source().rank() + g.source().rank());
    m.place(0, 0, f.matrix());
    m.place(f.target().rank(), f.source().rank(), g.matrix());
    return Morphism(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), m);
}

Submodule::Submodule(const Module& ambient, const Matrix& generators) : ambient_(ambient), generators_(generators) {
    const std::size_t r = ambient.rank();
    if (generators.rows() != r) throw Error("submodule generators have the wrong length");
    SmithForm s = smith_normal_form(generators.hconcat(ambient.relations()));
    U_ = s.U;
    divisors_ = s.diagonal;
    lattice_rank_ = s.rank;

    // ambient relations in the coordinates of the lattice basis
    Matrix Y(lattice_rank_, r);
    for (std::size_t j = 0; j < r; ++j) {
        if (ambient.orders[j] == 0) continue;
        for (std::size_t i = 0; i < lattice_rank_; ++i)
            Y(i, j) = exact_div(U_(i, j) * ambient.orders[j], divisors_[i]);
    }
    SmithForm s2 = smith_normal_form(Y);
    U2_ = s2.U;

    Matrix basis(r, lattice_rank_);
    for (std::size_t j = 0; j < lattice_rank_; ++j)
        for (std::size_t i = 0; i < r; ++i) basis(i, j) = s.U_inv(i, j) * divisors_[j];
    Matrix full_incl = basis * s2.U_inv;

    Vector orders;
    for (std::size_t i = 0; i < lattice_rank_; ++i) {
        Int d = i < s2.rank ? s2.diagonal[i] : Int(0);
        if (d == 1) continue;
        kept_.push_back(i);
        orders.push_back(d);
    }
    module_ = Module(ambient.ring, orders);
    Matrix incl(r, kept_.size());
    for (std::size_t c = 0; c < kept_.size(); ++c)
        for (std::size_t i = 0; i < r; ++i) incl(i, c) = full_incl(i, kept_[c]);
    inclusion_ = Morphism(module_, ambient_, incl);
}

bool Submodule::contains(const Vector& x) const {
    Vector y = U_ * x;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < lattice_rank_) {
            if (!divides(divisors_[i], y[i])) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

bool Submodule::contains(const Submodule& other) const {
    for (std::size_t j = 0; j < other.generators_.cols(); ++j)
        if (!contains(other.generators_.column(j))) return false;
    return true;
}

Vector Submodule::to_sub(const Vector& x) const {
    Vector y = U_ * x;
    Vector c(lattice_rank_);
    for (std::size_t i = 0; i < lattice_rank_; ++i) {
        if (!divides(divisors_[i], y[i])) throw Error("element does not lie in the submodule");
        c[i] = exact_div(y[i], divisors_[i]);
    }
    for (std::size_t i = lattice_rank_; i < y.size(); ++i)
        if (y[i] != 0) throw Error("element does not lie in the submodule");
    Vector z = U2_ * c;
    Vector out(kept_.size());
    for (std::size_t k = 0; k < kept_.size(); ++k) out[k] = z[kept_[k]];
    return module_.normalize(out);
}

bool same_submodule(const Submodule& a, const Submodule& b) { return a.contains(b) && b.contains(a); }

Quotient::Quotient(const Module& ambient, const Matrix& generators) : ambient_(ambient) {
    const std::size_t r = ambient.rank();
    if (generators.rows() != r) throw Error("quotient generators have the wrong length");
    SmithForm s = smith_normal_form(generators.hconcat(ambient.relations()));
    std::vector<std::size_t> kept;
    Vector orders;
    for (std::size_t i = 0; i < r; ++i) {
        Int d = i < s.rank ? s.diagonal[i] : Int(0);
        if (d == 1) continue;
        kept.push_back(i);
        orders.push_back(d);
    }
    module_ = Module(ambient.ring, orders);
    Matrix proj(kept.size(), r), lift(r, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k)
        for (std::size_t j = 0; j < r; ++j) {
            proj(k, j) = s.U(kept[k], j);
            lift(j, k) = s.U_inv(j, kept[k]);
        }
    projection_ = Morphism(ambient_, module_, proj);
    lift_ = lift;
}

Submodule kernel(const Morphism& f) {
    const std::size_t s = f.source().rank();
    Matrix K = integer_kernel(f.matrix().hconcat(f.target().relations()));
    return Submodule(f.source(), K.row_range(0, s));
}

Submodule image(const Morphism& f) { return Submodule(f.target(), f.matrix()); }

Quotient cokernel(const Morphism& f) { return Quotient(f.target(), f.matrix()); }

bool is_injective(const Morphism& f) { return kernel(f).module().is_zero(); }

bool is_surjective(const Morphism& f) { return cokernel(f).module().is_zero(); }

bool is_isomorphism(const Morphism& f) { return is_injective(f) && is_surjective(f); }

std::optional<Vector> preimage(const Morphism& f, const Vector& y) {
    auto z = solve(f.matrix().hconcat(f.target().relations()), y);
    if (!z) return std::nullopt;
    z->resize(f.source().rank());
    return f.source().normalize(*z);
}

HomModule::HomModule(const Module& M, const Module& N) : source_(M), target_(N) {
    require_same_ring(M.ring, N.ring);
    Vector orders;
    for (std::size_t i = 0; i < N.rank(); ++i)
        for (std::size_t j = 0; j < M.rank(); ++j) {
            const Int& d = M.orders[j];
            const Int& e = N.orders[i];
            if (d != 0 && e == 0) continue;  // no nonzero maps Z/d -> Z
            Int g = gcd(d, e);
            if (g == 1) continue;
            Int scale = (d == 0 || e == 0) ? Int(1) : exact_div(e, g);
            slots_.push_back({i, j, scale});
            orders.push_back(g);
        }
    module_ = Module(M.ring, orders);
}

Matrix HomModule::evaluate(const Vector& coords) const {
    Matrix m(target_.rank(), source_.rank());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const Slot& sl = slots_[s];
        m(sl.row, sl.col) = reduce_mod(coords[s] * sl.scale, target_.orders[sl.row]);
    }
    return m;
}

Vector HomModule::coordinates(const Matrix& m) const {
    Vector c(slots_.size());
    for (std::size_t s = 0; s < slots_.size(); ++s) {
        const Slot& sl = slots_[s];
        Int x = reduce_mod(m(sl.row, sl.col), target_.orders[sl.row]);
        if (!divides(sl.scale, x)) throw InvalidMorphism("matrix is not a homomorphism");
        c[s] = exact_div(x, sl.scale);
    }
    return module_.normalize(c);
}

Morphism hom_map(const HomModule& from, const HomModule& to, const Matrix& pre, const Matrix& post) {
    const std::size_t n = from.module().rank();
    Matrix m(to.module().rank(), n);
    Vector e(n);
    for (std::size_t s = 0; s < n; ++s) {
        e[s] = 1;
        Matrix phi = from.evaluate(e);
        e[s] = 0;
        m.set_column(s, to.coordinates(post * phi * pre));
    }
    return Morphism(from.module(), to.module(), m);
}

TensorModule::TensorModule(const Module& M, const Module& N)
    : left_(M), right_(N), index_(M.rank() * N.rank(), -1) {
    require_same_ring(M.ring, N.ring);
    Vector orders;
    for (std::size_t i = 0; i < M.rank(); ++i)
        for (std::size_t j = 0; j < N.rank(); ++j) {
            Int g = gcd(M.orders[i], N.orders[j]);
            if (g == 1) continue;
            index_[i * N.rank() + j] = static_cast<long>(slots_.size());
            slots_.emplace_back(i, j);
            orders.push_back(g);
        }
    module_ = Module(M.ring, orders);
}

Vector TensorModule::pure(std::size_t i, std::size_t j) const {
    Vector v(slots_.size());
    long s = slot(i, j);
    if (s >= 0) v[static_cast<std::size_t>(s)] = 1;
    return v;
}

Morphism tensor_map(const TensorModule& from, const TensorModule& to, const Matrix& f, const Matrix& g) {
    Matrix m(to.module().rank(), from.module().rank());
    for (std::size_t s = 0; s < from.slots().size(); ++s) {
        auto [i, j] = from.slots()[s];
        for (std::size_t k = 0; k < f.rows(); ++k) {
            if (f(k, i) == 0) continue;
            for (std::size_t l = 0; l < g.rows(); ++l) {
                if (g(l, j) == 0) continue;
                long t = to.slot(k, l);
                if (t >= 0) m(static_cast<std::size_t>(t), s) += f(k, i) * g(l, j);
            }
        }
    }
    return Morphism(from.module(), to.module(), m);
}

Module quotient_ring(const Ideal& a) { return Module::cyclic(a.ring(), a.principal()); }

Module quotient_ring_power(const Ideal& a, unsigned k) { return Module::cyclic(a.ring(), principal_power(a, k)); }

Submodule annihilator_submodule(const Module& M, const Ideal& a) {
    const auto& gens = a.generators();
    std::vector<Module> copies(gens.size(), M);
    Module target = direct_sum(copies);
    Matrix m(target.rank(), M.rank());
    for (std::size_t g = 0; g < gens.size(); ++g) m.place(g * M.rank(), 0, Matrix::identity(M.rank()).scaled(gens[g]));
    return kernel(Morphism(M, target, m));
}

Submodule scalar_submodule(const Module& M, const Ideal& a) {
    const auto& gens = a.generators();
    Matrix m(M.rank(), M.rank() * gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) m.place(0, g * M.rank(), Matrix::identity(M.rank()).scaled(gens[g]));
    return Submodule(M, m);
}

Submodule annihilator_of_power(const Module& M, const Ideal& a, unsigned k) {
    return kernel(Morphism::scalar(M, principal_power(a, k)));
}

Submodule power_multiple(const Module& M, const Ideal& a, unsigned k) {
    return Submodule(M, Matrix::identity(M.rank()).scaled(principal_power(a, k)));
}

bool is_reduced_module(const Module& M, const Ideal& a) {
    return same_submodule(annihilator_submodule(M, a), annihilator_submodule(M, ideal_power(a, 2)));
}

bool is_coreduced_module(const Module& M, const Ideal& a) {
    return same_submodule(scalar_submodule(M, a), scalar_submodule(M, ideal_power(a, 2)));
}

bool annihilated_by(const Module& M, const Ideal& a) {
    for (const auto& g : a.generators())
        for (const auto& d : M.orders)
            if (!divides(d, g)) return false;
    return true;
}

GammaModule gamma_module(const Module& M, const Ideal& a, unsigned k_max) {
    Submodule prev = annihilator_of_power(M, a, 1);
    for (unsigned k = 1; k <= k_max; ++k) {
        Submodule next = annihilator_of_power(M, a, k + 1);
        if (same_submodule(prev, next)) return {prev, k};
        prev = std::move(next);
    }
    throw NotStabilized("annihilator chain of " + M.to_string() + " did not settle by k = " + std::to_string(k_max));
}

std::optional<unsigned> lambda_stabilization(const Module& M, const Ideal& a, unsigned k_max) {
    Submodule prev = power_multiple(M, a, 1);
    for (unsigned k = 1; k <= k_max; ++k) {
        Submodule next = power_multiple(M, a, k + 1);
        if (same_submodule(prev, next)) return k;
        prev = std::move(next);
    }
    return std::nullopt;
}

LambdaModule lambda_module(const Module& M, const Ideal& a, unsigned k_max) {
    auto k0 = lambda_stabilization(M, a, k_max);
    if (!k0)
        throw NotStabilized("adic tower of " + M.to_string() + " over " + a.to_string() + " did not settle by k = " +
                            std::to_string(k_max));
    return {Quotient(M, Matrix::identity(M.rank()).scaled(principal_power(a, *k0))), *k0};
}

Module matlis_coefficient(const RingSpec& ring, const Int& exponent) {
    return ring.is_integers() ? Module::cyclic(ring, exponent) : Module::cyclic(ring, ring.modulus);
}

Module matlis_dual(const Module& M) {
    if (M.ring.is_integers() && !M.is_finite())
        throw NotFiniteModule("Matlis dual over Z needs a finite module, got " + M.to_string());
    Int e = M.ring.is_integers() ? M.exponent() : M.ring.modulus;
    return HomModule(M, matlis_coefficient(M.ring, e)).module();
}

}  // namespace redcor
