#pragma once

#include "redcor/matrix.hpp"
#include "redcor/ring.hpp"
#include "redcor/smith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redcor {

// Invariant-factor normal form: torsion factors d_1 | d_2 | ... (all > 1) plus free rank.
struct Invariants {
    Vector torsion;
    std::size_t free_rank = 0;
    bool operator==(const Invariants&) const = default;
    std::string to_string() const;
};

// A finitely generated module written as a direct sum of cyclic modules
// Z/orders[0] + Z/orders[1] + ...; order 0 means a free summand over Z.
// Over Z/n every order divides n. Order 1 summands are allowed and trivial.
struct Module {
    RingSpec ring;
    Vector orders;

    Module() = default;
    Module(RingSpec r, Vector o);

    static Module zero(const RingSpec& r) { return Module(r, {}); }
    static Module cyclic(const RingSpec& r, const Int& order) { return Module(r, {order}); }
    static Module free(const RingSpec& r, std::size_t rank);
    // The module presented by the relation columns of R on `generators` generators.
    static Module from_presentation(const RingSpec& r, const Matrix& relations);
    // Canonical module with the given invariants.
    static Module from_invariants(const RingSpec& r, const Invariants& inv);

    std::size_t rank() const { return orders.size(); }
    bool is_zero() const;
    bool is_finite() const;
    // Number of elements; requires is_finite().
    Int size() const;
    // lcm of the orders; requires is_finite().
    Int exponent() const;

    Invariants invariants() const;
    Module canonical() const { return from_invariants(ring, invariants()); }

    Vector normalize(Vector x) const;
    bool is_zero_element(const Vector& x) const;
    // Order of an element (0 for infinite order).
    Int element_order(const Vector& x) const;
    // Relation columns diag(orders).
    Matrix relations() const;

    std::string to_string() const;
    bool operator==(const Module& o) const { return ring == o.ring && orders == o.orders; }
};

bool isomorphic(const Module& a, const Module& b);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts);

// A homomorphism given by its matrix on generators: column j is the image of
// the j-th generator of the source, reduced modulo the target orders.
class Morphism {
public:
    Morphism() = default;
    Morphism(Module source, Module target, Matrix matrix);

    static Morphism identity(const Module& M);
    static Morphism zero(const Module& source, const Module& target);
    static Morphism scalar(const Module& M, const Int& c);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

    Vector apply(const Vector& x) const;
    bool is_zero() const { return matrix_.is_zero(); }

    Morphism operator+(const Morphism& o) const;
    Morphism operator-() const;
    Morphism scaled(const Int& c) const;
    bool operator==(const Morphism& o) const = default;

private:
    Module source_;
    Module target_;
    Matrix matrix_;
};

// g after f
Morphism compose(const Morphism& g, const Morphism& f);
// Block-diagonal map between direct sums.
Morphism direct_sum(const Morphism& f, const Morphism& g);
// Whether the matrix defines a homomorphism source -> target.
bool is_compatible(const Module& source, const Module& target, const Matrix& m);

// A submodule of `ambient`, presented as a module of its own together with
// the inclusion and a way to express ambient elements in its coordinates.
class Submodule {
public:
    Submodule(const Module& ambient, const Matrix& generators);

    const Module& ambient() const { return ambient_; }
    const Module& module() const { return module_; }
    const Morphism& inclusion() const { return inclusion_; }
    const Matrix& generators() const { return generators_; }

    bool contains(const Vector& x) const;
    bool contains(const Submodule& other) const;
    // Coordinates in module() of an element known to lie in the submodule.
    Vector to_sub(const Vector& x) const;

private:
    Module ambient_;
    Matrix generators_;
    Matrix U_;
    Vector divisors_;
    std::size_t lattice_rank_ = 0;
    Matrix U2_;
    std::vector<std::size_t> kept_;
    Module module_;
    Morphism inclusion_;
};

bool same_submodule(const Submodule& a, const Submodule& b);

class Quotient {
public:
    Quotient(const Module& ambient, const Matrix& generators);

    const Module& ambient() const { return ambient_; }
    const Module& module() const { return module_; }
    const Morphism& projection() const { return projection_; }
    // Matrix sending quotient coordinates to representatives in the ambient.
    const Matrix& lift() const { return lift_; }
    Vector project(const Vector& x) const { return projection_.apply(x); }

private:
    Module ambient_;
    Module module_;
    Morphism projection_;
    Matrix lift_;
};

Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Quotient cokernel(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_isomorphism(const Morphism& f);

// x with f(x) = y, if y lies in the image.
std::optional<Vector> preimage(const Morphism& f, const Vector& y);

// Hom(M, N) as a direct sum of cyclic slots; slot s stands for the map whose
// only nonzero entry is `scale` at (row, col).
class HomModule {
public:
    struct Slot {
        std::size_t row;
        std::size_t col;
        Int scale;
    };

    HomModule(const Module& M, const Module& N);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Module& module() const { return module_; }
    const std::vector<Slot>& slots() const { return slots_; }

    Matrix evaluate(const Vector& coords) const;
    Morphism as_morphism(const Vector& coords) const { return Morphism(source_, target_, evaluate(coords)); }
    Vector coordinates(const Matrix& m) const;
    Vector coordinates(const Morphism& f) const { return coordinates(f.matrix()); }

private:
    Module source_;
    Module target_;
    Module module_;
    std::vector<Slot> slots_;
};

inline HomModule hom_module(const Module& M, const Module& N) { return HomModule(M, N); }

// phi -> post . phi . pre as a map from `from` = Hom(A, B) to `to` = Hom(A', B'),
// where pre: A' -> A and post: B -> B'.
Morphism hom_map(const HomModule& from, const HomModule& to, const Matrix& pre, const Matrix& post);

class TensorModule {
public:
    TensorModule(const Module& M, const Module& N);

    const Module& left() const { return left_; }
    const Module& right() const { return right_; }
    const Module& module() const { return module_; }
    // Coordinates of m_i (x) n_j.
    Vector pure(std::size_t i, std::size_t j) const;
    // Slot index of the pair, or -1 when that summand is trivial.
    long slot(std::size_t i, std::size_t j) const { return index_[i * right_.rank() + j]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& slots() const { return slots_; }

private:
    Module left_;
    Module right_;
    Module module_;
    std::vector<std::pair<std::size_t, std::size_t>> slots_;
    std::vector<long> index_;
};

inline TensorModule tensor_module(const Module& M, const Module& N) { return TensorModule(M, N); }

// f (x) g from `from` = A (x) B to `to` = A' (x) B'.
Morphism tensor_map(const TensorModule& from, const TensorModule& to, const Matrix& f, const Matrix& g);

// A/(g) as a cyclic module over the ring, for the principal generator g.
Module quotient_ring(const Ideal& a);
Module quotient_ring_power(const Ideal& a, unsigned k);

Submodule annihilator_submodule(const Module& M, const Ideal& a);
Submodule scalar_submodule(const Module& M, const Ideal& a);
// (0 :_M a^k) and a^k M through the principal generator of a^k.
Submodule annihilator_of_power(const Module& M, const Ideal& a, unsigned k);
Submodule power_multiple(const Module& M, const Ideal& a, unsigned k);

bool is_reduced_module(const Module& M, const Ideal& a);
bool is_coreduced_module(const Module& M, const Ideal& a);
// Whether a kills every element of M.
bool annihilated_by(const Module& M, const Ideal& a);

constexpr unsigned kDefaultKMax = 32;

struct GammaModule {
    Submodule sub;
    unsigned stabilized_at;
};
GammaModule gamma_module(const Module& M, const Ideal& a, unsigned k_max = kDefaultKMax);

struct LambdaModule {
    Quotient quotient;
    unsigned stabilized_at;
};
// Throws NotStabilized if the tower a^k M does not settle by k_max.
LambdaModule lambda_module(const Module& M, const Ideal& a, unsigned k_max = kDefaultKMax);
// First k <= k_max with a^k M = a^(k+1) M.
std::optional<unsigned> lambda_stabilization(const Module& M, const Ideal& a, unsigned k_max = kDefaultKMax);

// The coefficient module of the Matlis dual: the ring itself over Z/n,
// Z/exponent over Z (finite modules only).
Module matlis_coefficient(const RingSpec& ring, const Int& exponent);
Module matlis_dual(const Module& M);

}  // namespace redcor
