#pragma once

#include "redcor/module.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace redcor {

// Bounded cochain complex: terms in degrees [lo, hi], zero elsewhere, with
// differentials d^n: term(n) -> term(n+1).
class Complex {
public:
    Complex() = default;
    // diffs[k] is the differential leaving terms[k]; the last may be omitted.
    Complex(RingSpec ring, int lo, std::vector<Module> terms, std::vector<Matrix> diffs);

    static Complex zero(const RingSpec& ring);
    static Complex concentrated(const Module& M, int degree = 0);
    // Two-term complex source -> target with source in degree `degree`.
    static Complex two_term(const Morphism& f, int degree);

    const RingSpec& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    const Module& term(int n) const;
    Morphism diff(int n) const;
    Matrix diff_matrix(int n) const;

    bool is_zero() const;
    std::string to_string() const;
    bool operator==(const Complex& o) const = default;

private:
    RingSpec ring_;
    int lo_ = 0;
    std::vector<Module> terms_;
    std::vector<Matrix> diffs_;  // diffs_[k]: terms_[k] -> terms_[k+1], size terms_ - 1
    Module zero_;
    void validate() const;
};

class ChainMap {
public:
    ChainMap() = default;
    // Components by degree; missing degrees are zero. Validated eagerly.
    ChainMap(Complex source, Complex target, const std::map<int, Matrix>& components);

    static ChainMap identity(const Complex& C);
    static ChainMap zero(const Complex& source, const Complex& target);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int lo() const { return std::min(source_.lo(), target_.lo()); }
    int hi() const { return std::max(source_.hi(), target_.hi()); }
    Morphism component(int n) const;
    Matrix component_matrix(int n) const;

    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-() const;

private:
    Complex source_;
    Complex target_;
    std::map<int, Matrix> components_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

// H^n of a complex as a subquotient of its n-th term.
class Cohomology {
public:
    Cohomology(const Complex& C, int n);

    const Module& module() const { return quotient_.module(); }
    // Columns are cycles representing the generators of module().
    const Matrix& lift() const { return lift_; }
    // Class of a cycle.
    Vector project(const Vector& cycle) const;
    bool is_cycle(const Vector& x) const { return cycles_.contains(x); }

private:
    Submodule cycles_;
    Quotient quotient_;
    Matrix lift_;
};

Module cohomology(const Complex& C, int n);
Morphism induced_map(const ChainMap& f, int n);
bool is_quasi_iso(const ChainMap& f);
bool is_acyclic(const Complex& C);
// Whether the two complexes have isomorphic cohomology in every degree.
bool same_cohomology(const Complex& A, const Complex& B);

Complex shift(const Complex& C, int t);
ChainMap shift(const ChainMap& f, int t);
Complex direct_sum(const Complex& A, const Complex& B);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

Complex cone(const ChainMap& f);
Complex fiber(const ChainMap& f);

// Whether the complexes agree term by term up to isomorphism of modules.
bool degreewise_isomorphic(const Complex& A, const Complex& B);

// Hom(M, N) with its block structure: degree n collects Hom(M^i, N^(i+n)).
class HomComplex {
public:
    struct Block {
        int i;  // source degree
        int j;  // target degree
        HomModule hom;
        std::size_t offset;
    };

    HomComplex(const Complex& M, const Complex& N);

    const Complex& complex() const { return complex_; }
    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    const std::vector<Block>& blocks(int n) const;
    // The component of an element of degree n in Hom(M^i, N^(i+n)).
    Matrix component(int n, const Vector& x, int i) const;
    // Assembles an element of degree n from its components.
    Vector element(int n, const std::map<int, Matrix>& components) const;

private:
    Complex source_;
    Complex target_;
    Complex complex_;
    std::map<int, std::vector<Block>> blocks_;
};

// M (x) N with its block structure: degree n collects M^i (x) N^(n-i).
class TensorComplex {
public:
    struct Block {
        int i;
        int j;
        TensorModule tensor;
        std::size_t offset;
    };

    TensorComplex(const Complex& M, const Complex& N);

    const Complex& complex() const { return complex_; }
    const std::vector<Block>& blocks(int n) const;

private:
    Complex complex_;
    std::map<int, std::vector<Block>> blocks_;
};

inline Complex hom_complex(const Complex& M, const Complex& N) { return HomComplex(M, N).complex(); }
inline Complex tensor_complex(const Complex& M, const Complex& N) { return TensorComplex(M, N).complex(); }

// phi -> g . phi . f between Hom complexes, for chain maps f: M' -> M and g: N -> N'.
ChainMap hom_complex_map(const HomComplex& from, const HomComplex& to, const ChainMap& f, const ChainMap& g);
// f (x) g between tensor complexes.
ChainMap tensor_complex_map(const TensorComplex& from, const TensorComplex& to, const ChainMap& f, const ChainMap& g);

// Map between submodules induced by f, assuming f(A) lies in B.
Matrix restricted_matrix(const Morphism& f, const Submodule& A, const Submodule& B);
// Map between quotients induced by f, assuming f respects the relations.
Matrix quotient_matrix(const Morphism& f, const Quotient& P, const Quotient& Q);

}  // namespace redcor
