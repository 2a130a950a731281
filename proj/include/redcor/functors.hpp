#pragma once

#include "redcor/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redcor {

// Three-valued truth for properties that are only semi-decidable at finite height.
enum class Tri { False, True, Unknown };

inline Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }
Tri tri_and(Tri a, Tri b);
Tri tri_or(Tri a, Tri b);
std::string to_string(Tri t);

enum class FunctorTag { Identity, Gamma, Lambda, HomQuotient, TensorQuotient, MatlisDual };

struct GammaComplex {
    Complex complex;
    ChainMap inclusion;  // into the original complex
    std::vector<Submodule> subs;  // per degree, starting at the original lo
    unsigned height;      // common exponent K with Gamma = (0 : a^K)
    // Evaluation at 1 from hom_complex(A/a, M), present when M is reduced.
    std::optional<ChainMap> evaluation;

    const Submodule& sub(int n) const { return subs[static_cast<std::size_t>(n - complex.lo())]; }
};

struct LambdaComplex {
    Complex complex;
    ChainMap projection;  // from the original complex
    std::optional<unsigned> height;  // common K with Lambda = M / a^K M; empty when theory-backed
    bool theory_backed = false;  // computed as A/a (x) M because a tower did not settle
    // Canonical map onto tensor_complex(A/a, M), present when M is coreduced.
    std::optional<ChainMap> to_tensor;
    std::vector<Quotient> quotients;  // per degree when height is set
};

GammaComplex gamma_complex(const Complex& M, const Ideal& a, unsigned k_max = kDefaultKMax);
// Throws NotStabilized when M is not coreduced and some tower does not settle.
LambdaComplex lambda_complex(const Complex& M, const Ideal& a, unsigned k_max = kDefaultKMax);

// Gamma and Lambda on chain maps, between previously computed objects.
ChainMap gamma_map(const ChainMap& f, const GammaComplex& source, const GammaComplex& target);
ChainMap lambda_map(const ChainMap& f, const LambdaComplex& source, const LambdaComplex& target);

Complex degreewise_functor(const Complex& M, FunctorTag F, const Ideal& a, unsigned k_max = kDefaultKMax);
// Degreewise Hom(A/a, -) and A/a (x) - with induced differentials.
Complex hom_quotient_degreewise(const Complex& M, const Ideal& a);
Complex tensor_quotient_degreewise(const Complex& M, const Ideal& a);
Complex matlis_dual(const Complex& M);

bool is_reduced_complex(const Complex& M, const Ideal& a);
bool is_coreduced_complex(const Complex& M, const Ideal& a);
bool is_torsion_complex(const Complex& M, const Ideal& a, unsigned k_max = kDefaultKMax);
Tri is_complete_complex(const Complex& M, const Ideal& a, unsigned k_max = kDefaultKMax);
bool is_killed_complex(const Complex& M, const Ideal& a);

// The complex-level restatements: Hom(A/a, M) vs Hom(A/a^2, M) and
// A/a (x) M vs A/a^2 (x) M, compared degreewise.
bool reduced_by_hom_criterion(const Complex& M, const Ideal& a);
bool coreduced_by_tensor_criterion(const Complex& M, const Ideal& a);

struct Witness {
    std::string flag;
    int degree;
    std::string detail;
};

struct ComplexVerdict {
    bool reduced = false;
    bool coreduced = false;
    bool torsion = false;
    Tri complete = Tri::Unknown;
    bool killed = false;  // a M = 0 in every degree
    std::optional<unsigned> lambda_height;  // empty means some tower did not settle
    std::vector<Witness> witnesses;

    Tri torsion_and_reduced() const { return to_tri(torsion && reduced); }
    Tri complete_and_coreduced() const { return tri_and(complete, to_tri(coreduced)); }
    bool decidable() const { return complete_and_coreduced() != Tri::Unknown; }
    // The three-way equivalence, checked where decidable.
    bool consistent() const;
};

ComplexVerdict mgm_c_classify(const Complex& M, const Ideal& a, unsigned k_max = kDefaultKMax);

struct AdjunctionWitness {
    Complex lhs;  // Hom(Lambda M, N)
    Complex rhs;  // Hom(M, Gamma N)
    std::optional<ChainMap> iso;
    bool verified = false;
    std::string detail;
};

// Throws PreconditionFailed unless M is coreduced and N reduced.
AdjunctionWitness adjunction_witness(const Complex& M, const Complex& N, const Ideal& a,
                                     unsigned k_max = kDefaultKMax);

}  // namespace redcor
