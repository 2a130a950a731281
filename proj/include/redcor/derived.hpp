#pragma once

#include "redcor/functors.hpp"

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace redcor {

constexpr unsigned kDefaultResolutionLength = 6;
constexpr unsigned kDefaultStages = 8;
constexpr unsigned kDefaultStabilityWindow = 3;

struct DerivedOptions {
    unsigned k_max = kDefaultKMax;
    unsigned stages = kDefaultStages;  // stages of the A/a^k systems
    unsigned window = kDefaultStabilityWindow;
    unsigned max_len = kDefaultResolutionLength;
};

// Over Z: free. Over Z/n: every cyclic summand has order u with gcd(u, n/u) = 1.
bool is_projective(const Module& M);
// Surjection onto M from a sum of projective cyclics, one per nontrivial generator.
Morphism projective_cover(const Module& M);

// Bounded-above complex of projectives with a quasi-isomorphism onto the target.
// Built from the top degree down; each new term covers the pairs (q, m) with
// d q = 0 and augmentation(q) = d m, so the augmentation commutes on the nose.
struct Resolution {
    Complex target;
    Complex complex;
    ChainMap augmentation;
    unsigned length = 0;     // degrees used below target.lo()
    bool truncated = false;  // stopped after max_len degrees below target.lo()
    std::map<int, Morphism> pairs;  // x -> (d x, augmentation x) per degree

    // Lowest degree where the augmentation is known to be bijective on cohomology.
    int exact_from() const { return truncated ? complex.lo() + 1 : INT_MIN; }
};

Resolution projective_resolution(const Complex& M, unsigned max_len = kDefaultResolutionLength);
Resolution free_resolution(const Module& X, unsigned max_len = kDefaultResolutionLength);
// A chain map between resolutions lying over f, commuting with the augmentations.
ChainMap lift(const ChainMap& f, const Resolution& from, const Resolution& to);

// Nonzero cohomology by degree, trusted only in [valid_lo, valid_hi].
struct CohomologyTable {
    std::map<int, Invariants> groups;
    int valid_lo = INT_MIN;
    int valid_hi = INT_MAX;

    bool limited() const { return valid_lo != INT_MIN || valid_hi != INT_MAX; }
    bool valid(int n) const { return n >= valid_lo && n <= valid_hi; }
    Invariants at(int n) const;
    std::string to_string() const;
};

CohomologyTable cohomology_table(const Complex& C, int valid_lo = INT_MIN, int valid_hi = INT_MAX);
// Agreement on every degree valid in both tables.
bool tables_match(const CohomologyTable& a, const CohomologyTable& b);

// A complex standing for a derived object, with the degrees in which its
// cohomology is exact when a truncated resolution was involved.
struct DerivedComplex {
    Complex complex;
    int valid_lo = INT_MIN;
    int valid_hi = INT_MAX;

    DerivedComplex() = default;
    DerivedComplex(Complex c) : complex(std::move(c)) {}
    CohomologyTable table() const { return cohomology_table(complex, valid_lo, valid_hi); }
};

// RHom(X, N) and X (x)^L N with X given by a resolution, or resolved here.
DerivedComplex rhom(const Resolution& P, const DerivedComplex& N);
DerivedComplex derived_tensor(const Resolution& P, const DerivedComplex& N);
DerivedComplex rhom(const DerivedComplex& M, const DerivedComplex& N, unsigned max_len = kDefaultResolutionLength);
DerivedComplex derived_tensor(const DerivedComplex& M, const DerivedComplex& N,
                              unsigned max_len = kDefaultResolutionLength);

Resolution quotient_resolution(const Ideal& a, unsigned k = 1, unsigned max_len = kDefaultResolutionLength);
DerivedComplex rhom_quotient(const DerivedComplex& M, const Ideal& a, unsigned max_len = kDefaultResolutionLength);
DerivedComplex tensor_quotient(const DerivedComplex& M, const Ideal& a, unsigned max_len = kDefaultResolutionLength);

// Ext^i(X, M) for i in [0, i_max] and Tor_i(X, M) = H^(-i)(P (x) M); TruncationExceeded
// when a truncated resolution cannot reach i_max.
std::vector<Module> ext_groups(const Module& X, const Complex& M, int i_max,
                               unsigned max_len = kDefaultResolutionLength);
std::vector<Module> tor_groups(const Module& X, const Complex& M, int i_max,
                               unsigned max_len = kDefaultResolutionLength);

// How the (co)limit of a system of cohomology modules was settled.
enum class StabilizationRule {
    ExactConstant,  // the ideal powers settle, so the system is eventually constant
    IsoRun,         // `window` consecutive transitions are isomorphisms (heuristic over Z)
    ZeroComposite,  // every tested composite of `window` transitions is zero
    NotStabilized,
};
std::string to_string(StabilizationRule r);

struct StableValue {
    std::optional<Invariants> value;
    StabilizationRule rule = StabilizationRule::NotStabilized;
    unsigned stage = 0;
};

struct SystemTable {
    std::map<int, StableValue> degrees;  // degrees outside the map are exactly zero
    int valid_lo = INT_MIN;
    int valid_hi = INT_MAX;

    bool stabilized() const;
    // The known values; unknown degrees are omitted.
    CohomologyTable known() const;
    std::string to_string() const;
};

// colim_k H^i(RHom(A/a^k, M)) along the surjections A/a^(k+1) -> A/a^k.
SystemTable r_gamma(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
// lim_k H^i(A/a^k (x)^L M) along the same surjections.
SystemTable l_lambda(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
// The comparison maps on cohomology, per degree of the system: alpha^n from
// H^n RHom(A/a, M) to the stable value of R Gamma, beta^n from the stable value
// of L Lambda to H^n(A/a (x)^L M). Empty where the system did not settle.
struct ComparisonMap {
    int degree = 0;
    std::optional<Morphism> map;
    StabilizationRule rule = StabilizationRule::NotStabilized;
};
std::vector<ComparisonMap> alpha_maps(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
std::vector<ComparisonMap> beta_maps(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
// False on a known mismatch, True when every degree is known and agrees, else Unknown.
Tri compare(const SystemTable& s, const CohomologyTable& t);

enum class Basis { Characterization, DirectComparison };
std::string to_string(Basis b);

struct DerivedVerdict {
    Basis basis = Basis::Characterization;
    Tri d_reduced = Tri::Unknown;
    Tri d_coreduced = Tri::Unknown;
    Tri d_torsion = Tri::Unknown;
    Tri d_complete = Tri::Unknown;

    // Filled by DirectComparison: alpha, beta and the torsion/complete maps
    // tested on cohomology tables.
    Tri direct_reduced = Tri::Unknown;
    Tri direct_coreduced = Tri::Unknown;
    Tri direct_torsion = Tri::Unknown;
    Tri direct_complete = Tri::Unknown;
    std::map<std::string, CohomologyTable> tables;
    std::optional<SystemTable> gamma_system;
    std::optional<SystemTable> lambda_system;
    std::vector<std::string> contradictions;

    Tri tor_red() const { return tri_and(d_torsion, d_reduced); }
    Tri com_cor() const { return tri_and(d_complete, d_coreduced); }
    bool agrees() const { return contradictions.empty(); }
    // Number of flags decidable on both bases.
    int decidable_pairs() const;
    std::string to_string() const;
};

DerivedVerdict derived_classify(const Complex& M, const Ideal& a, Basis basis = Basis::Characterization,
                                const DerivedOptions& opt = {});

struct TableComparison {
    std::string name;
    CohomologyTable lhs;
    CohomologyTable rhs;
    bool match = false;
};

struct DerivedReport {
    std::vector<TableComparison> comparisons;
    bool holds() const;
    bool range_limited() const;
    std::string to_string() const;
};

// RHom(A/a, RHom(A/a, M)) vs RHom(A/a, M) and A/a (x)^L (A/a (x)^L M) vs A/a (x)^L M.
DerivedReport idempotence_derived_check(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
// RHom(A/a, A/a (x)^L M) vs A/a (x)^L M and A/a (x)^L RHom(A/a, M) vs RHom(A/a, M).
DerivedReport composition_check(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});
// RHom(A/a (x)^L M, N) vs RHom(M, RHom(A/a, N)); PreconditionFailed unless M coreduced, N reduced.
DerivedReport gm_duality_derived_check(const Complex& M, const Complex& N, const Ideal& a,
                                       const DerivedOptions& opt = {});
// RHom(R Gamma M, N) vs RHom(M, L Lambda N) with both systems represented by a
// complex: the sum of shifted stable cohomology over Z, the constant stage over
// Z/n. Empty when a system did not settle.
std::optional<DerivedReport> classical_duality_check(const Complex& M, const Complex& N, const Ideal& a,
                                                     const DerivedOptions& opt = {});

struct MgmDerivedReport {
    DerivedVerdict verdict;
    Tri com_cor = Tri::Unknown;
    Tri tor_red = Tri::Unknown;
    // Fixed points RHom(A/a, M) ~ M and A/a (x)^L M ~ M on cohomology tables.
    bool rhom_fixed = false;
    bool tensor_fixed = false;

    bool decidable() const { return com_cor != Tri::Unknown && tor_red != Tri::Unknown; }
    bool membership_equal() const { return !decidable() || com_cor == tor_red; }
    // Whether each fixed-point bit matches the membership it is claimed to characterize.
    bool rhom_lemma_consistent() const { return tor_red == Tri::Unknown || rhom_fixed == (tor_red == Tri::True); }
    bool tensor_lemma_consistent() const { return com_cor == Tri::Unknown || tensor_fixed == (com_cor == Tri::True); }
    std::string to_string() const;
};

// HypothesisUnmet over Z/n with n not squarefree.
MgmDerivedReport mgm_derived_check(const Complex& M, const Ideal& a, const DerivedOptions& opt = {});

}  // namespace redcor
