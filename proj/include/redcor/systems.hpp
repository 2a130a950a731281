#pragma once

#include "redcor/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace redcor {

constexpr unsigned kDefaultSystemHeight = 6;
constexpr unsigned kDefaultTowerHeight = 8;
constexpr std::size_t kMaxKoszulLength = 3;

// Stages M^1 .. M^K with transitions[n]: stages[n] -> stages[n+1].
struct DirectSystem {
    std::vector<Complex> stages;
    std::vector<ChainMap> transitions;

    DirectSystem(std::vector<Complex> stages, std::vector<ChainMap> transitions);
    static DirectSystem constant(const Complex& C, unsigned height);
};

// Stages N^1 .. N^K with transitions[n]: stages[n+1] -> stages[n].
struct InverseSystem {
    std::vector<Complex> stages;
    std::vector<ChainMap> transitions;

    InverseSystem(std::vector<Complex> stages, std::vector<ChainMap> transitions);
    static InverseSystem constant(const Complex& C, unsigned height);
};

// Direct sum of a list of complexes, summands in order.
Complex direct_sum(const std::vector<Complex>& parts);

// The map x -> x - sigma(x) from the sum of the first K-1 stages into the sum
// of all K stages, and its cone. The cokernel is the last stage, so the
// telescope computes the colimit of the truncated system.
ChainMap telescope_map(const DirectSystem& D);
Complex telescope(const DirectSystem& D);

// (y_n) -> (y_n - rho(y_{n+1})) from the product of all K stages onto the
// product of the first K-1, and its fiber, which computes the limit.
ChainMap microscope_map(const InverseSystem& B);
Complex microscope(const InverseSystem& B);

// Tensor product of [A --a_j^i--> A] in degrees -1, 0 over the sequence.
Complex koszul_complex(const RingSpec& ring, const Vector& seq, unsigned power);

class KoszulTower {
public:
    KoszulTower(const RingSpec& ring, Vector seq, unsigned height = kDefaultTowerHeight);

    const RingSpec& ring() const { return ring_; }
    const Vector& sequence() const { return seq_; }
    unsigned height() const { return static_cast<unsigned>(stages_.size()); }
    // Stage i in 1..height.
    const Complex& stage(unsigned i) const { return stages_.at(i - 1); }
    // K(A; a^j) -> K(A; a^i) for j >= i, multiplication by a_l^(j-i) on the degree -1 factor of each l.
    ChainMap transition(unsigned j, unsigned i) const;

private:
    RingSpec ring_;
    Vector seq_;
    std::vector<Complex> stages_;
};

struct ProZeroResult {
    int degree = -1;
    bool witnessed = false;
    std::map<unsigned, unsigned> witness;  // i -> smallest j with zero induced map on H^q
    std::string detail;
};

// Searches j in [i, i + window] for each stage i with i + window within the
// tower. A miss is reported as inconclusive, never as a refutation.
ProZeroResult pro_zero_check(const KoszulTower& tower, int q, unsigned window);

struct WprReport {
    std::vector<ProZeroResult> degrees;  // q = -r .. -1
    bool witnessed() const;
    std::string to_string() const;
};

WprReport wpr_check(const RingSpec& ring, const Vector& seq, unsigned height = kDefaultTowerHeight,
                    unsigned window = 2);

}  // namespace redcor
