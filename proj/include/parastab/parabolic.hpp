#pragma once

// Parabolic numerology on fiber data: weight systems, weighted flags, parabolic
// weight/degree/slope, induced and quotient structures, the Gieseker comparison
// and the minimum quotient slope.

#include <optional>
#include <string>
#include <vector>

#include "parastab/budget.hpp"
#include "parastab/rational.hpp"
#include "parastab/subspace.hpp"

namespace parastab {

struct PunctureWeights {
    std::string id;
    std::vector<Rational> alpha;  // strictly increasing, in [0, 1)

    friend bool operator==(const PunctureWeights& a, const PunctureWeights& b) {
        return a.id == b.id && a.alpha == b.alpha;
    }
};

/// Per-puncture weights 0 <= a_1 < ... < a_l < 1, validated on construction.
class WeightSystem {
public:
    WeightSystem() = default;
    /// Throws ValidationError; the pointer names the offending weight.
    explicit WeightSystem(std::vector<PunctureWeights> punctures);

    std::size_t size() const noexcept { return punctures_.size(); }
    const std::vector<PunctureWeights>& punctures() const noexcept { return punctures_; }
    const PunctureWeights& operator[](std::size_t x) const { return punctures_[x]; }
    /// Number of weights l_x at puncture x.
    std::size_t length(std::size_t x) const { return punctures_[x].alpha.size(); }

    bool operator==(const WeightSystem&) const = default;

private:
    std::vector<PunctureWeights> punctures_;
};

/// Numeric parabolic type: rank, degree, genus and per puncture the flag
/// dimensions dim E_{x,1} = r, ..., dim E_{x,l_x+1} = 0.
struct ParabolicNumerics {
    long rank = 0;
    long degree = 0;
    long genus = 0;
    WeightSystem weights;
    std::vector<std::vector<long>> flag_dims;

    /// Quotient ranks r_{x,i} = r - dim E_{x,i}, i = 1..l_x+1.
    std::vector<long> quotient_ranks(std::size_t x) const;
    /// Jumps m_{x,i} = dim E_{x,i} - dim E_{x,i+1}, i = 1..l_x.
    std::vector<long> jumps(std::size_t x) const;
};

enum class FlagStrictness { strict, weak };

/// Strict: flag dims strictly decrease (every jump >= 1), as required of user
/// input. Weak: non-increasing, as produced by induced and quotient structures.
void validate(const ParabolicNumerics& p, FlagStrictness strictness = FlagStrictness::strict);

Rational owt_at(const ParabolicNumerics& p, std::size_t x);
Rational owt(const ParabolicNumerics& p);
Rational pdeg(const ParabolicNumerics& p);
Rational pmu(const ParabolicNumerics& p);
Rational eta(const ParabolicNumerics& p);
/// d + r (m + 1 - g) + owt
Rational par_hilbert(const ParabolicNumerics& p, long m);

enum class GiesekerOrder { precedes_strictly, precedes_eq, exceeds };

std::string to_string(GiesekerOrder order);

/// Compares parP_F / rk F with parP_E / rk E as polynomials in m (order for m >> 0).
/// Throws ValidationError when the genera differ.
GiesekerOrder gieseker_leq(const ParabolicNumerics& f, const ParabolicNumerics& e);

/// 1 / (r! * prod q_{x,i}) where a_{x,i} = p_{x,i} / q_{x,i} in lowest terms.
Rational delta_gap(long rank, const WeightSystem& weights);

/// Weighted flags in a fixed ambient K^r. flags[x] holds E_{x,1} = K^r down to
/// E_{x,l_x+1} = 0.
template <class K>
struct ParabolicSpace {
    K field;
    std::size_t rank = 0;
    long degree = 0;
    long genus = 0;
    WeightSystem weights;
    std::vector<std::vector<Subspace<K>>> flags;

    ParabolicNumerics numerics() const;
};

/// Builds a parabolic space from the interior flag steps E_{x,2}, ..., E_{x,l_x}
/// of each puncture and validates it.
template <class K>
ParabolicSpace<K> make_parabolic_space(K field, std::size_t rank, long degree, WeightSystem weights,
                                       const std::vector<std::vector<Subspace<K>>>& interior_steps,
                                       long genus = 0);

/// Checks nesting, end points and ambient dimensions.
template <class K>
void validate(const ParabolicSpace<K>& e, FlagStrictness strictness = FlagStrictness::strict);

template <class K>
Rational owt(const ParabolicSpace<K>& e) {
    return owt(e.numerics());
}
template <class K>
Rational pmu(const ParabolicSpace<K>& e) {
    return pmu(e.numerics());
}

/// Canonical identification K^r / W = K^{r-s} through the non-pivot
/// coordinates of W's echelon basis.
template <class K>
struct QuotientCoordinates {
    Matrix<K> projection;  // (r-s) x r
    Matrix<K> lift;        // r x (r-s), a section of the projection
};

template <class K>
QuotientCoordinates<K> quotient_coordinates(const Subspace<K>& w);

/// Matrix of A restricted to an A-invariant W, in W's echelon basis.
template <class K>
Matrix<K> restrict_endomorphism(const Matrix<K>& a, const Subspace<K>& w);

/// Matrix of the map induced by A on K^r / W (W must be A-invariant).
template <class K>
Matrix<K> quotient_endomorphism(const Matrix<K>& a, const Subspace<K>& w);

/// Expresses a subspace of W in W's echelon coordinates.
template <class K>
Subspace<K> in_coordinates(const Subspace<K>& u, const Subspace<K>& w);

/// Induced flags W_x ∩ E_{x,i} expressed in the coordinates of each W_x. All
/// W_x must share one dimension, which becomes the rank of the result.
template <class K>
ParabolicSpace<K> induced_substructure(const ParabolicSpace<K>& e, const std::vector<Subspace<K>>& w,
                                       long sub_degree = 0);

template <class K>
ParabolicSpace<K> induced_substructure(const ParabolicSpace<K>& e, const Subspace<K>& w, long sub_degree = 0);

/// Image flags (E_{x,i} + W) / W. Degree defaults to deg E - sub_degree with
/// sub-objects of degree 0.
template <class K>
ParabolicSpace<K> quotient_structure(const ParabolicSpace<K>& e, const Subspace<K>& w,
                                     std::optional<long> quotient_degree = std::nullopt);

/// E1 ⊕ E2 with flags E1_{x,i} ⊕ E2_{x,i}. Both must share the weight system.
template <class K>
ParabolicSpace<K> direct_sum(const ParabolicSpace<K>& e1, const ParabolicSpace<K>& e2);

struct QuotientSlope {
    Subspace<PrimeField> kernel;
    Rational slope;
};

/// pmu(E/W) for every subspace W ⊊ E (including W = 0, i.e. E itself), in
/// Subspace order. Sub-objects carry degree 0.
std::vector<QuotientSlope> quotient_slopes(const ParabolicSpace<PrimeField>& e, Budget& budget);

/// Minimum of quotient_slopes with the first (lexicographically smallest) minimiser.
QuotientSlope min_quotient_slope(const ParabolicSpace<PrimeField>& e, Budget& budget);

}  // namespace parastab
