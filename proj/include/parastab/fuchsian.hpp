#pragma once

// Fuchsian model of parabolic lambda-connections on the trivial bundle: one
// residue matrix per puncture acting on the fiber K^r, weighted flags, and a
// scalar lambda. Sub-objects are common invariant subspaces of the residues,
// treated as saturated degree-0 subbundles.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "parastab/budget.hpp"
#include "parastab/parabolic.hpp"

namespace parastab {

template <class K>
struct FuchsianLambdaSystem {
    ParabolicSpace<K> space;
    typename K::value_type lambda;
    std::vector<Matrix<K>> residues;  // A_j, one per puncture of space

    const K& field() const { return space.field; }
    std::size_t rank() const { return space.rank; }
};

/// Structural checks only (shapes, flags, at least one puncture). Throws
/// DimensionError or ValidationError.
template <class K>
void validate_structure(const FuchsianLambdaSystem<K>& sys);

/// Short statement of the degree-zero sub-object model, embedded in reports.
extern const char* const kDegreeZeroCaveat;

struct PunctureCheck {
    std::string id;
    bool flag_preserved = false;  // A(E_i) ⊆ E_i
    bool residual = false;        // (A - lambda a_i)(E_i) ⊆ E_{i+1}
    bool trace = false;           // tr A = lambda * beta
    std::string trace_value;
    Rational beta;                // sum_i a_i m_i
};

struct ResidualReport {
    std::vector<PunctureCheck> punctures;
    bool residue_sum_zero = false;  // sum_j A_j = 0
    bool fuchs_relation = false;    // sum_j tr A_j = -lambda d
    bool pdeg_zero = false;         // d + owt = 0
    Rational beta_total;            // sum_x beta_x
    Rational xi_degree;       // -sum_{x,i} a_{x,i}

    /// Every local condition (flag, residual, trace) holds at every puncture.
    bool local_conditions_hold() const;
};

/// Conditions failing are reported, never thrown.
template <class K>
ResidualReport validate_lambda_connection(const FuchsianLambdaSystem<K>& sys);

enum class EnumerationMode { exhaustive_fp, burnside, candidates };

std::string to_string(EnumerationMode mode);
EnumerationMode parse_enumeration_mode(const std::string& text);

template <class K>
struct InvariantFamily {
    std::vector<Subspace<K>> subspaces;  // proper, nonzero, in Subspace order
    bool complete = false;
    EnumerationMode mode = EnumerationMode::exhaustive_fp;
};

/// Dimension of the unital algebra generated by the matrices.
template <class K>
std::size_t generated_algebra_dim(const K& field, const std::vector<Matrix<K>>& generators, std::size_t n);

/// Smallest subspace containing W and invariant under every matrix.
template <class K>
Subspace<K> invariant_closure(const std::vector<Matrix<K>>& mats, const Subspace<K>& w);

/// Proper nonzero common invariant subspaces of the residues. exhaustive_fp is
/// complete but needs a prime field. burnside is complete when the residues
/// generate all of M_r, or for r <= 3 when some residue has only
/// one-dimensional eigenspaces; otherwise it returns an eigenspace-generated
/// family marked incomplete. candidates filters the supplied list.
template <class K>
InvariantFamily<K> invariant_subspaces(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                                       const std::vector<Subspace<K>>& candidates = {});

enum class Verdict { stable, strictly_semistable, unstable };

std::string to_string(Verdict v);

template <class K>
struct Witness {
    Subspace<K> subspace;
    Rational slope;
};

template <class K>
struct StabilityReport {
    Verdict verdict = Verdict::stable;
    std::optional<Witness<K>> witness;
    EnumerationMode checked_mode = EnumerationMode::exhaustive_fp;
    bool complete = true;  // false: verdict holds relative to the checked family only
    Rational slope;        // pmu(E)
    std::string caveat = kDegreeZeroCaveat;
};

/// Slope of the sub-object carried by an invariant subspace (degree 0, or the
/// system degree for the full space).
template <class K>
Rational subobject_slope(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w);

template <class K>
StabilityReport<K> classify_stability(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                                      const std::vector<Subspace<K>>& candidates = {});

/// Restriction to an invariant subspace U, with flags induced and degree 0
/// (or d when U is the full space).
template <class K>
FuchsianLambdaSystem<K> restrict_system(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& u);

/// Quotient by an invariant subspace W; keeps degree d.
template <class K>
FuchsianLambdaSystem<K> quotient_system(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w);

/// U / W for invariant W ⊆ U.
template <class K>
FuchsianLambdaSystem<K> subquotient(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w, const Subspace<K>& u);

template <class K>
struct Filtration {
    std::vector<Subspace<K>> chain;  // W_0 = 0 ⊊ ... ⊊ W_k = full
    std::vector<Rational> slopes;    // slope of W_i / W_{i-1}, i = 1..k
    // Steps where several subspaces shared the maximal slope and dimension. In
    // the degree-0 model this can only happen for negative d, where the degree
    // of a sum is no longer bounded below by the modular law.
    std::size_t ties = 0;
};

enum class CandidateOrder { forward, reversed };

/// Harder–Narasimhan filtration; ties between maximal candidates go to the
/// lexicographically smallest subspace whatever the candidate order. Needs a complete enumeration (exhaustive over
/// F_p, or a burnside irreducibility certificate); throws PreconditionError otherwise.
template <class K>
Filtration<K> hn_filtration(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                            CandidateOrder order = CandidateOrder::forward);

/// Jordan–Hölder filtration of a semistable system (equal slopes).
template <class K>
Filtration<K> jh_filtration(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget);

struct FactorInvariant {
    std::size_t dim = 0;
    Rational slope;
    std::vector<std::vector<std::string>> charpolys;  // per puncture, low to high
    std::vector<std::vector<long>> flag_dims;         // per puncture

    bool operator==(const FactorInvariant&) const = default;
    bool operator<(const FactorInvariant& o) const {
        return std::tie(dim, slope, charpolys, flag_dims) < std::tie(o.dim, o.slope, o.charpolys, o.flag_dims);
    }
};

/// Sorted multiset of JH factor invariants.
template <class K>
std::vector<FactorInvariant> graded_invariants(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode,
                                               Budget& budget);

enum class SEquivalence { equivalent_invariants, distinguished };

std::string to_string(SEquivalence s);

template <class K>
SEquivalence s_equivalent_weak(const FuchsianLambdaSystem<K>& a, const FuchsianLambdaSystem<K>& b,
                               EnumerationMode mode, Budget& budget);

/// Searches GL_r(F_p) for g with g A_j g^-1 = B_j and g(E_{x,i}) = F_{x,i}.
/// Returns the first such g in odometer order.
std::optional<Matrix<PrimeField>> find_isomorphism(const FuchsianLambdaSystem<PrimeField>& a,
                                                   const FuchsianLambdaSystem<PrimeField>& b, Budget& budget);

/// (E, mu A_j, mu lambda). Throws ValidationError when mu = 0.
template <class K>
FuchsianLambdaSystem<K> scale_action(const FuchsianLambdaSystem<K>& sys, const typename K::value_type& mu);

/// Nilpotent part of A in its Jordan–Chevalley decomposition; nullopt when the
/// characteristic polynomial does not split over the field.
template <class K>
std::optional<Matrix<K>> nilpotent_part(const Matrix<K>& a);

struct HiggsLimitReport {
    bool split = true;              // every residue has all eigenvalues in the field
    std::vector<bool> strongly_parabolic;  // per puncture: N(E_i) ⊆ E_{i+1}
    bool passes() const;
};

/// The lambda -> 0 limit of the C*-orbit keeps the nilpotent parts of the
/// residues; checks that they are strongly parabolic.
template <class K>
HiggsLimitReport higgs_limit_check(const FuchsianLambdaSystem<K>& sys);

/// Roots of a polynomial (low to high) lying in the field, without multiplicity,
/// in increasing order. Over Q via the rational root theorem.
template <class K>
std::vector<typename K::value_type> roots_in_field(const K& field, const std::vector<typename K::value_type>& coeffs);

}  // namespace parastab
