#pragma once

// Hilbert–Mumford calculus for SL(V) acting on products of Grassmannians of
// quotients phi_i : W_i ⊗ V -> K^{p_i}.
//
// Tensor coordinates: w_k ⊗ e_j sits at index j * m + k (V-major).

#include <optional>
#include <vector>

#include "parastab/budget.hpp"
#include "parastab/rational.hpp"
#include "parastab/subspace.hpp"

namespace parastab {

template <class K>
struct GrassFactor {
    std::size_t m = 0;  // dim W_i
    Matrix<K> phi;      // p_i x (n m_i), full row rank
    Rational epsilon;   // > 0
};

template <class K>
struct GrassConfig {
    K field;
    std::size_t n = 0;  // dim V
    std::vector<GrassFactor<K>> factors;
};

/// Throws ValidationError (with a pointer into the config document) or DimensionError.
template <class K>
void validate(const GrassConfig<K>& cfg);

/// One-parameter subgroup diag(t^{r_1}, ..., t^{r_n}) in the basis given by the
/// columns of `basis`; r_1 >= ... >= r_n, sum 0.
template <class K>
struct OnePS {
    Matrix<K> basis;
    std::vector<long> weights;
};

template <class K>
void validate(const OnePS<K>& ops);

/// Extreme weight vectors (n-l, ..., n-l, -l, ..., -l) for l = 1..n-1.
std::vector<std::vector<long>> extreme_weights(std::size_t n);

/// W ⊗ L inside W ⊗ V for dim W = m.
template <class K>
Subspace<K> tensor_with(std::size_t m, const Subspace<K>& l);

/// -p r_n + sum_{j<n} dim(L ∩ (W ⊗ span(b_1..b_j))) (r_{j+1} - r_j) for the point
/// L ⊆ W ⊗ V (standard coordinates) with p = dim L; b_j are the basis columns.
/// This is minus the lowest weight of a nonzero Plücker coordinate of L.
template <class K>
long mu_factor(const Subspace<K>& l, std::size_t m, const OnePS<K>& ops);

/// sum_i eps_i mu_factor(Ker phi_i): the quotient phi_i and its kernel have the
/// same weight under the dual Plücker embedding.
template <class K>
Rational mu_total(const GrassConfig<K>& cfg, const OnePS<K>& ops);

/// sum_i eps_i dim phi_i(W_i ⊗ L) / dim L - sum_i eps_i p_i / n.
template <class K>
Rational criterion_margin(const GrassConfig<K>& cfg, const Subspace<K>& l);

enum class GitVerdict { stable, strictly_semistable, unstable };

std::string to_string(GitVerdict v);

template <class K>
struct GitReport {
    GitVerdict verdict = GitVerdict::stable;
    std::optional<Subspace<K>> witness;  // argmin margin, first in Subspace order; absent when stable
    std::optional<Rational> min_margin;  // absent when V has no proper nonzero subspace
    bool complete = true;
};

/// Exhaustive over every proper nonzero L ⊆ V.
GitReport<PrimeField> classify_git(const GrassConfig<PrimeField>& cfg, Budget& budget);

/// Over any field, checking only the supplied subspaces (complete = false).
template <class K>
GitReport<K> classify_git(const GrassConfig<K>& cfg, const std::vector<Subspace<K>>& candidates);

struct HilbertMumfordReport {
    std::optional<Rational> min_mu;                // absent for n = 1 (no extreme weights)
    std::optional<OnePS<PrimeField>> minimiser;    // first in enumeration order
    GitVerdict criterion = GitVerdict::stable;
    bool semistable_agrees = true;                 // min_mu >= 0  <=>  criterion != unstable
    bool stable_agrees = true;                     // min_mu > 0   <=>  criterion == stable
    std::uint64_t bases_checked = 0;
};

/// Every ordered basis of F_q^n paired with every extreme weight vector.
HilbertMumfordReport verify_hilbert_mumford(const GrassConfig<PrimeField>& cfg, Budget& budget);

}  // namespace parastab
