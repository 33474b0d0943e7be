#include "parastab/git_grass.hpp"

#include <numeric>

#include "parastab/errors.hpp"

namespace parastab {

template <class K>
void validate(const GrassConfig<K>& cfg) {
    if (cfg.n == 0) throw ValidationError("dim V must be positive", "/n");
    for (std::size_t i = 0; i < cfg.factors.size(); ++i) {
        const auto& fac = cfg.factors[i];
        const std::string ptr = "/factors/" + std::to_string(i);
        if (fac.m == 0) throw ValidationError("dim W must be positive", ptr + "/m");
        if (fac.epsilon <= 0) throw ValidationError("epsilon must be positive", ptr + "/epsilon");
        if (fac.phi.cols() != cfg.n * fac.m) {
            throw ValidationError("phi needs n*m = " + std::to_string(cfg.n * fac.m) + " columns", ptr + "/phi");
        }
        if (rank(fac.phi) != fac.phi.rows()) throw ValidationError("phi must have full row rank", ptr + "/phi");
    }
}

template <class K>
void validate(const OnePS<K>& ops) {
    const std::size_t n = ops.weights.size();
    if (ops.basis.rows() != n || ops.basis.cols() != n || rank(ops.basis) != n) {
        throw ValidationError("one-parameter subgroup needs an invertible basis matching its weights", "/basis");
    }
    if (std::accumulate(ops.weights.begin(), ops.weights.end(), 0L) != 0) {
        throw ValidationError("one-parameter subgroup weights must sum to 0", "/weights");
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (ops.weights[j] > ops.weights[j - 1]) {
            throw ValidationError("one-parameter subgroup weights must be non-increasing", "/weights");
        }
    }
}

std::vector<std::vector<long>> extreme_weights(std::size_t n) {
    std::vector<std::vector<long>> out;
    const long nn = static_cast<long>(n);
    for (long l = 1; l < nn; ++l) {
        std::vector<long> r(n, -l);
        std::fill(r.begin(), r.begin() + l, nn - l);
        out.push_back(std::move(r));
    }
    return out;
}

template <class K>
Subspace<K> tensor_with(std::size_t m, const Subspace<K>& l) {
    const K& f = l.field();
    const std::size_t n = l.ambient_dim();
    Matrix<K> gens(f, 0, n * m);
    for (std::size_t b = 0; b < l.dim(); ++b) {
        for (std::size_t k = 0; k < m; ++k) {
            typename Matrix<K>::Vector v(n * m, f.zero());
            for (std::size_t j = 0; j < n; ++j) v[j * m + k] = l.basis()(b, j);
            gens.append_row(v);
        }
    }
    return Subspace<K>::span(gens);
}

template <class K>
long mu_factor(const Subspace<K>& l, std::size_t m, const OnePS<K>& ops) {
    validate(ops);
    const std::size_t n = ops.weights.size();
    if (l.ambient_dim() != n * m) throw DimensionError("L must live in W ⊗ V of dimension n*m");
    const long p = static_cast<long>(l.dim());
    const auto& r = ops.weights;
    long mu = n == 0 ? 0 : -p * r[n - 1];
    const auto cols = ops.basis.transpose();  // rows are the basis vectors b_j
    Matrix<K> flag_rows(ops.basis.field(), 0, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        flag_rows.append_row(cols.row(j));
        const auto step = tensor_with(m, Subspace<K>::span(flag_rows));
        mu += static_cast<long>(intersect(l, step).dim()) * (r[j + 1] - r[j]);
    }
    return mu;
}

template <class K>
Rational mu_total(const GrassConfig<K>& cfg, const OnePS<K>& ops) {
    Rational total = 0;
    for (const auto& fac : cfg.factors) total += fac.epsilon * mu_factor(kernel(fac.phi), fac.m, ops);
    return total;
}

template <class K>
Rational criterion_margin(const GrassConfig<K>& cfg, const Subspace<K>& l) {
    if (l.is_zero()) throw DimensionError("the criterion is evaluated on nonzero subspaces");
    Rational lhs = 0, rhs = 0;
    for (const auto& fac : cfg.factors) {
        lhs += fac.epsilon * Rational(static_cast<long>(image(fac.phi, tensor_with(fac.m, l)).dim()));
        rhs += fac.epsilon * Rational(static_cast<long>(fac.phi.rows()));
    }
    return lhs / static_cast<long>(l.dim()) - rhs / static_cast<long>(cfg.n);
}

std::string to_string(GitVerdict v) {
    switch (v) {
        case GitVerdict::stable: return "stable";
        case GitVerdict::strictly_semistable: return "strictly_semistable";
        case GitVerdict::unstable: return "unstable";
    }
    return "?";
}

namespace {

template <class K, class Range>
GitReport<K> classify_over(const GrassConfig<K>& cfg, const Range& subspaces) {
    GitReport<K> report;
    for (const auto& l : subspaces) {
        if (l.is_zero() || l.is_full()) continue;
        const Rational margin = criterion_margin(cfg, l);
        if (!report.min_margin || margin < *report.min_margin) {
            report.min_margin = margin;
            report.witness = l;
        }
    }
    if (report.min_margin && *report.min_margin <= 0) {
        report.verdict = *report.min_margin < 0 ? GitVerdict::unstable : GitVerdict::strictly_semistable;
    } else {
        report.witness.reset();
    }
    return report;
}

}  // namespace

GitReport<PrimeField> classify_git(const GrassConfig<PrimeField>& cfg, Budget& budget) {
    validate(cfg);
    std::vector<Subspace<PrimeField>> all;
    for (std::size_t d = 1; d < cfg.n; ++d) {
        auto layer = enumerate_subspaces(cfg.field, cfg.n, d, budget);
        all.insert(all.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return classify_over(cfg, all);
}

template <class K>
GitReport<K> classify_git(const GrassConfig<K>& cfg, const std::vector<Subspace<K>>& candidates) {
    validate(cfg);
    for (const auto& l : candidates) {
        if (l.ambient_dim() != cfg.n) throw DimensionError("candidate subspace is not in V");
    }
    std::vector<Subspace<K>> sorted = candidates;
    std::sort(sorted.begin(), sorted.end());
    auto report = classify_over(cfg, sorted);
    report.complete = false;
    return report;
}

HilbertMumfordReport verify_hilbert_mumford(const GrassConfig<PrimeField>& cfg, Budget& budget) {
    validate(cfg);
    const PrimeField& f = cfg.field;
    const std::size_t n = cfg.n;
    HilbertMumfordReport report;
    report.criterion = classify_git(cfg, budget).verdict;
    const auto weights = extreme_weights(n);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
        if (total > budget.remaining()) break;
        total *= f.size();
    }
    budget.require(total);
    budget.charge(total);
    Matrix<PrimeField> basis(f, n, n);
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            for (std::size_t k = n * n; k-- > 0;) {
                auto& e = basis(k / n, k % n);
                e = static_cast<PrimeField::value_type>((e + 1) % f.size());
                if (e != 0) break;
            }
        }
        if (rank(basis) != n) continue;
        ++report.bases_checked;
        for (const auto& r : weights) {
            OnePS<PrimeField> ops{basis, r};
            const Rational mu = mu_total(cfg, ops);
            if (!report.min_mu || mu < *report.min_mu) {
                report.min_mu = mu;
                report.minimiser = ops;
            }
        }
    }
    if (report.min_mu) {
        report.semistable_agrees = (*report.min_mu >= 0) == (report.criterion != GitVerdict::unstable);
        report.stable_agrees = (*report.min_mu > 0) == (report.criterion == GitVerdict::stable);
    } else {
        report.semistable_agrees = report.criterion != GitVerdict::unstable;
        report.stable_agrees = report.criterion == GitVerdict::stable;
    }
    return report;
}

#define PARASTAB_INSTANTIATE_GIT(K)                                                           \
    template void validate<K>(const GrassConfig<K>&);                                         \
    template void validate<K>(const OnePS<K>&);                                               \
    template Subspace<K> tensor_with<K>(std::size_t, const Subspace<K>&);                     \
    template long mu_factor<K>(const Subspace<K>&, std::size_t, const OnePS<K>&);             \
    template Rational mu_total<K>(const GrassConfig<K>&, const OnePS<K>&);                    \
    template Rational criterion_margin<K>(const GrassConfig<K>&, const Subspace<K>&);         \
    template GitReport<K> classify_git<K>(const GrassConfig<K>&, const std::vector<Subspace<K>>&);

PARASTAB_INSTANTIATE_GIT(Rationals)
PARASTAB_INSTANTIATE_GIT(PrimeField)

}  // namespace parastab
