#include "parastab/parabolic.hpp"

#include <algorithm>

#include "parastab/errors.hpp"

namespace parastab {

namespace {

std::string weight_pointer(std::size_t x, std::size_t i) {
    return "/punctures/" + std::to_string(x) + "/weights/" + std::to_string(i);
}

}  // namespace

WeightSystem::WeightSystem(std::vector<PunctureWeights> punctures) : punctures_(std::move(punctures)) {
    for (std::size_t x = 0; x < punctures_.size(); ++x) {
        const auto& a = punctures_[x].alpha;
        if (a.empty()) {
            throw ValidationError("puncture " + punctures_[x].id + " has no weights", "/punctures/" + std::to_string(x) + "/weights");
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= 1) {
                throw ValidationError("weight " + to_string(a[i]) + " at puncture " + punctures_[x].id +
                                          " is outside [0, 1)",
                                      weight_pointer(x, i));
            }
            if (i > 0 && a[i] <= a[i - 1]) {
                throw ValidationError("weights at puncture " + punctures_[x].id + " are not strictly increasing",
                                      weight_pointer(x, i));
            }
        }
    }
}

std::vector<long> ParabolicNumerics::quotient_ranks(std::size_t x) const {
    std::vector<long> r;
    for (long d : flag_dims[x]) r.push_back(rank - d);
    return r;
}

std::vector<long> ParabolicNumerics::jumps(std::size_t x) const {
    std::vector<long> m;
    for (std::size_t i = 0; i + 1 < flag_dims[x].size(); ++i) m.push_back(flag_dims[x][i] - flag_dims[x][i + 1]);
    return m;
}

void validate(const ParabolicNumerics& p, FlagStrictness strictness) {
    if (p.rank <= 0) throw ValidationError("rank must be positive", "/rank");
    if (p.genus < 0) throw ValidationError("genus must be non-negative", "/genus");
    if (p.flag_dims.size() != p.weights.size()) {
        throw ValidationError("flag dimensions and weights disagree on the number of punctures", "/flag_dims");
    }
    for (std::size_t x = 0; x < p.flag_dims.size(); ++x) {
        const auto& dims = p.flag_dims[x];
        const std::string ptr = "/flag_dims/" + std::to_string(x);
        if (dims.size() != p.weights.length(x) + 1) {
            throw ValidationError("puncture " + std::to_string(x) + " needs l_x + 1 flag dimensions", ptr);
        }
        if (dims.front() != p.rank) throw ValidationError("dim E_{x,1} must equal the rank", ptr + "/0");
        if (dims.back() != 0) throw ValidationError("dim E_{x,l+1} must be 0", ptr + "/" + std::to_string(dims.size() - 1));
        for (std::size_t i = 1; i < dims.size(); ++i) {
            const bool ok = strictness == FlagStrictness::strict ? dims[i] < dims[i - 1] : dims[i] <= dims[i - 1];
            if (!ok || dims[i] < 0) {
                throw ValidationError("flag dimensions must decrease", ptr + "/" + std::to_string(i));
            }
        }
    }
}

Rational owt_at(const ParabolicNumerics& p, std::size_t x) {
    Rational total = 0;
    const auto& alpha = p.weights[x].alpha;
    const auto& dims = p.flag_dims[x];
    for (std::size_t i = 0; i < alpha.size(); ++i) total += alpha[i] * (dims[i] - dims[i + 1]);
    return total;
}

Rational owt(const ParabolicNumerics& p) {
    Rational total = 0;
    for (std::size_t x = 0; x < p.weights.size(); ++x) total += owt_at(p, x);
    return total;
}

Rational pdeg(const ParabolicNumerics& p) { return p.degree + owt(p); }

Rational pmu(const ParabolicNumerics& p) { return pdeg(p) / p.rank; }

Rational eta(const ParabolicNumerics& p) { return owt(p) / p.rank; }

Rational par_hilbert(const ParabolicNumerics& p, long m) {
    return Rational(p.degree) + Rational(p.rank) * (m + 1 - p.genus) + owt(p);
}

std::string to_string(GiesekerOrder order) {
    switch (order) {
        case GiesekerOrder::precedes_strictly: return "precedes_strictly";
        case GiesekerOrder::precedes_eq: return "precedes_eq";
        case GiesekerOrder::exceeds: return "exceeds";
    }
    return "?";
}

GiesekerOrder gieseker_leq(const ParabolicNumerics& f, const ParabolicNumerics& e) {
    if (f.genus != e.genus) throw ValidationError("Gieseker comparison needs a common genus", "/genus");
    // parP(m)/rk is linear in m; recover its coefficients from two evaluations
    // and compare leading coefficient first.
    auto reduced = [](const ParabolicNumerics& p) {
        const Rational at0 = par_hilbert(p, 0) / p.rank;
        const Rational at1 = par_hilbert(p, 1) / p.rank;
        return std::pair<Rational, Rational>{at1 - at0, at0};
    };
    const auto [lf, cf] = reduced(f);
    const auto [le, ce] = reduced(e);
    const int lead = cmp(lf, le);
    const int c = lead != 0 ? lead : cmp(cf, ce);
    if (c < 0) return GiesekerOrder::precedes_strictly;
    if (c == 0) return GiesekerOrder::precedes_eq;
    return GiesekerOrder::exceeds;
}

Rational delta_gap(long rank, const WeightSystem& weights) {
    Integer denom = 1;
    for (long k = 2; k <= rank; ++k) denom *= k;
    for (const auto& pw : weights.punctures()) {
        for (const auto& a : pw.alpha) denom *= a.get_den();
    }
    return Rational(Integer(1), denom);
}

template <class K>
ParabolicNumerics ParabolicSpace<K>::numerics() const {
    ParabolicNumerics p;
    p.rank = static_cast<long>(rank);
    p.degree = degree;
    p.genus = genus;
    p.weights = weights;
    for (const auto& chain : flags) {
        std::vector<long> dims;
        for (const auto& s : chain) dims.push_back(static_cast<long>(s.dim()));
        p.flag_dims.push_back(std::move(dims));
    }
    return p;
}

template <class K>
void validate(const ParabolicSpace<K>& e, FlagStrictness strictness) {
    if (e.flags.size() != e.weights.size()) {
        throw ValidationError("flags and weights disagree on the number of punctures", "/punctures");
    }
    for (std::size_t x = 0; x < e.flags.size(); ++x) {
        const auto& chain = e.flags[x];
        const std::string ptr = "/punctures/" + std::to_string(x) + "/flag";
        if (chain.size() != e.weights.length(x) + 1) {
            throw ValidationError("puncture " + e.weights[x].id + " has " + std::to_string(e.weights.length(x)) +
                                      " weights but " + std::to_string(chain.size()) + " flag steps",
                                  ptr);
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].ambient_dim() != e.rank) throw ValidationError("flag step in wrong ambient dimension", ptr);
            if (i > 0 && !chain[i - 1].contains(chain[i])) {
                throw ValidationError("flag is not nested at step " + std::to_string(i + 1), ptr);
            }
            if (i > 0 && strictness == FlagStrictness::strict && chain[i].dim() == chain[i - 1].dim()) {
                throw ValidationError("flag is not strictly nested at step " + std::to_string(i + 1), ptr);
            }
        }
        if (!chain.front().is_full()) throw ValidationError("E_{x,1} must be the whole fiber", ptr);
        if (!chain.back().is_zero()) throw ValidationError("E_{x,l+1} must be zero", ptr);
    }
    validate(e.numerics(), strictness);
}

template <class K>
ParabolicSpace<K> make_parabolic_space(K field, std::size_t rank, long degree, WeightSystem weights,
                                       const std::vector<std::vector<Subspace<K>>>& interior_steps, long genus) {
    ParabolicSpace<K> e{field, rank, degree, genus, std::move(weights), {}};
    for (const auto& steps : interior_steps) {
        std::vector<Subspace<K>> chain;
        chain.push_back(Subspace<K>::full(field, rank));
        chain.insert(chain.end(), steps.begin(), steps.end());
        chain.push_back(Subspace<K>::zero(field, rank));
        e.flags.push_back(std::move(chain));
    }
    validate(e, FlagStrictness::strict);
    return e;
}

template <class K>
QuotientCoordinates<K> quotient_coordinates(const Subspace<K>& w) {
    const K& f = w.field();
    const std::size_t r = w.ambient_dim();
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < r; ++j) {
        if (!std::binary_search(w.pivots().begin(), w.pivots().end(), j)) free.push_back(j);
    }
    QuotientCoordinates<K> q{Matrix<K>(f, free.size(), r), Matrix<K>(f, r, free.size())};
    for (std::size_t j = 0; j < r; ++j) {
        typename Matrix<K>::Vector e(r, f.zero());
        e[j] = f.one();
        const auto red = w.reduce(e);
        for (std::size_t k = 0; k < free.size(); ++k) q.projection(k, j) = red[free[k]];
    }
    for (std::size_t k = 0; k < free.size(); ++k) q.lift(free[k], k) = f.one();
    return q;
}

template <class K>
Matrix<K> restrict_endomorphism(const Matrix<K>& a, const Subspace<K>& w) {
    Matrix<K> out(a.field(), w.dim(), w.dim());
    for (std::size_t k = 0; k < w.dim(); ++k) {
        const auto image = a.apply(w.basis().row(k));
        const auto c = w.coordinates(image);  // throws if W is not invariant
        for (std::size_t i = 0; i < w.dim(); ++i) out(i, k) = c[i];
    }
    return out;
}

template <class K>
Matrix<K> quotient_endomorphism(const Matrix<K>& a, const Subspace<K>& w) {
    if (!maps_into(a, w, w)) throw DimensionError("quotient endomorphism needs an invariant subspace");
    const auto q = quotient_coordinates(w);
    return q.projection * a * q.lift;
}

template <class K>
Subspace<K> in_coordinates(const Subspace<K>& u, const Subspace<K>& w) {
    Matrix<K> gens(w.field(), 0, w.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        const auto c = w.coordinates(u.basis().row(i));
        gens.append_row(c);
    }
    return Subspace<K>::span(gens);
}

template <class K>
ParabolicSpace<K> induced_substructure(const ParabolicSpace<K>& e, const std::vector<Subspace<K>>& w, long sub_degree) {
    if (w.size() != e.flags.size()) throw DimensionError("one subspace per puncture is required");
    const std::size_t s = w.empty() ? 0 : w.front().dim();
    for (const auto& wx : w) {
        if (wx.dim() != s) throw DimensionError("sub-object fibers must share one dimension");
        if (wx.ambient_dim() != e.rank) throw DimensionError("sub-object fiber in wrong ambient dimension");
    }
    ParabolicSpace<K> out{e.field, s, sub_degree, e.genus, e.weights, {}};
    for (std::size_t x = 0; x < e.flags.size(); ++x) {
        std::vector<Subspace<K>> chain;
        for (const auto& step : e.flags[x]) chain.push_back(in_coordinates(intersect(step, w[x]), w[x]));
        out.flags.push_back(std::move(chain));
    }
    return out;
}

template <class K>
ParabolicSpace<K> induced_substructure(const ParabolicSpace<K>& e, const Subspace<K>& w, long sub_degree) {
    if (e.flags.empty()) {
        return ParabolicSpace<K>{e.field, w.dim(), sub_degree, e.genus, e.weights, {}};
    }
    return induced_substructure(e, std::vector<Subspace<K>>(e.flags.size(), w), sub_degree);
}

template <class K>
ParabolicSpace<K> quotient_structure(const ParabolicSpace<K>& e, const Subspace<K>& w,
                                     std::optional<long> quotient_degree) {
    if (w.ambient_dim() != e.rank) throw DimensionError("quotient by a subspace of the wrong ambient");
    const auto q = quotient_coordinates(w);
    ParabolicSpace<K> out{e.field, e.rank - w.dim(), quotient_degree.value_or(e.degree), e.genus, e.weights, {}};
    for (const auto& chain : e.flags) {
        std::vector<Subspace<K>> image_chain;
        for (const auto& step : chain) image_chain.push_back(image(q.projection, step));
        out.flags.push_back(std::move(image_chain));
    }
    return out;
}

template <class K>
ParabolicSpace<K> direct_sum(const ParabolicSpace<K>& e1, const ParabolicSpace<K>& e2) {
    if (!(e1.weights == e2.weights)) throw ValidationError("direct sum needs a common weight system");
    const K& f = e1.field;
    const std::size_t r = e1.rank + e2.rank;
    ParabolicSpace<K> out{f, r, e1.degree + e2.degree, e1.genus, e1.weights, {}};
    for (std::size_t x = 0; x < e1.flags.size(); ++x) {
        std::vector<Subspace<K>> chain;
        for (std::size_t i = 0; i < e1.flags[x].size(); ++i) {
            Matrix<K> gens(f, 0, r);
            const auto& a = e1.flags[x][i].basis();
            const auto& b = e2.flags[x][i].basis();
            for (std::size_t k = 0; k < a.rows(); ++k) {
                typename Matrix<K>::Vector v(r, f.zero());
                std::copy(a.row(k).begin(), a.row(k).end(), v.begin());
                gens.append_row(v);
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                typename Matrix<K>::Vector v(r, f.zero());
                std::copy(b.row(k).begin(), b.row(k).end(), v.begin() + static_cast<std::ptrdiff_t>(e1.rank));
                gens.append_row(v);
            }
            chain.push_back(Subspace<K>::span(gens));
        }
        out.flags.push_back(std::move(chain));
    }
    return out;
}

std::vector<QuotientSlope> quotient_slopes(const ParabolicSpace<PrimeField>& e, Budget& budget) {
    std::vector<QuotientSlope> out;
    for (std::size_t d = 0; d < e.rank; ++d) {
        for (auto& w : enumerate_subspaces(e.field, e.rank, d, budget)) {
            const auto q = quotient_structure(e, w, e.degree);
            out.push_back({std::move(w), pmu(q)});
        }
    }
    return out;
}

QuotientSlope min_quotient_slope(const ParabolicSpace<PrimeField>& e, Budget& budget) {
    auto all = quotient_slopes(e, budget);
    if (all.empty()) throw PreconditionError("rank-zero parabolic space has no quotients");
    auto best = all.begin();
    for (auto it = all.begin(); it != all.end(); ++it) {
        if (it->slope < best->slope) best = it;
    }
    return *best;
}

#define PARASTAB_INSTANTIATE_PARABOLIC(K)                                                                         \
    template struct ParabolicSpace<K>;                                                                           \
    template void validate<K>(const ParabolicSpace<K>&, FlagStrictness);                                          \
    template ParabolicSpace<K> make_parabolic_space<K>(K, std::size_t, long, WeightSystem,                       \
                                                       const std::vector<std::vector<Subspace<K>>>&, long);      \
    template QuotientCoordinates<K> quotient_coordinates<K>(const Subspace<K>&);                                 \
    template Matrix<K> restrict_endomorphism<K>(const Matrix<K>&, const Subspace<K>&);                           \
    template Matrix<K> quotient_endomorphism<K>(const Matrix<K>&, const Subspace<K>&);                           \
    template Subspace<K> in_coordinates<K>(const Subspace<K>&, const Subspace<K>&);                              \
    template ParabolicSpace<K> induced_substructure<K>(const ParabolicSpace<K>&, const std::vector<Subspace<K>>&, \
                                                       long);                                                    \
    template ParabolicSpace<K> induced_substructure<K>(const ParabolicSpace<K>&, const Subspace<K>&, long);      \
    template ParabolicSpace<K> quotient_structure<K>(const ParabolicSpace<K>&, const Subspace<K>&,               \
                                                     std::optional<long>);                                       \
    template ParabolicSpace<K> direct_sum<K>(const ParabolicSpace<K>&, const ParabolicSpace<K>&);

PARASTAB_INSTANTIATE_PARABOLIC(Rationals)
PARASTAB_INSTANTIATE_PARABOLIC(PrimeField)

}  // namespace parastab
