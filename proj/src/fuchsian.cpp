#include "parastab/fuchsian.hpp"

#include <algorithm>
#include <set>

#include "parastab/errors.hpp"

namespace parastab {

const char* const kDegreeZeroCaveat =
    "sub-objects are invariant subspaces of the fiber taken as degree-0 saturated subbundles; "
    "invariant subbundles of negative degree are not visible to this model";

namespace {

template <class K>
using Value = typename K::value_type;

template <class K>
Value<K> lambda_alpha(const K& f, const Value<K>& lambda, const Rational& alpha) {
    if (f.is_zero(lambda)) return f.zero();
    try {
        return f.mul(lambda, f.from_rational(alpha));
    } catch (const ValidationError&) {
        throw ValidationError("weight " + to_string(alpha) + " has no value in field " + f.name(), "/lambda");
    }
}

template <class K>
Matrix<K> shifted(const Matrix<K>& a, const Value<K>& c) {
    Matrix<K> out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) = a.field().sub(out(i, i), c);
    return out;
}

template <class K>
std::vector<Subspace<K>> proper_nonzero_sorted(std::vector<Subspace<K>> v) {
    std::erase_if(v, [](const Subspace<K>& s) { return s.is_zero() || s.is_full(); });
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Largest subspace of W invariant under every matrix.
template <class K>
Subspace<K> invariant_interior(const std::vector<Matrix<K>>& mats, Subspace<K> w) {
    for (;;) {
        Subspace<K> next = w;
        for (const auto& a : mats) {
            // {v in next : A v in w} = next ∩ A^{-1}(w)
            const auto ann = annihilator(w);
            const auto pre = kernel(ann.basis() * a);
            next = intersect(next, pre);
        }
        if (next == w) return w;
        w = next;
    }
}

template <class K>
std::vector<Subspace<K>> eigen_seeds(const std::vector<Matrix<K>>& mats) {
    std::vector<Subspace<K>> seeds;
    for (const auto& a : mats) {
        const K& f = a.field();
        const std::size_t r = a.rows();
        for (const auto& c : roots_in_field(f, characteristic_polynomial(a))) {
            const auto m = shifted(a, c);
            auto power = Matrix<K>::identity(f, r);
            for (std::size_t k = 0; k < r; ++k) power = power * m;
            const auto eig = kernel(m);
            seeds.push_back(eig);
            seeds.push_back(kernel(power));
            for (std::size_t k = 0; k < eig.dim(); ++k) {
                seeds.push_back(Subspace<K>::span(f, r, {eig.basis().row_vector(k)}));
            }
        }
    }
    return seeds;
}

template <class K>
bool eigenspaces_are_lines(const Matrix<K>& a) {
    for (const auto& c : roots_in_field(a.field(), characteristic_polynomial(a))) {
        if (kernel(shifted(a, c)).dim() > 1) return false;
    }
    return true;
}

template <class K>
bool all_invariant(const std::vector<Matrix<K>>& mats, const Subspace<K>& w) {
    return std::all_of(mats.begin(), mats.end(), [&](const Matrix<K>& a) { return maps_into(a, w, w); });
}

}  // namespace

template <class K>
void validate_structure(const FuchsianLambdaSystem<K>& sys) {
    validate(sys.space, FlagStrictness::weak);
    if (sys.residues.empty()) throw ValidationError("a system needs at least one puncture", "/punctures");
    if (sys.residues.size() != sys.space.flags.size()) {
        throw DimensionError("one residue per puncture is required");
    }
    for (std::size_t j = 0; j < sys.residues.size(); ++j) {
        const auto& a = sys.residues[j];
        if (a.rows() != sys.rank() || a.cols() != sys.rank()) {
            throw DimensionError("residue at puncture " + sys.space.weights[j].id + " is not " +
                                 std::to_string(sys.rank()) + "x" + std::to_string(sys.rank()));
        }
    }
}

bool ResidualReport::local_conditions_hold() const {
    return std::all_of(punctures.begin(), punctures.end(),
                       [](const PunctureCheck& c) { return c.flag_preserved && c.residual && c.trace; });
}

template <class K>
ResidualReport validate_lambda_connection(const FuchsianLambdaSystem<K>& sys) {
    validate_structure(sys);
    const K& f = sys.field();
    const auto numerics = sys.space.numerics();
    ResidualReport report;
    Matrix<K> total(f, sys.rank(), sys.rank());
    Value<K> trace_sum = f.zero();
    for (std::size_t j = 0; j < sys.residues.size(); ++j) {
        const auto& a = sys.residues[j];
        const auto& flags = sys.space.flags[j];
        const auto& alpha = sys.space.weights[j].alpha;
        const auto jumps = numerics.jumps(j);
        PunctureCheck c;
        c.id = sys.space.weights[j].id;
        c.flag_preserved = true;
        c.residual = true;
        for (std::size_t i = 0; i + 1 < flags.size(); ++i) {
            c.flag_preserved = c.flag_preserved && maps_into(a, flags[i], flags[i]);
            const auto m = shifted(a, lambda_alpha(f, sys.lambda, alpha[i]));
            c.residual = c.residual && maps_into(m, flags[i], flags[i + 1]);
            c.beta += alpha[i] * jumps[i];
        }
        const auto tr = a.trace();
        c.trace = f.equal(tr, lambda_alpha(f, sys.lambda, c.beta));
        c.trace_value = f.format(tr);
        report.beta_total += c.beta;
        for (const auto& w : alpha) report.xi_degree -= w;
        report.punctures.push_back(std::move(c));
        total = total + a;
        trace_sum = f.add(trace_sum, tr);
    }
    report.residue_sum_zero = total.is_zero();
    report.fuchs_relation = f.is_zero(f.add(trace_sum, f.mul(sys.lambda, f.from_int(sys.space.degree))));
    report.pdeg_zero = pdeg(numerics) == 0;
    return report;
}

std::string to_string(EnumerationMode mode) {
    switch (mode) {
        case EnumerationMode::exhaustive_fp: return "exhaustive_Fp";
        case EnumerationMode::burnside: return "burnside_certified";
        case EnumerationMode::candidates: return "candidate_list";
    }
    return "?";
}

EnumerationMode parse_enumeration_mode(const std::string& text) {
    if (text == "exhaustive" || text == "exhaustive_Fp") return EnumerationMode::exhaustive_fp;
    if (text == "burnside" || text == "burnside_certified") return EnumerationMode::burnside;
    if (text == "candidates" || text == "candidate_list") return EnumerationMode::candidates;
    throw ValidationError("unknown enumeration mode '" + text + "'", "/mode");
}

template <class K>
std::size_t generated_algebra_dim(const K& f, const std::vector<Matrix<K>>& generators, std::size_t n) {
    if (n == 0) return 0;
    auto flatten = [n](const Matrix<K>& m) {
        typename Matrix<K>::Vector v;
        v.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) v.insert(v.end(), m.row(i).begin(), m.row(i).end());
        return v;
    };
    std::vector<Matrix<K>> basis{Matrix<K>::identity(f, n)};
    auto span = Subspace<K>::span(f, n * n, {flatten(basis.front())});
    for (std::size_t next = 0; next < basis.size() && span.dim() < n * n; ++next) {
        for (const auto& g : generators) {
            auto prod = g * basis[next];
            auto v = flatten(prod);
            if (!span.contains(v)) {
                span = sum(span, Subspace<K>::span(f, n * n, {v}));
                basis.push_back(std::move(prod));
            }
        }
    }
    return span.dim();
}

template <class K>
Subspace<K> invariant_closure(const std::vector<Matrix<K>>& mats, const Subspace<K>& w) {
    Subspace<K> cur = w;
    for (;;) {
        Subspace<K> next = cur;
        for (const auto& a : mats) next = sum(next, image(a, cur));
        if (next.dim() == cur.dim()) return cur;
        cur = next;
    }
}

template <class K>
InvariantFamily<K> invariant_subspaces(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                                       const std::vector<Subspace<K>>& candidates) {
    validate_structure(sys);
    const auto& mats = sys.residues;
    const std::size_t r = sys.rank();
    InvariantFamily<K> out;
    out.mode = mode;
    switch (mode) {
        case EnumerationMode::exhaustive_fp: {
            if constexpr (K::is_prime_field) {
                for (auto& w : enumerate_all_subspaces(sys.field(), r, budget)) {
                    if (!w.is_zero() && !w.is_full() && all_invariant(mats, w)) out.subspaces.push_back(std::move(w));
                }
                out.complete = true;
                return out;
            } else {
                throw PreconditionError("exhaustive enumeration needs a prime field; use burnside or candidates");
            }
        }
        case EnumerationMode::burnside: {
            if (generated_algebra_dim(sys.field(), mats, r) == r * r) {
                out.complete = true;
                return out;
            }
            std::vector<Matrix<K>> transposes;
            for (const auto& a : mats) transposes.push_back(a.transpose());
            std::vector<Subspace<K>> family;
            for (const auto& seed : eigen_seeds(mats)) {
                family.push_back(invariant_closure(mats, seed));
                family.push_back(invariant_interior(mats, seed));
            }
            for (const auto& seed : eigen_seeds(transposes)) {
                family.push_back(annihilator(invariant_closure(transposes, seed)));
                family.push_back(annihilator(invariant_interior(transposes, seed)));
            }
            out.subspaces = proper_nonzero_sorted(std::move(family));
            // For r <= 3 every proper invariant subspace is a common eigenline or the
            // annihilator of one for the transposes. When some residue has only
            // one-dimensional eigenspaces, all of those lines are seeds.
            out.complete = r <= 1 || (r <= 3 && std::any_of(mats.begin(), mats.end(), [](const Matrix<K>& a) {
                                          return eigenspaces_are_lines(a);
                                      }));
            return out;
        }
        case EnumerationMode::candidates: {
            for (const auto& w : candidates) {
                if (w.ambient_dim() != r) throw DimensionError("candidate subspace in the wrong ambient dimension");
                if (all_invariant(mats, w)) out.subspaces.push_back(w);
            }
            out.subspaces = proper_nonzero_sorted(std::move(out.subspaces));
            out.complete = r <= 1;
            return out;
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::strictly_semistable: return "strictly_semistable";
        case Verdict::unstable: return "unstable";
    }
    return "?";
}

template <class K>
Rational subobject_slope(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w) {
    if (w.is_full()) return pmu(sys.space);
    return pmu(induced_substructure(sys.space, w, 0));
}

template <class K>
StabilityReport<K> classify_stability(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                                      const std::vector<Subspace<K>>& candidates) {
    const auto family = invariant_subspaces(sys, mode, budget, candidates);
    StabilityReport<K> report;
    report.checked_mode = mode;
    report.complete = family.complete;
    report.slope = pmu(sys.space);
    for (const auto& w : family.subspaces) {
        const Rational s = subobject_slope(sys, w);
        if (s < report.slope) continue;
        if (!report.witness || s > report.witness->slope) report.witness = Witness<K>{w, s};
    }
    if (report.witness) {
        report.verdict = report.witness->slope > report.slope ? Verdict::unstable : Verdict::strictly_semistable;
    }
    return report;
}

template <class K>
FuchsianLambdaSystem<K> restrict_system(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& u) {
    FuchsianLambdaSystem<K> out{induced_substructure(sys.space, u, u.is_full() ? sys.space.degree : 0), sys.lambda,
                                {}};
    for (const auto& a : sys.residues) out.residues.push_back(restrict_endomorphism(a, u));
    return out;
}

template <class K>
FuchsianLambdaSystem<K> quotient_system(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w) {
    FuchsianLambdaSystem<K> out{quotient_structure(sys.space, w, sys.space.degree), sys.lambda, {}};
    for (const auto& a : sys.residues) out.residues.push_back(quotient_endomorphism(a, w));
    return out;
}

template <class K>
FuchsianLambdaSystem<K> subquotient(const FuchsianLambdaSystem<K>& sys, const Subspace<K>& w, const Subspace<K>& u) {
    if (!u.contains(w)) throw DimensionError("subquotient needs W inside U");
    return quotient_system(restrict_system(sys, u), in_coordinates(w, u));
}

namespace {

// Walks down a chain of quotient systems, mapping choices back to the ambient space.
template <class K>
struct QuotientTower {
    FuchsianLambdaSystem<K> current;
    Subspace<K> base;  // preimage of 0 in the ambient space
    Matrix<K> lift;    // current coordinates -> ambient

    Subspace<K> preimage(const Subspace<K>& u) const { return sum(base, image(lift, u)); }

    void descend(const Subspace<K>& u) {
        const auto q = quotient_coordinates(u);
        base = preimage(u);
        current = quotient_system(current, u);
        lift = lift * q.lift;
    }
};

template <class K>
QuotientTower<K> make_tower(const FuchsianLambdaSystem<K>& sys) {
    return {sys, Subspace<K>::zero(sys.field(), sys.rank()), Matrix<K>::identity(sys.field(), sys.rank())};
}

template <class K>
void require_complete(const InvariantFamily<K>& family, const char* what) {
    if (!family.complete) {
        throw PreconditionError(std::string(what) + " needs a complete invariant-subspace enumeration; mode " +
                                to_string(family.mode) + " did not certify one");
    }
}

}  // namespace

template <class K>
Filtration<K> hn_filtration(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget,
                            CandidateOrder order) {
    Filtration<K> out;
    out.chain.push_back(Subspace<K>::zero(sys.field(), sys.rank()));
    auto tower = make_tower(sys);
    while (tower.current.rank() > 0) {
        auto family = invariant_subspaces(tower.current, mode, budget);
        require_complete(family, "HN filtration");
        family.subspaces.push_back(Subspace<K>::full(tower.current.field(), tower.current.rank()));
        if (order == CandidateOrder::reversed) std::reverse(family.subspaces.begin(), family.subspaces.end());
        // Max slope, then max dimension, then the lexicographically smallest.
        const Subspace<K>* best = nullptr;
        Rational best_slope;
        bool tied = false;
        for (const auto& w : family.subspaces) {
            const Rational s = subobject_slope(tower.current, w);
            if (best && s == best_slope && w.dim() == best->dim()) {
                tied = true;
                if (w < *best) best = &w;
            } else if (!best || s > best_slope || (s == best_slope && w.dim() > best->dim())) {
                best = &w;
                best_slope = s;
                tied = false;
            }
        }
        out.ties += tied;
        out.slopes.push_back(best_slope);
        if (best->is_full()) {
            out.chain.push_back(Subspace<K>::full(sys.field(), sys.rank()));
            break;
        }
        const Subspace<K> chosen = *best;
        tower.descend(chosen);
        out.chain.push_back(tower.base);
    }
    return out;
}

template <class K>
Filtration<K> jh_filtration(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode, Budget& budget) {
    const auto report = classify_stability(sys, mode, budget);
    if (!report.complete) throw PreconditionError("JH filtration needs a complete invariant-subspace enumeration");
    if (report.verdict == Verdict::unstable) throw PreconditionError("JH filtration needs a semistable system");
    Filtration<K> out;
    out.chain.push_back(Subspace<K>::zero(sys.field(), sys.rank()));
    auto tower = make_tower(sys);
    for (;;) {
        auto family = invariant_subspaces(tower.current, mode, budget);
        require_complete(family, "JH filtration");
        const Subspace<K>* best = nullptr;
        for (const auto& w : family.subspaces) {
            if (subobject_slope(tower.current, w) != report.slope) continue;
            if (!best || w.dim() < best->dim()) best = &w;
        }
        out.slopes.push_back(report.slope);
        if (!best) {
            out.chain.push_back(Subspace<K>::full(sys.field(), sys.rank()));
            break;
        }
        const Subspace<K> chosen = *best;
        tower.descend(chosen);
        out.chain.push_back(tower.base);
    }
    return out;
}

template <class K>
std::vector<FactorInvariant> graded_invariants(const FuchsianLambdaSystem<K>& sys, EnumerationMode mode,
                                               Budget& budget) {
    const auto jh = jh_filtration(sys, mode, budget);
    std::vector<FactorInvariant> out;
    for (std::size_t i = 1; i < jh.chain.size(); ++i) {
        const auto factor = subquotient(sys, jh.chain[i - 1], jh.chain[i]);
        FactorInvariant inv;
        inv.dim = factor.rank();
        inv.slope = jh.slopes[i - 1];
        for (const auto& a : factor.residues) {
            std::vector<std::string> coeffs;
            for (const auto& c : characteristic_polynomial(a)) coeffs.push_back(sys.field().format(c));
            inv.charpolys.push_back(std::move(coeffs));
        }
        inv.flag_dims = factor.space.numerics().flag_dims;
        out.push_back(std::move(inv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(SEquivalence s) {
    return s == SEquivalence::equivalent_invariants ? "equivalent_invariants" : "distinguished";
}

template <class K>
SEquivalence s_equivalent_weak(const FuchsianLambdaSystem<K>& a, const FuchsianLambdaSystem<K>& b,
                               EnumerationMode mode, Budget& budget) {
    if (a.rank() != b.rank() || a.space.degree != b.space.degree || !(a.space.weights == b.space.weights)) {
        throw PreconditionError("S-equivalence compares systems of one rank, degree and weight system");
    }
    return graded_invariants(a, mode, budget) == graded_invariants(b, mode, budget)
               ? SEquivalence::equivalent_invariants
               : SEquivalence::distinguished;
}

std::optional<Matrix<PrimeField>> find_isomorphism(const FuchsianLambdaSystem<PrimeField>& a,
                                                   const FuchsianLambdaSystem<PrimeField>& b, Budget& budget) {
    validate_structure(a);
    validate_structure(b);
    if (a.rank() != b.rank() || a.residues.size() != b.residues.size() || !(a.space.weights == b.space.weights)) {
        return std::nullopt;
    }
    const PrimeField& f = a.field();
    const std::size_t r = a.rank();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < r * r; ++k) {
        if (total > budget.remaining()) break;
        total *= f.size();
    }
    budget.require(total);
    budget.charge(total);
    Matrix<PrimeField> g(f, r, r);
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            for (std::size_t k = r * r; k-- > 0;) {
                auto& e = g(k / r, k % r);
                e = static_cast<PrimeField::value_type>((e + 1) % f.size());
                if (e != 0) break;
            }
        }
        if (rank(g) != r) continue;
        bool ok = true;
        for (std::size_t j = 0; ok && j < a.residues.size(); ++j) ok = g * a.residues[j] == b.residues[j] * g;
        for (std::size_t x = 0; ok && x < a.space.flags.size(); ++x) {
            for (std::size_t i = 0; ok && i < a.space.flags[x].size(); ++i) {
                ok = image(g, a.space.flags[x][i]) == b.space.flags[x][i];
            }
        }
        if (ok) return g;
    }
    return std::nullopt;
}

template <class K>
FuchsianLambdaSystem<K> scale_action(const FuchsianLambdaSystem<K>& sys, const Value<K>& mu) {
    const K& f = sys.field();
    if (f.is_zero(mu)) throw ValidationError("scaling by zero is not part of the C* action", "/mu");
    FuchsianLambdaSystem<K> out{sys.space, f.mul(mu, sys.lambda), {}};
    for (const auto& a : sys.residues) out.residues.push_back(a.scaled(mu));
    return out;
}

template <class K>
std::optional<Matrix<K>> nilpotent_part(const Matrix<K>& a) {
    const K& f = a.field();
    const std::size_t r = a.rows();
    Matrix<K> change(f, 0, r);  // rows: generalized eigenvectors
    std::vector<Value<K>> diag;
    for (const auto& c : roots_in_field(f, characteristic_polynomial(a))) {
        const auto m = shifted(a, c);
        auto power = Matrix<K>::identity(f, r);
        for (std::size_t k = 0; k < r; ++k) power = power * m;
        const auto gen = kernel(power);
        for (std::size_t k = 0; k < gen.dim(); ++k) {
            change.append_row(gen.basis().row(k));
            diag.push_back(c);
        }
    }
    if (change.rows() != r) return std::nullopt;
    const auto p = change.transpose();  // columns are the eigenbasis
    Matrix<K> d(f, r, r);
    for (std::size_t i = 0; i < r; ++i) d(i, i) = diag[i];
    const auto semisimple = p * d * inverse(p);
    return a - semisimple;
}

bool HiggsLimitReport::passes() const {
    return split && std::all_of(strongly_parabolic.begin(), strongly_parabolic.end(), [](bool b) { return b; });
}

template <class K>
HiggsLimitReport higgs_limit_check(const FuchsianLambdaSystem<K>& sys) {
    validate_structure(sys);
    HiggsLimitReport report;
    for (std::size_t j = 0; j < sys.residues.size(); ++j) {
        const auto n = nilpotent_part(sys.residues[j]);
        if (!n) {
            report.split = false;
            report.strongly_parabolic.push_back(false);
            continue;
        }
        const auto& flags = sys.space.flags[j];
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < flags.size(); ++i) ok = maps_into(*n, flags[i], flags[i + 1]);
        report.strongly_parabolic.push_back(ok);
    }
    return report;
}

namespace {

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

template <class K>
std::vector<Value<K>> roots_in_field(const K& field, const std::vector<Value<K>>& coeffs) {
    std::vector<Value<K>> roots;
    auto eval = [&](const Value<K>& x) {
        Value<K> acc = field.zero();
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
        return acc;
    };
    if constexpr (K::is_prime_field) {
        for (unsigned c = 0; c < field.size(); ++c) {
            const auto x = static_cast<Value<K>>(c);
            if (field.is_zero(eval(x))) roots.push_back(x);
        }
    } else {
        std::size_t low = 0;
        while (low < coeffs.size() && coeffs[low] == 0) ++low;
        if (low == coeffs.size()) return roots;  // zero polynomial: no finite root set
        std::size_t high = coeffs.size() - 1;
        while (coeffs[high] == 0) --high;
        if (low > 0) roots.push_back(Rational(0));
        Integer lcm = 1;
        for (std::size_t i = low; i <= high; ++i) lcm = lcm * coeffs[i].get_den() / gcd(lcm, coeffs[i].get_den());
        const Integer a0 = Rational(coeffs[low] * lcm).get_num();
        const Integer an = Rational(coeffs[high] * lcm).get_num();
        std::set<Rational> found;
        for (const auto& p : divisors(a0)) {
            for (const auto& q : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational x(sign * p, q);
                    x.canonicalize();
                    if (eval(x) == 0) found.insert(x);
                }
            }
        }
        roots.insert(roots.end(), found.begin(), found.end());
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

#define PARASTAB_INSTANTIATE_FUCHSIAN(K)                                                                          \
    template void validate_structure<K>(const FuchsianLambdaSystem<K>&);                                          \
    template ResidualReport validate_lambda_connection<K>(const FuchsianLambdaSystem<K>&);                        \
    template std::size_t generated_algebra_dim<K>(const K&, const std::vector<Matrix<K>>&, std::size_t);                    \
    template Subspace<K> invariant_closure<K>(const std::vector<Matrix<K>>&, const Subspace<K>&);                 \
    template InvariantFamily<K> invariant_subspaces<K>(const FuchsianLambdaSystem<K>&, EnumerationMode, Budget&,  \
                                                       const std::vector<Subspace<K>>&);                          \
    template Rational subobject_slope<K>(const FuchsianLambdaSystem<K>&, const Subspace<K>&);                     \
    template StabilityReport<K> classify_stability<K>(const FuchsianLambdaSystem<K>&, EnumerationMode, Budget&,   \
                                                      const std::vector<Subspace<K>>&);                           \
    template FuchsianLambdaSystem<K> restrict_system<K>(const FuchsianLambdaSystem<K>&, const Subspace<K>&);      \
    template FuchsianLambdaSystem<K> quotient_system<K>(const FuchsianLambdaSystem<K>&, const Subspace<K>&);      \
    template FuchsianLambdaSystem<K> subquotient<K>(const FuchsianLambdaSystem<K>&, const Subspace<K>&,           \
                                                    const Subspace<K>&);                                          \
    template Filtration<K> hn_filtration<K>(const FuchsianLambdaSystem<K>&, EnumerationMode, Budget&,             \
                                            CandidateOrder);                                                      \
    template Filtration<K> jh_filtration<K>(const FuchsianLambdaSystem<K>&, EnumerationMode, Budget&);            \
    template std::vector<FactorInvariant> graded_invariants<K>(const FuchsianLambdaSystem<K>&, EnumerationMode,   \
                                                               Budget&);                                          \
    template SEquivalence s_equivalent_weak<K>(const FuchsianLambdaSystem<K>&, const FuchsianLambdaSystem<K>&,    \
                                               EnumerationMode, Budget&);                                         \
    template FuchsianLambdaSystem<K> scale_action<K>(const FuchsianLambdaSystem<K>&, const Value<K>&);            \
    template std::optional<Matrix<K>> nilpotent_part<K>(const Matrix<K>&);                                        \
    template HiggsLimitReport higgs_limit_check<K>(const FuchsianLambdaSystem<K>&);                               \
    template std::vector<Value<K>> roots_in_field<K>(const K&, const std::vector<Value<K>>&);

PARASTAB_INSTANTIATE_FUCHSIAN(Rationals)
PARASTAB_INSTANTIATE_FUCHSIAN(PrimeField)

}  // namespace parastab
