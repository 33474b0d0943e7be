#include "parastab/subspace.hpp"

#include <algorithm>
#include <limits>

#include "parastab/errors.hpp"

namespace parastab {

namespace {

template <class K>
void require_same_ambient(const Subspace<K>& u, const Subspace<K>& w, const char* op) {
    if (u.ambient_dim() != w.ambient_dim()) {
        throw DimensionError(std::string(op) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                             " and " + std::to_string(w.ambient_dim()) + " differ");
    }
}

}  // namespace

template <class K>
Subspace<K> Subspace<K>::span(const Matrix<K>& generators) {
    Matrix<K> m = generators;
    auto pivots = reduce_to_rref(m);
    return Subspace(std::move(m), std::move(pivots));
}

template <class K>
Subspace<K> Subspace<K>::span(K field, std::size_t ambient, const std::vector<Vector>& generators) {
    return span(Matrix<K>::from_rows(std::move(field), generators, ambient));
}

template <class K>
Subspace<K> Subspace<K>::zero(K field, std::size_t ambient) {
    return Subspace(Matrix<K>(std::move(field), 0, ambient), {});
}

template <class K>
Subspace<K> Subspace<K>::full(K field, std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
    return Subspace(Matrix<K>::identity(std::move(field), ambient), std::move(pivots));
}

template <class K>
typename Subspace<K>::Vector Subspace<K>::reduce(std::span<const value_type> v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector length does not match ambient dimension");
    const K& f = field();
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const value_type c = r[pivots_[i]];
        if (!f.is_zero(c)) f.axpy(std::span<value_type>(r), basis_.row(i), f.neg(c));
    }
    return r;
}

template <class K>
bool Subspace<K>::contains(std::span<const value_type> v) const {
    const auto r = reduce(v);
    const K& f = field();
    return std::all_of(r.begin(), r.end(), [&](const value_type& x) { return f.is_zero(x); });
}

template <class K>
bool Subspace<K>::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionError("containment across ambient dimensions");
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

template <class K>
typename Subspace<K>::Vector Subspace<K>::coordinates(std::span<const value_type> v) const {
    if (!contains(v)) throw DimensionError("vector is not in the subspace");
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

template <class K>
int Subspace<K>::compare(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim()) return ambient_dim() < other.ambient_dim() ? -1 : 1;
    if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
    const K& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < ambient_dim(); ++j) {
            const int c = f.compare(basis_(i, j), other.basis_(i, j));
            if (c != 0) return c;
        }
    }
    return 0;
}

template <class K>
Subspace<K> sum(const Subspace<K>& u, const Subspace<K>& w) {
    require_same_ambient(u, w, "sum");
    Matrix<K> m = u.basis();
    for (std::size_t i = 0; i < w.dim(); ++i) m.append_row(w.basis().row(i));
    return Subspace<K>::span(m);
}

template <class K>
Subspace<K> annihilator(const Subspace<K>& w) {
    return Subspace<K>::span(nullspace(w.basis()));
}

template <class K>
Subspace<K> intersect(const Subspace<K>& u, const Subspace<K>& w) {
    require_same_ambient(u, w, "intersect");
    if (u.contains(w)) return w;
    if (w.contains(u)) return u;
    // The standard form is nondegenerate on K^n, so ann(ann(X)) = X.
    return annihilator(sum(annihilator(u), annihilator(w)));
}

template <class K>
Subspace<K> image(const Matrix<K>& a, const Subspace<K>& w) {
    if (a.cols() != w.ambient_dim()) {
        throw DimensionError("image: matrix has " + std::to_string(a.cols()) + " columns, subspace lives in dimension " +
                             std::to_string(w.ambient_dim()));
    }
    Matrix<K> gens(a.field(), 0, a.rows());
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const auto y = a.apply(w.basis().row(i));
        gens.append_row(y);
    }
    return Subspace<K>::span(gens);
}

template <class K>
Subspace<K> kernel(const Matrix<K>& a) {
    return Subspace<K>::span(nullspace(a));
}

template <class K>
bool maps_into(const Matrix<K>& a, const Subspace<K>& w, const Subspace<K>& u) {
    if (a.cols() != w.ambient_dim() || a.rows() != u.ambient_dim()) throw DimensionError("maps_into shape mismatch");
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (!u.contains(a.apply(w.basis().row(i)))) return false;
    }
    return true;
}

std::uint64_t gaussian_binomial(unsigned q, std::size_t n, std::size_t d) {
    if (d > n) return 0;
    // Row-by-row Pascal recurrence [n,d] = [n-1,d-1] + q^d [n-1,d], saturating.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return (b != 0 && a > kMax / b) ? kMax : a * b; };
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t k = std::min(m, d); k >= 1; --k) {
            std::uint64_t qk = 1;
            for (std::size_t t = 0; t < k; ++t) qk = sat_mul(qk, q);
            row[k] = sat_add(row[k - 1], sat_mul(qk, row[k]));
        }
    }
    return row[d];
}

std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& field, std::size_t n, std::size_t d,
                                                      Budget& budget) {
    if (d > n) throw DimensionError("subspace dimension exceeds ambient dimension");
    budget.charge(gaussian_binomial(field.size(), n, d));

    using V = PrimeField::value_type;
    std::vector<Subspace<PrimeField>> out;
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    const V q = static_cast<V>(field.size());

    while (true) {
        // Free slots: row i, column j > pivots[i] with j not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = pivots[i] + 1; j < n; ++j) {
                if (!std::binary_search(pivots.begin(), pivots.end(), j)) slots.emplace_back(i, j);
            }
        }
        std::vector<V> values(slots.size(), 0);
        auto advance = [&] {
            for (std::size_t s = slots.size(); s > 0; --s) {
                if (++values[s - 1] < q) return true;
                values[s - 1] = 0;
            }
            return false;
        };
        do {
            Matrix<PrimeField> m(field, d, n);
            for (std::size_t i = 0; i < d; ++i) m(i, pivots[i]) = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = values[s];
            out.push_back(Subspace<PrimeField>::span(m));
        } while (advance());
        // Next pivot combination.
        std::size_t i = d;
        while (i > 0 && pivots[i - 1] == n - d + (i - 1)) --i;
        if (i == 0) break;
        ++pivots[i - 1];
        for (std::size_t k = i; k < d; ++k) pivots[k] = pivots[k - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace<PrimeField>> enumerate_all_subspaces(const PrimeField& field, std::size_t n, Budget& budget) {
    std::uint64_t total = 0;
    for (std::size_t d = 0; d <= n; ++d) total += gaussian_binomial(field.size(), n, d);
    budget.require(total);
    std::vector<Subspace<PrimeField>> out;
    for (std::size_t d = 0; d <= n; ++d) {
        auto layer = enumerate_subspaces(field, n, d, budget);
        std::move(layer.begin(), layer.end(), std::back_inserter(out));
    }
    return out;
}

#define PARASTAB_INSTANTIATE_SUBSPACE(K)                                                  \
    template class Subspace<K>;                                                          \
    template Subspace<K> intersect<K>(const Subspace<K>&, const Subspace<K>&);           \
    template Subspace<K> sum<K>(const Subspace<K>&, const Subspace<K>&);                 \
    template Subspace<K> image<K>(const Matrix<K>&, const Subspace<K>&);                 \
    template Subspace<K> kernel<K>(const Matrix<K>&);                                    \
    template Subspace<K> annihilator<K>(const Subspace<K>&);                             \
    template bool maps_into<K>(const Matrix<K>&, const Subspace<K>&, const Subspace<K>&);

PARASTAB_INSTANTIATE_SUBSPACE(Rationals)
PARASTAB_INSTANTIATE_SUBSPACE(PrimeField)

}  // namespace parastab
