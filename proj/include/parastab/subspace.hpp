#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "parastab/budget.hpp"
#include "parastab/matrix.hpp"

namespace parastab {

/// A linear subspace of K^n, stored as its reduced row-echelon basis. Two
/// subspaces are equal iff their echelon bases are identical.
template <class K>
class Subspace {
public:
    using value_type = typename K::value_type;
    using Vector = std::vector<value_type>;

    /// Span of the rows of `generators` (any rank, any row count).
    static Subspace span(const Matrix<K>& generators);
    static Subspace span(K field, std::size_t ambient, const std::vector<Vector>& generators);
    static Subspace zero(K field, std::size_t ambient);
    static Subspace full(K field, std::size_t ambient);

    const K& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }

    const Matrix<K>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const value_type> v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the echelon basis. Requires contains(v).
    Vector coordinates(std::span<const value_type> v) const;
    /// v minus its component along the pivot columns; zero iff v lies in the subspace.
    Vector reduce(std::span<const value_type> v) const;

    /// Lexicographic order: dimension first, then echelon entries row-major.
    int compare(const Subspace& other) const;
    bool operator==(const Subspace& other) const { return compare(other) == 0; }
    bool operator<(const Subspace& other) const { return compare(other) < 0; }

private:
    Subspace(Matrix<K> basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix<K> basis_;
    std::vector<std::size_t> pivots_;
};

template <class K>
Subspace<K> intersect(const Subspace<K>& u, const Subspace<K>& w);

template <class K>
Subspace<K> sum(const Subspace<K>& u, const Subspace<K>& w);

/// A(W) for a matrix acting on column vectors.
template <class K>
Subspace<K> image(const Matrix<K>& a, const Subspace<K>& w);

/// {x : A x = 0}
template <class K>
Subspace<K> kernel(const Matrix<K>& a);

/// {v : <w, v> = 0 for all w in W} under the standard bilinear form.
template <class K>
Subspace<K> annihilator(const Subspace<K>& w);

/// True when A(W) is contained in U.
template <class K>
bool maps_into(const Matrix<K>& a, const Subspace<K>& w, const Subspace<K>& u);

/// Number of d-dimensional subspaces of F_q^n. Saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned q, std::size_t n, std::size_t d);

/// All d-dimensional subspaces of F^n in lexicographic order. Charges the
/// budget with the number of subspaces before generating any of them.
std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& field, std::size_t n, std::size_t d,
                                                      Budget& budget);

/// Every subspace of F^n (dimensions 0..n), in Subspace order.
std::vector<Subspace<PrimeField>> enumerate_all_subspaces(const PrimeField& field, std::size_t n, Budget& budget);

}  // namespace parastab
