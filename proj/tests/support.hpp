#pragma once

// Shared helpers for the test suites: seeded generators and small constructors.

#include <random>
#include <string>
#include <vector>

#include "parastab/matrix.hpp"
#include "parastab/subspace.hpp"

namespace parastab::testing {

using Rng = std::mt19937_64;

inline Rational q(const char* s) { return parse_rational(s); }

inline Matrix<Rationals> qmat(const std::vector<std::vector<long>>& rows) {
    Rationals f;
    std::vector<Matrix<Rationals>::Vector> r;
    for (const auto& row : rows) {
        Matrix<Rationals>::Vector v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return Matrix<Rationals>::from_rows(f, r, rows.empty() ? 0 : rows[0].size());
}

inline Matrix<PrimeField> fmat(const PrimeField& f, const std::vector<std::vector<long>>& rows) {
    std::vector<Matrix<PrimeField>::Vector> r;
    for (const auto& row : rows) {
        Matrix<PrimeField>::Vector v;
        for (long x : row) v.push_back(f.from_int(x));
        r.push_back(std::move(v));
    }
    return Matrix<PrimeField>::from_rows(f, r, rows.empty() ? 0 : rows[0].size());
}

template <class K>
Subspace<K> span_rows(const Matrix<K>& m) {
    return Subspace<K>::span(m);
}

inline Subspace<Rationals> qspan(std::size_t n, const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return Subspace<Rationals>::zero(Rationals{}, n);
    return Subspace<Rationals>::span(qmat(rows));
}

inline Subspace<PrimeField> fspan(const PrimeField& f, std::size_t n, const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return Subspace<PrimeField>::zero(f, n);
    return Subspace<PrimeField>::span(fmat(f, rows));
}

inline PrimeField::value_type random_element(const PrimeField& f, Rng& rng) {
    return static_cast<PrimeField::value_type>(std::uniform_int_distribution<unsigned>(0, f.size() - 1)(rng));
}

inline Rational random_small_rational(Rng& rng, int max_abs = 3, int max_den = 3) {
    const long num = std::uniform_int_distribution<long>(-max_abs, max_abs)(rng);
    const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<PrimeField> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(f, rng);
    }
    return m;
}

inline Matrix<Rationals> random_matrix(const Rationals& f, std::size_t rows, std::size_t cols, Rng& rng,
                                       int max_abs = 3, int max_den = 2) {
    Matrix<Rationals> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_small_rational(rng, max_abs, max_den);
    }
    return m;
}

template <class K>
Matrix<K> random_invertible(const K& f, std::size_t n, Rng& rng) {
    while (true) {
        auto m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

}  // namespace parastab::testing
