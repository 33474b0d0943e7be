#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "parastab/field.hpp"

namespace parastab {

/// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
public:
    using value_type = typename K::value_type;
    using Vector = std::vector<value_type>;

    explicit Matrix(K field = K(), std::size_t rows = 0, std::size_t cols = 0);

    static Matrix identity(K field, std::size_t n);
    /// Throws DimensionError on ragged input.
    static Matrix from_rows(K field, const std::vector<Vector>& rows, std::size_t cols);
    static Matrix column(K field, const Vector& v);

    const K& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
    Vector column_vector(std::size_t j) const;

    void append_row(std::span<const value_type> r);
    void swap_rows(std::size_t a, std::size_t b);
    /// Keeps the first n rows.
    void truncate_rows(std::size_t n);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const value_type& c) const;
    Matrix transpose() const;
    /// y = A x for a column vector x.
    Vector apply(std::span<const value_type> x) const;

    value_type trace() const;
    bool is_zero() const;
    bool is_scalar() const;
    bool operator==(const Matrix& rhs) const;

private:
    K field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

/// In-place reduced row echelon form with zero rows dropped. Returns pivot columns.
template <class K>
std::vector<std::size_t> reduce_to_rref(Matrix<K>& m);

template <class K>
std::size_t rank(Matrix<K> m);

/// Basis (as rows) of {x : A x = 0}, in the canonical order of free columns.
template <class K>
Matrix<K> nullspace(const Matrix<K>& a);

/// Throws DimensionError when A is not square or invertible.
template <class K>
Matrix<K> inverse(const Matrix<K>& a);

/// Coefficients c_0..c_n (low to high) of det(x I - A), computed division-free
/// (Berkowitz) so that it is valid over every field.
template <class K>
std::vector<typename K::value_type> characteristic_polynomial(const Matrix<K>& a);

/// Evaluates p(A) for coefficients low to high.
template <class K>
Matrix<K> evaluate_polynomial(const std::vector<typename K::value_type>& coeffs, const Matrix<K>& a);

}  // namespace parastab
