#include "parastab/matrix.hpp"

#include <algorithm>

#include "parastab/errors.hpp"

namespace parastab {

template <class K>
Matrix<K>::Matrix(K field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

template <class K>
Matrix<K> Matrix<K>::identity(K field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
}

template <class K>
Matrix<K> Matrix<K>::from_rows(K field, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(cols));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

template <class K>
Matrix<K> Matrix<K>::column(K field, const Vector& v) {
    Matrix m(std::move(field), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

template <class K>
typename Matrix<K>::Vector Matrix<K>::column_vector(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <class K>
void Matrix<K>::append_row(std::span<const value_type> r) {
    if (r.size() != cols_) throw DimensionError("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

template <class K>
void Matrix<K>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

template <class K>
void Matrix<K>::truncate_rows(std::size_t n) {
    if (n >= rows_) return;
    rows_ = n;
    data_.resize(rows_ * cols_);
}

template <class K>
Matrix<K> Matrix<K>::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const value_type& a = (*this)(i, k);
            if (field_.is_zero(a)) continue;
            field_.axpy(out.row(i), rhs.row(k), a);
        }
    }
    return out;
}

template <class K>
Matrix<K> Matrix<K>::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
    return out;
}

template <class K>
Matrix<K> Matrix<K>::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
    return out;
}

template <class K>
Matrix<K> Matrix<K>::scaled(const value_type& c) const {
    Matrix out(*this);
    for (auto& v : out.data_) v = field_.mul(c, v);
    return out;
}

template <class K>
Matrix<K> Matrix<K>::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
}

template <class K>
typename Matrix<K>::Vector Matrix<K>::apply(std::span<const value_type> x) const {
    if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vector y(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        value_type acc = field_.zero();
        for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

template <class K>
typename Matrix<K>::value_type Matrix<K>::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
    value_type t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
    return t;
}

template <class K>
bool Matrix<K>::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& v) { return field_.is_zero(v); });
}

template <class K>
bool Matrix<K>::is_scalar() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !field_.is_zero((*this)(i, j))) return false;
            if (i == j && !field_.equal((*this)(i, i), (*this)(0, 0))) return false;
        }
    }
    return true;
}

template <class K>
bool Matrix<K>::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!field_.equal(data_[k], rhs.data_[k])) return false;
    }
    return true;
}

template <class K>
std::vector<std::size_t> reduce_to_rref(Matrix<K>& m) {
    const K& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pr = lead_row;
        while (pr < m.rows() && f.is_zero(m(pr, col))) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(pr, lead_row);
        f.scale(m.row(lead_row), f.inv(m(lead_row, col)));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || f.is_zero(m(i, col))) continue;
            const auto c = f.neg(m(i, col));
            f.axpy(m.row(i), m.row(lead_row), c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    m.truncate_rows(lead_row);
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return reduce_to_rref(m).size();
}

template <class K>
Matrix<K> nullspace(const Matrix<K>& a) {
    Matrix<K> r = a;
    const auto pivots = reduce_to_rref(r);
    const K& f = a.field();
    Matrix<K> basis(f, 0, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        typename Matrix<K>::Vector v(a.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.append_row(v);
    }
    return basis;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    const K& f = a.field();
    Matrix<K> aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    const auto pivots = reduce_to_rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DimensionError("matrix is singular");
    Matrix<K> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
}

template <class K>
std::vector<typename K::value_type> characteristic_polynomial(const Matrix<K>& a) {
    using V = typename K::value_type;
    if (a.rows() != a.cols()) throw DimensionError("characteristic polynomial of non-square matrix");
    const K& f = a.field();
    const std::size_t n = a.rows();
    // Coefficients high to low; p_0 = 1.
    std::vector<V> p{f.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t m = k - 1;  // size of the leading block already processed
        std::vector<V> t(k + 1, f.zero());
        t[0] = f.one();
        t[1] = f.neg(a(m, m));
        // w = M^j C, starting from C; t[j+2] = -R w.
        std::vector<V> w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = a(i, m);
        for (std::size_t j = 2; j <= k; ++j) {
            V rw = f.zero();
            for (std::size_t i = 0; i < m; ++i) rw = f.add(rw, f.mul(a(m, i), w[i]));
            t[j] = f.neg(rw);
            std::vector<V> next(m, f.zero());
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t l = 0; l < m; ++l) next[i] = f.add(next[i], f.mul(a(i, l), w[l]));
            }
            w = std::move(next);
        }
        std::vector<V> q(k + 1, f.zero());
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; j < p.size() && j <= i; ++j) q[i] = f.add(q[i], f.mul(t[i - j], p[j]));
        }
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

template <class K>
Matrix<K> evaluate_polynomial(const std::vector<typename K::value_type>& coeffs, const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw DimensionError("polynomial of non-square matrix");
    const K& f = a.field();
    Matrix<K> acc(f, a.rows(), a.cols());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * a + Matrix<K>::identity(f, a.rows()).scaled(*it);
    }
    return acc;
}

#define PARASTAB_INSTANTIATE_MATRIX(K)                                                              \
    template class Matrix<K>;                                                                      \
    template std::vector<std::size_t> reduce_to_rref<K>(Matrix<K>&);                               \
    template std::size_t rank<K>(Matrix<K>);                                                       \
    template Matrix<K> nullspace<K>(const Matrix<K>&);                                             \
    template Matrix<K> inverse<K>(const Matrix<K>&);                                               \
    template std::vector<typename K::value_type> characteristic_polynomial<K>(const Matrix<K>&);   \
    template Matrix<K> evaluate_polynomial<K>(const std::vector<typename K::value_type>&, const Matrix<K>&);

PARASTAB_INSTANTIATE_MATRIX(Rationals)
PARASTAB_INSTANTIATE_MATRIX(PrimeField)

}  // namespace parastab
