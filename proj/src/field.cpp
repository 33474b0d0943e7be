#include "parastab/field.hpp"

#include "parastab/errors.hpp"
#include "parastab/simd/fp_kernels.hpp"

namespace parastab {

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Rationals::value_type Rationals::inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    return 1 / a;
}

void Rationals::axpy(std::span<value_type> dst, std::span<const value_type> src,
                     const value_type& c) const {
    if (is_zero(c)) return;
    for (std::size_t k = 0; k < dst.size() && k < src.size(); ++k) {
        if (!is_zero(src[k])) dst[k] += c * src[k];
    }
}

void Rationals::scale(std::span<value_type> row, const value_type& c) const {
    for (auto& v : row) v *= c;
}

PrimeField::PrimeField(unsigned p) : p_(static_cast<std::uint16_t>(p)) {
    if (!is_prime(p) || p > kMaxPrime) {
        throw ValidationError("field characteristic must be a prime <= 31, got " + std::to_string(p));
    }
    inverses_.assign(p, 0);
    for (unsigned a = 1; a < p; ++a) {
        for (unsigned b = 1; b < p; ++b) {
            if ((a * b) % p == 1) {
                inverses_[a] = static_cast<value_type>(b);
                break;
            }
        }
    }
}

PrimeField::value_type PrimeField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
    const Integer p(p_);
    Integer num = q.get_num() % p;
    Integer den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) {
        throw ValidationError(to_string(q) + " has no image in F_" + std::to_string(p_));
    }
    return div(static_cast<value_type>(num.get_ui()), static_cast<value_type>(den.get_ui()));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inverses_[a];
}

void PrimeField::axpy(std::span<value_type> dst, std::span<const value_type> src, value_type c) const {
    if (c == 0) return;
    simd::axpy_mod(dst, src, c, p_);
}

void PrimeField::scale(std::span<value_type> row, value_type c) const { simd::scale_mod(row, c, p_); }

}  // namespace parastab
