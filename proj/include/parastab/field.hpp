#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parastab/rational.hpp"

namespace parastab {

/// The field of rational numbers with GMP-backed exact elements.
class Rationals {
public:
    using value_type = Rational;
    static constexpr bool is_prime_field = false;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long v) const { return Rational(v); }
    value_type from_rational(const Rational& q) const { return q; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    /// Total order used for lexicographic comparison of echelon forms.
    int compare(const value_type& a, const value_type& b) const { return cmp(a, b); }

    void axpy(std::span<value_type> dst, std::span<const value_type> src, const value_type& c) const;
    void scale(std::span<value_type> row, const value_type& c) const;

    std::string format(const value_type& a) const { return to_string(a); }
    value_type parse(std::string_view text) const { return parse_rational(text); }
    std::string name() const { return "q"; }

    bool operator==(const Rationals&) const = default;
};

/// Z/pZ for a prime p <= 31; elements are canonical residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint16_t;
    static constexpr bool is_prime_field = true;
    static constexpr unsigned kMaxPrime = 31;

    /// Throws ValidationError unless p is a prime <= kMaxPrime.
    explicit PrimeField(unsigned p);

    unsigned characteristic() const noexcept { return p_; }
    unsigned size() const noexcept { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const;
    /// Throws ValidationError when the denominator vanishes mod p.
    value_type from_rational(const Rational& q) const;

    value_type add(value_type a, value_type b) const { return static_cast<value_type>((a + b) % p_); }
    value_type sub(value_type a, value_type b) const {
        return static_cast<value_type>((a + p_ - b) % p_);
    }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<unsigned>(a) * b) % p_);
    }
    value_type neg(value_type a) const { return static_cast<value_type>((p_ - a) % p_); }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool equal(value_type a, value_type b) const { return a == b; }
    int compare(value_type a, value_type b) const { return (a > b) - (a < b); }

    void axpy(std::span<value_type> dst, std::span<const value_type> src, value_type c) const;
    void scale(std::span<value_type> row, value_type c) const;

    std::string format(value_type a) const { return std::to_string(a); }
    value_type parse(std::string_view text) const { return from_rational(parse_rational(text)); }
    std::string name() const { return "p=" + std::to_string(p_); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint16_t p_;
    std::vector<value_type> inverses_;
};

bool is_prime(unsigned n) noexcept;

}  // namespace parastab
