#pragma once

// Arithmetic criterion for a universal family: gcd({d, r} ∪ {m_{x,i}}) = 1, with
// a Bezout certificate written in terms of chi(kappa, h). With at least one
// puncture r is redundant, since the jumps there sum to r.

#include <vector>

#include "parastab/errors.hpp"

namespace parastab {

struct FineInput {
    long d = 0;
    long r = 1;
    long g = 0;
    std::vector<std::vector<long>> jumps;  // m_{x,i}, each puncture summing to r
};

/// Throws ValidationError with a pointer into the input document.
void validate(const FineInput& in);

/// kappa(x) in 1..l_x+1 for every puncture.
using Kappa = std::vector<std::size_t>;

/// d + r(1 - g - h) - sum_x sum_{i < kappa(x)} m_{x,i}. Throws ValidationError
/// when kappa is out of range.
long chi(const FineInput& in, const Kappa& kappa, long h);

long fine_gcd(const FineInput& in);
bool is_fine(const FineInput& in);

struct ChiTerm {
    long a = 0;
    Kappa kappa;
    long h = 0;

    bool operator==(const ChiTerm&) const = default;
};

struct ChiCertificate {
    std::vector<ChiTerm> terms;
    long value = 0;  // sum a chi(kappa, h), recomputed
};

long evaluate(const FineInput& in, const std::vector<ChiTerm>& terms);

/// Raised by bezout_certificate on inputs whose gcd is not 1.
class NotFineError : public PreconditionError {
public:
    explicit NotFineError(long gcd);
    long gcd() const noexcept { return gcd_; }

private:
    long gcd_;
};

/// A certificate of value 1: a single chi(1, h) when r divides d + r(1-g) - 1,
/// otherwise extended Euclid over d, the jumps (and r when there are no punctures), each generator expanded into
/// chi differences (r = chi(1,-1) - chi(1,0), m_{x,i} = chi(kappa) - chi(kappa+),
/// d = chi(1,0) - (1-g) r).
ChiCertificate bezout_certificate(const FineInput& in);

}  // namespace parastab
