#pragma once

// One chart of the logarithmic differential operators: polynomials in z with
// the puncture at z = 0, operators sum_k c_k(z) D^k with D = z d/dz, and their
// action on polynomial sections of a lambda-connection with residue A.

#include <string>
#include <vector>

#include "parastab/matrix.hpp"

namespace parastab {

/// Univariate polynomial over Q, coefficients low to high, no trailing zeros.
class PolyFn {
public:
    PolyFn() = default;
    explicit PolyFn(std::vector<Rational> coeffs);
    static PolyFn constant(const Rational& c);
    static PolyFn monomial(const Rational& c, std::size_t degree);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Rational operator()(const Rational& z) const;

    /// z f'(z), the action of D.
    PolyFn log_derivative() const;

    friend PolyFn operator+(const PolyFn& a, const PolyFn& b);
    friend PolyFn operator-(const PolyFn& a, const PolyFn& b);
    friend PolyFn operator*(const PolyFn& a, const PolyFn& b);
    friend PolyFn operator*(const Rational& c, const PolyFn& a);
    bool operator==(const PolyFn&) const = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyFn poly_gcd(PolyFn a, PolyFn b);

/// sum_k c_k D^k in normal form (coefficients on the left), order <= 2.
struct LogDiffOperator {
    std::vector<PolyFn> coeffs;

    static LogDiffOperator first_order(PolyFn g, PolyFn t);
    /// Highest k with c_k != 0; 0 for the zero operator.
    std::size_t order() const;
    const PolyFn& coeff(std::size_t k) const;
    /// Coefficient of D^order.
    PolyFn principal_symbol() const;
    bool operator==(const LogDiffOperator& o) const;
};

inline constexpr std::size_t kMaxOperatorOrder = 2;

/// a ∘ b in the lambda-deformed algebra, where D ∘ h = h D + lambda z h'.
/// Throws PreconditionError past order 2.
LogDiffOperator compose(const LogDiffOperator& a, const LogDiffOperator& b, const Rational& lambda);

/// f (g, t) = (f g, f t).
LogDiffOperator left_product(const PolyFn& f, const LogDiffOperator& op);

/// (g, t) f = (f g + lambda t z f', f t) for order <= 1.
LogDiffOperator right_product(const LogDiffOperator& op, const PolyFn& f, const Rational& lambda);

struct PolySection {
    std::vector<PolyFn> entries;  // length r
    Matrix<Rationals> residue;    // r x r
    Rational lambda;

    PolySection times(const PolyFn& f) const;
    std::vector<Rational> at_zero() const;
    bool operator==(const PolySection& o) const { return entries == o.entries; }
};

/// D acts as A s + lambda z s'; an operator acts as sum_k c_k D^k.
PolySection apply_op(const LogDiffOperator& op, const PolySection& s);

/// right_product(op, f, lambda) applied to s equals op applied to f s, with the
/// section's parameter set to lambda.
bool associativity_check(const LogDiffOperator& op, const PolyFn& f, PolySection s, const Rational& lambda);

struct FiltrationReport {
    bool orders_ok = true;      // every pairwise composition has order <= ord a + ord b
    bool symbols_multiply = true;  // top symbol of a∘b is the product when orders add up
    bool surjective = false;    // compositions generate O ⊕ O D ⊕ O D^2 as a left O-module
    PolyFn minors_gcd;          // gcd of the 3x3 minors of the composition coefficients
};

/// Pairwise compositions of the given operators (order <= 1 each).
FiltrationReport filtration_check(const std::vector<LogDiffOperator>& ops, const Rational& lambda);

/// (g, t) ⊗ v -> g(0) v + t(0) A v.
std::vector<Rational> total_residue(const LogDiffOperator& op, const Matrix<Rationals>& a,
                                    const std::vector<Rational>& v);

}  // namespace parastab
