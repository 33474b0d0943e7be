#include "parastab/logops.hpp"

#include <algorithm>

#include "parastab/errors.hpp"

namespace parastab {

PolyFn::PolyFn(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyFn PolyFn::constant(const Rational& c) { return PolyFn({c}); }

PolyFn PolyFn::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return PolyFn(std::move(v));
}

void PolyFn::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyFn::operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PolyFn PolyFn::log_derivative() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = coeffs_[k] * static_cast<long>(k);
    return PolyFn(std::move(v));
}

PolyFn operator+(const PolyFn& a, const PolyFn& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return PolyFn(std::move(v));
}

PolyFn operator-(const PolyFn& a, const PolyFn& b) { return a + Rational(-1) * b; }

PolyFn operator*(const PolyFn& a, const PolyFn& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyFn(std::move(v));
}

PolyFn operator*(const Rational& c, const PolyFn& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return PolyFn(std::move(v));
}

std::string PolyFn::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += parastab::to_string(coeffs_[k]);
        if (k > 0) out += k == 1 ? "*z" : "*z^" + std::to_string(k);
    }
    return out;
}

namespace {

// Remainder of a by b (b nonzero).
PolyFn poly_rem(PolyFn a, const PolyFn& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational c = a.coeffs().back() / b.coeffs().back();
        a = a - PolyFn::monomial(c, static_cast<std::size_t>(a.degree() - b.degree())) * b;
    }
    return a;
}

}  // namespace

PolyFn poly_gcd(PolyFn a, PolyFn b) {
    while (!b.is_zero()) {
        PolyFn r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (1 / a.coeffs().back()) * a;
}

LogDiffOperator LogDiffOperator::first_order(PolyFn g, PolyFn t) { return {{std::move(g), std::move(t)}}; }

std::size_t LogDiffOperator::order() const {
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (!coeffs[k].is_zero()) return k;
    }
    return 0;
}

const PolyFn& LogDiffOperator::coeff(std::size_t k) const {
    static const PolyFn zero;
    return k < coeffs.size() ? coeffs[k] : zero;
}

PolyFn LogDiffOperator::principal_symbol() const { return coeff(order()); }

bool LogDiffOperator::operator==(const LogDiffOperator& o) const {
    const std::size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!(coeff(k) == o.coeff(k))) return false;
    }
    return true;
}

namespace {

// lambda-twisted D^i(h): h, lambda z h', lambda^2 z (z h')', ...
PolyFn twisted_power(const PolyFn& h, std::size_t i, const Rational& lambda) {
    PolyFn out = h;
    for (std::size_t k = 0; k < i; ++k) out = lambda * out.log_derivative();
    return out;
}

long binomial(std::size_t n, std::size_t k) {
    long b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<long>(n - k + i) / static_cast<long>(i);
    return b;
}

}  // namespace

LogDiffOperator compose(const LogDiffOperator& a, const LogDiffOperator& b, const Rational& lambda) {
    if (a.order() + b.order() > kMaxOperatorOrder) {
        throw PreconditionError("compositions are tracked up to order " + std::to_string(kMaxOperatorOrder));
    }
    LogDiffOperator out{std::vector<PolyFn>(kMaxOperatorOrder + 1)};
    // c D^k ∘ h D^l = c sum_i binom(k, i) D^i(h) D^{k-i+l}
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        for (std::size_t l = 0; l < b.coeffs.size(); ++l) {
            if (a.coeffs[k].is_zero() || b.coeffs[l].is_zero()) continue;
            for (std::size_t i = 0; i <= k; ++i) {
                out.coeffs[k - i + l] = out.coeffs[k - i + l] + Rational(binomial(k, i)) * a.coeffs[k] *
                                                                    twisted_power(b.coeffs[l], i, lambda);
            }
        }
    }
    out.coeffs.resize(out.order() + 1);
    return out;
}

LogDiffOperator left_product(const PolyFn& f, const LogDiffOperator& op) {
    LogDiffOperator out = op;
    for (auto& c : out.coeffs) c = f * c;
    return out;
}

LogDiffOperator right_product(const LogDiffOperator& op, const PolyFn& f, const Rational& lambda) {
    if (op.order() > 1) throw PreconditionError("the bimodule product is defined on operators of order <= 1");
    const PolyFn& g = op.coeff(0);
    const PolyFn& t = op.coeff(1);
    return LogDiffOperator::first_order(f * g + lambda * (t * f.log_derivative()), f * t);
}

PolySection PolySection::times(const PolyFn& f) const {
    PolySection out = *this;
    for (auto& e : out.entries) e = f * e;
    return out;
}

std::vector<Rational> PolySection::at_zero() const {
    std::vector<Rational> v;
    for (const auto& e : entries) v.push_back(e(0));
    return v;
}

namespace {

PolySection connection_step(const PolySection& s) {
    const std::size_t r = s.entries.size();
    if (s.residue.rows() != r || s.residue.cols() != r) throw DimensionError("residue does not match the section rank");
    PolySection out = s;
    for (std::size_t i = 0; i < r; ++i) {
        PolyFn acc = s.lambda * s.entries[i].log_derivative();
        for (std::size_t j = 0; j < r; ++j) acc = acc + s.residue(i, j) * s.entries[j];
        out.entries[i] = acc;
    }
    return out;
}

}  // namespace

PolySection apply_op(const LogDiffOperator& op, const PolySection& s) {
    PolySection out = s;
    for (auto& e : out.entries) e = PolyFn();
    PolySection power = s;
    for (std::size_t k = 0; k < op.coeffs.size(); ++k) {
        if (k > 0) power = connection_step(power);
        for (std::size_t i = 0; i < s.entries.size(); ++i) out.entries[i] = out.entries[i] + op.coeffs[k] * power.entries[i];
    }
    return out;
}

bool associativity_check(const LogDiffOperator& op, const PolyFn& f, PolySection s, const Rational& lambda) {
    s.lambda = lambda;
    return apply_op(right_product(op, f, lambda), s) == apply_op(op, s.times(f));
}

FiltrationReport filtration_check(const std::vector<LogDiffOperator>& ops, const Rational& lambda) {
    FiltrationReport report;
    std::vector<std::vector<PolyFn>> rows;
    for (const auto& a : ops) {
        for (const auto& b : ops) {
            if (a.order() > 1 || b.order() > 1) throw PreconditionError("filtration_check takes operators of order <= 1");
            const auto ab = compose(a, b, lambda);
            report.orders_ok = report.orders_ok && ab.order() <= a.order() + b.order();
            if (!a.principal_symbol().is_zero() && !b.principal_symbol().is_zero()) {
                report.symbols_multiply = report.symbols_multiply &&
                                          ab.coeff(a.order() + b.order()) == a.principal_symbol() * b.principal_symbol();
            }
            rows.push_back({ab.coeff(0), ab.coeff(1), ab.coeff(2)});
        }
    }
    // Over the PID Q[z], the rows span Q[z]^3 iff the 3x3 minors have gcd 1.
    PolyFn g;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            for (std::size_t k = j + 1; k < rows.size(); ++k) {
                const auto& a = rows[i];
                const auto& b = rows[j];
                const auto& c = rows[k];
                const PolyFn det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                                   a[2] * (b[0] * c[1] - b[1] * c[0]);
                g = poly_gcd(g, det);
            }
        }
    }
    report.minors_gcd = g;
    report.surjective = g.degree() == 0;
    return report;
}

std::vector<Rational> total_residue(const LogDiffOperator& op, const Matrix<Rationals>& a,
                                    const std::vector<Rational>& v) {
    if (op.order() > 1) throw PreconditionError("the total residue is defined on operators of order <= 1");
    const Rational f = op.coeff(0)(0);
    const Rational t = op.coeff(1)(0);
    auto out = a.apply(v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f * v[i] + t * out[i];
    return out;
}

}  // namespace parastab
