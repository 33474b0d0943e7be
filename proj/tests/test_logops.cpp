#include "doctest.h"
#include "support.hpp"

#include "parastab/errors.hpp"
#include "parastab/logops.hpp"

using namespace parastab;
using namespace parastab::testing;

namespace {

PolyFn poly(std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return PolyFn(std::move(v));
}

const PolyFn kZ = poly({0, 1});
const PolyFn kOne = poly({1});

PolyFn random_poly(Rng& rng, std::size_t max_degree = 5) {
    std::vector<Rational> v(std::uniform_int_distribution<std::size_t>(0, max_degree + 1)(rng));
    for (auto& c : v) c = random_small_rational(rng, 4, 3);
    return PolyFn(std::move(v));
}

PolySection section(std::vector<PolyFn> entries, Matrix<Rationals> a, Rational lambda = 1) {
    return {std::move(entries), std::move(a), std::move(lambda)};
}

PolySection random_section(Rng& rng, std::size_t r, const Rational& lambda) {
    std::vector<PolyFn> e;
    for (std::size_t i = 0; i < r; ++i) e.push_back(random_poly(rng));
    return section(std::move(e), random_matrix(Rationals{}, r, r, rng), lambda);
}

LogDiffOperator random_op(Rng& rng) { return LogDiffOperator::first_order(random_poly(rng), random_poly(rng)); }

}  // namespace

TEST_CASE("polynomials") {
    const auto f = poly({1, 2, 3});
    CHECK(f.degree() == 2);
    CHECK(f(2) == 17);
    CHECK(f.log_derivative() == poly({0, 2, 6}));
    CHECK(f * kZ == poly({0, 1, 2, 3}));
    CHECK((f - f).is_zero());
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK(poly_gcd(poly({2}), poly({0, 1})) == kOne);
    CHECK(f.to_string() == "1 + 2*z + 3*z^2");
}

TEST_CASE("apply_op") {
    const auto a = qmat({{0, 1}, {0, 0}});
    const auto s = section({poly({1, 1}), poly({0, 0, 1})}, a);
    CHECK(apply_op(LogDiffOperator::first_order(kOne, {}), s) == s);
    const auto v = section({poly({2}), poly({3})}, a);
    CHECK(apply_op(LogDiffOperator::first_order({}, kOne), v).entries == std::vector<PolyFn>{poly({3}), PolyFn()});
    const auto zs = section({kZ}, qmat({{0}}));
    CHECK(apply_op(LogDiffOperator::first_order({}, kOne), zs).entries == std::vector<PolyFn>{kZ});
}

TEST_CASE("right_product") {
    const auto op = LogDiffOperator::first_order(poly({1, 2}), poly({0, 3}));
    CHECK(right_product(op, kOne, 1) == op);
    const auto f = poly({4, 0, 1});
    CHECK(right_product(op, f, 0) == left_product(f, op));
    CHECK(right_product(LogDiffOperator::first_order({}, kOne), kZ, 1) == LogDiffOperator::first_order(kZ, kZ));
    CHECK_THROWS_AS(right_product(compose(op, op, 1), f, 1), PreconditionError);
}

TEST_CASE("associativity_check examples") {
    const auto s = section({poly({1})}, qmat({{0}}));
    CHECK(associativity_check(LogDiffOperator::first_order({}, kOne), kZ, s, 1));
    Rng rng(2);
    for (int i = 0; i < 10; ++i) CHECK(associativity_check(random_op(rng), kOne, random_section(rng, 2, 1), 1));
}

TEST_CASE("bimodule associativity on random data") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational lambda = random_small_rational(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        CHECK(associativity_check(random_op(rng), random_poly(rng), random_section(rng, r, lambda), lambda));
    }
}

TEST_CASE("a mismatched lambda breaks associativity") {
    const auto op = LogDiffOperator::first_order({}, kOne);
    auto s = section({poly({1})}, qmat({{0}}), 1);
    // product at lambda = 0 is (0, z), which kills constants; op(z * 1) = z.
    CHECK(apply_op(right_product(op, kZ, 0), s) != apply_op(op, s.times(kZ)));
}

TEST_CASE("lambda = 0 collapses left and right products") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto op = random_op(rng);
        const auto f = random_poly(rng);
        CHECK(right_product(op, f, 0) == left_product(f, op));
    }
}

TEST_CASE("composition agrees with iterated action") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational lambda = random_small_rational(rng);
        const auto a = random_op(rng);
        const auto b = random_op(rng);
        const auto s = random_section(rng, 2, lambda);
        CHECK(apply_op(compose(a, b, lambda), s) == apply_op(a, apply_op(b, s)));
    }
}

TEST_CASE("filtration_check") {
    const auto d = LogDiffOperator::first_order({}, kOne);
    const auto dd = compose(d, d, 1);
    CHECK(dd.order() == 2);
    CHECK(dd.principal_symbol() == kOne);
    CHECK(dd.coeff(0).is_zero());
    CHECK(dd.coeff(1).is_zero());
    const auto zero_order = LogDiffOperator::first_order(kZ, {});
    CHECK(compose(zero_order, d, 1).order() <= 1);
    CHECK(compose(d, zero_order, 1).order() <= 1);
    CHECK_THROWS_AS(compose(dd, d, 1), PreconditionError);

    const auto rep = filtration_check({LogDiffOperator::first_order(kOne, {}), d}, 1);
    CHECK(rep.orders_ok);
    CHECK(rep.symbols_multiply);
    CHECK(rep.surjective);
    // Without the unit the products only reach the ideal generated by z-multiples.
    const auto partial = filtration_check({LogDiffOperator::first_order(kZ, {}), d}, 1);
    CHECK_FALSE(partial.surjective);
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = filtration_check({random_op(rng), random_op(rng), random_op(rng)}, random_small_rational(rng));
        CHECK(r.orders_ok);
        CHECK(r.symbols_multiply);
    }
}

TEST_CASE("total_residue") {
    const auto a = qmat({{0, 1}, {0, 0}});
    const std::vector<Rational> e2{0, 1};
    CHECK(total_residue(LogDiffOperator::first_order(kOne, {}), a, e2) == e2);
    CHECK(total_residue(LogDiffOperator::first_order({}, kOne), a, e2) == std::vector<Rational>{1, 0});
    const auto s = section({kZ, PolyFn()}, a);
    CHECK(apply_op(LogDiffOperator::first_order({}, kOne), s).at_zero() == std::vector<Rational>{0, 0});
}

TEST_CASE("total residue only sees values at the puncture") {
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const auto a = random_matrix(Rationals{}, r, r, rng);
        const auto op = random_op(rng);
        const auto moved = LogDiffOperator::first_order(op.coeff(0) + kZ * random_poly(rng),
                                                        op.coeff(1) + kZ * random_poly(rng));
        std::vector<Rational> v(r);
        for (auto& x : v) x = random_small_rational(rng);
        CHECK(total_residue(op, a, v) == total_residue(moved, a, v));
        // Sections vanishing at 0 stay in E(-x).
        auto s = random_section(rng, r, 1).times(kZ);
        s.residue = a;
        for (const auto& c : apply_op(op, s).at_zero()) CHECK(c == 0);
    }
}
