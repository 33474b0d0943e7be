#include "doctest.h"
#include "support.hpp"

#include <set>

#include "parastab/errors.hpp"

using namespace parastab;
using namespace parastab::testing;

namespace {

// Independent count: row-reduce every d x n matrix over F_q and collect the
// distinct rank-d echelon forms.
std::size_t brute_force_subspace_count(unsigned p, std::size_t n, std::size_t d) {
    PrimeField f(p);
    std::set<std::vector<unsigned>> forms;
    const std::size_t entries = n * d;
    std::vector<unsigned> digits(entries, 0);
    while (true) {
        Matrix<PrimeField> m(f, d, n);
        for (std::size_t k = 0; k < entries; ++k) m(k / n, k % n) = static_cast<PrimeField::value_type>(digits[k]);
        reduce_to_rref(m);
        if (m.rows() == d) {
            std::vector<unsigned> key;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < n; ++j) key.push_back(m(i, j));
            forms.insert(key);
        }
        std::size_t k = 0;
        while (k < entries && ++digits[k] == p) digits[k++] = 0;
        if (k == entries) break;
    }
    return d == 0 ? 1 : forms.size();
}

// Gaussian binomial via the product formula prod (q^{n-i} - 1)/(q^{i+1} - 1).
std::uint64_t gaussian_product(unsigned q, std::size_t n, std::size_t d) {
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
        mpz_class a, b;
        mpz_ui_pow_ui(a.get_mpz_t(), q, n - i);
        mpz_ui_pow_ui(b.get_mpz_t(), q, i + 1);
        num *= a - 1;
        den *= b - 1;
    }
    return mpz_class(num / den).get_ui();
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("-2")) == "-2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("0.5"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("prime field construction and arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), ValidationError);
    CHECK_THROWS_AS(PrimeField(37), ValidationError);
    PrimeField f(7);
    for (unsigned a = 1; a < 7; ++a) CHECK(f.mul(static_cast<std::uint16_t>(a), f.inv(static_cast<std::uint16_t>(a))) == 1);
    CHECK(f.from_rational(parse_rational("1/2")) == 4);
    CHECK(f.from_rational(parse_rational("-3")) == 4);
    CHECK_THROWS_AS(f.from_rational(parse_rational("1/7")), ValidationError);
}

TEST_CASE("intersect") {
    SUBCASE("idempotence") {
        auto u = qspan(3, {{1, 2, 3}, {0, 1, 1}});
        CHECK(intersect(u, u) == u);
    }
    SUBCASE("transverse lines over F_2") {
        PrimeField f(2);
        auto r = intersect(fspan(f, 2, {{1, 0}}), fspan(f, 2, {{0, 1}}));
        CHECK(r.is_zero());
    }
    SUBCASE("span(e1,e2) with span(e2,e3) in Q^3") {
        auto r = intersect(qspan(3, {{1, 0, 0}, {0, 1, 0}}), qspan(3, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(r == qspan(3, {{0, 1, 0}}));
    }
    SUBCASE("ambient mismatch") {
        CHECK_THROWS_AS(intersect(qspan(2, {{1, 0}}), qspan(3, {{1, 0, 0}})), DimensionError);
    }
}

TEST_CASE("image") {
    SUBCASE("identity") {
        auto w = qspan(3, {{1, 1, 0}});
        CHECK(image(Matrix<Rationals>::identity(Rationals{}, 3), w) == w);
    }
    SUBCASE("nilpotent") {
        auto full = Subspace<Rationals>::full(Rationals{}, 2);
        CHECK(image(qmat({{0, 1}, {0, 0}}), full) == qspan(2, {{1, 0}}));
    }
    SUBCASE("rank-one map on a plane") {
        auto a = qmat({{1, 2, 0}, {2, 4, 0}, {0, 0, 0}});
        auto w = qspan(3, {{1, 0, 0}, {0, 1, 0}});
        CHECK(image(a, w).dim() == 1);
        CHECK(image(a, w) == qspan(3, {{1, 2, 0}}));
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(image(qmat({{1, 0}}), qspan(3, {{1, 0, 0}})), DimensionError);
    }
}

TEST_CASE("enumerate_subspaces matches brute force and the product formula") {
    Budget budget;
    CHECK(enumerate_subspaces(PrimeField(2), 2, 1, budget).size() == 3);
    CHECK(enumerate_subspaces(PrimeField(2), 4, 2, budget).size() == 35);
    for (unsigned p : {2u, 3u}) {
        for (std::size_t n = 0; n <= 4; ++n) {
            for (std::size_t d = 0; d <= n; ++d) {
                Budget b;
                auto subs = enumerate_subspaces(PrimeField(p), n, d, b);
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(d);
                CHECK(subs.size() == gaussian_product(p, n, d));
                CHECK(gaussian_binomial(p, n, d) == gaussian_product(p, n, d));
                if (n <= 3 || p == 2) CHECK(subs.size() == brute_force_subspace_count(p, n, d));
                for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
                for (const auto& s : subs) CHECK(s.dim() == d);
            }
        }
    }
}

TEST_CASE("enumerate_subspaces edge cases") {
    Budget b;
    auto zero = enumerate_subspaces(PrimeField(5), 3, 0, b);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].is_zero());
    Budget tiny(10);
    CHECK_THROWS_AS(enumerate_subspaces(PrimeField(2), 4, 2, tiny), BudgetExceeded);
    CHECK(tiny.used() == 0);
    CHECK_THROWS_AS(enumerate_subspaces(PrimeField(2), 2, 3, b), DimensionError);
}

TEST_CASE("canonicity: different spanning sets give identical echelon bases") {
    Rng rng(11);
    PrimeField f(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t k = rng() % (n + 1);
        auto gens = random_matrix(f, k, n, rng);
        auto mix = random_invertible(f, k == 0 ? 1 : k, rng);
        auto u = Subspace<PrimeField>::span(gens);
        auto v = k == 0 ? u : Subspace<PrimeField>::span(mix * gens);
        CHECK(u == v);
    }
    Rationals q;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const std::size_t k = 1 + rng() % n;
        auto gens = random_matrix(q, k, n, rng);
        auto mix = random_invertible(q, k, rng);
        CHECK(Subspace<Rationals>::span(gens) == Subspace<Rationals>::span(mix * gens));
    }
}

TEST_CASE("modular law dim(U+W) + dim(U∩W) = dim U + dim W") {
    Rng rng(7);
    PrimeField f(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        auto u = Subspace<PrimeField>::span(random_matrix(f, rng() % (n + 1), n, rng));
        auto w = Subspace<PrimeField>::span(random_matrix(f, rng() % (n + 1), n, rng));
        auto cap = intersect(u, w);
        CHECK(sum(u, w).dim() + cap.dim() == u.dim() + w.dim());
        CHECK(u.contains(cap));
        CHECK(w.contains(cap));
    }
    Rationals q;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        auto u = Subspace<Rationals>::span(random_matrix(q, rng() % (n + 1), n, rng));
        auto w = Subspace<Rationals>::span(random_matrix(q, rng() % (n + 1), n, rng));
        CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
    }
}

TEST_CASE("kernel, annihilator and inverse") {
    auto a = qmat({{1, 2, 3}, {2, 4, 6}});
    auto k = kernel(a);
    CHECK(k.dim() == 2);
    for (std::size_t i = 0; i < k.dim(); ++i) {
        auto y = a.apply(k.basis().row(i));
        CHECK(y[0] == 0);
        CHECK(y[1] == 0);
    }
    auto w = qspan(3, {{1, 1, 0}});
    CHECK(annihilator(annihilator(w)) == w);
    auto m = qmat({{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == Matrix<Rationals>::identity(Rationals{}, 2));
    CHECK_THROWS_AS(inverse(qmat({{1, 2}, {2, 4}})), DimensionError);
}

TEST_CASE("coordinates in the echelon basis") {
    auto w = qspan(3, {{1, 0, 2}, {0, 1, -1}});
    Matrix<Rationals>::Vector v{Rational(3), Rational(-2), Rational(8)};
    auto c = w.coordinates(v);
    CHECK(c[0] == 3);
    CHECK(c[1] == -2);
    CHECK_THROWS_AS(w.coordinates(Matrix<Rationals>::Vector{Rational(1), Rational(0), Rational(0)}), DimensionError);
}

TEST_CASE("characteristic polynomial agrees with det(cI - A) by cofactor expansion") {
    auto det = [](const Matrix<Rationals>& m) {
        // Permutation expansion; fine for n <= 4.
        const std::size_t n = m.rows();
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        Rational total = 0;
        do {
            Rational term = 1;
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i) {
                term *= m(i, perm[i]);
                for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
            }
            total += (inversions % 2 ? -term : term);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    };
    Rng rng(3);
    Rationals q;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        auto a = random_matrix(q, n, n, rng);
        auto cp = characteristic_polynomial(a);
        REQUIRE(cp.size() == n + 1);
        CHECK(cp[n] == 1);
        for (long c = -2; c <= 2; ++c) {
            auto shifted = Matrix<Rationals>::identity(q, n).scaled(Rational(c)) - a;
            Rational value = 0;
            for (std::size_t k = n + 1; k-- > 0;) value = value * c + cp[k];
            CHECK(value == det(shifted));
        }
        // Cayley-Hamilton.
        CHECK(evaluate_polynomial(cp, a).is_zero());
    }
    PrimeField f(2);
    auto cp2 = characteristic_polynomial(fmat(f, {{0, 1}, {1, 0}}));
    CHECK(cp2 == std::vector<std::uint16_t>{1, 0, 1});
}
