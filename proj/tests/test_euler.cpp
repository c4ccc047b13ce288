#include <doctest.h>

#include <complex>
#include <random>

#include "mconv/star.hpp"
#include "mconv/stirling.hpp"
#include "test_helpers.hpp"

using namespace mconv;
using namespace mconv::testing;

TEST_CASE("stirling numbers, frozen rows") {
    // Second kind, n = 5: 0 1 15 25 10 1.
    const long s2_row5[] = {0, 1, 15, 25, 10, 1};
    for (unsigned k = 0; k <= 5; ++k) CHECK(stirling2(5, k) == Rational(s2_row5[k]));
    // Signed first kind, n = 5: 0 24 -50 35 -10 1.
    const long s1_row5[] = {0, 24, -50, 35, -10, 1};
    for (unsigned k = 0; k <= 5; ++k) CHECK(stirling1_signed(5, k) == Rational(s1_row5[k]));
    CHECK(stirling2(0, 0) == Rational(1));
    CHECK(stirling2(4, 7) == Rational(0));
    CHECK(stirling1_signed(6, 3) == Rational(-225));

    // Defining identity: x^n = sum_k S2(n,k) x(x-1)...(x-k+1) at x = 7, n = 6.
    Rational sum(0);
    for (unsigned k = 0; k <= 6; ++k) sum += stirling2(6, k) * falling_factorial(7, k);
    CHECK(sum == Rational(7).pow(6));

    // And the inverse: ff(x, m) = sum_n s1(m,n) x^n at x = 5, m = 4.
    Rational sum2(0);
    for (unsigned n = 0; n <= 4; ++n) sum2 += stirling1_signed(4, n) * Rational(5).pow(n);
    CHECK(sum2 == falling_factorial(5, 4));

    CHECK(stirling2(kStirlingTableSize, 1) == Rational(1)); // last table row is usable
    CHECK_THROWS_AS(stirling2(kStirlingTableSize + 1, 1), ValidationError);
}

TEST_CASE("theta powers in x-d form") {
    // theta^2 = x d + x^2 d^2; theta^3 = x d + 3 x^2 d^2 + x^3 d^3.
    const auto P2 = EulerOperator::make(1, {{MultiIndex({2}), Rational(1)}});
    const auto xd2 = P2.to_xd_form();
    REQUIRE(xd2.size() == 2);
    CHECK(xd2.at(MultiIndex({1})) == Rational(1));
    CHECK(xd2.at(MultiIndex({2})) == Rational(1));

    const auto P3 = EulerOperator::make(1, {{MultiIndex({3}), Rational(1)}});
    const auto xd3 = P3.to_xd_form();
    REQUIRE(xd3.size() == 3);
    CHECK(xd3.at(MultiIndex({1})) == Rational(1));
    CHECK(xd3.at(MultiIndex({2})) == Rational(3));
    CHECK(xd3.at(MultiIndex({3})) == Rational(1));
}

TEST_CASE("operator algebra") {
    const auto t = EulerOperator::theta(1, 0);
    const auto one = EulerOperator::constant(1, Rational(1));
    // (theta + 1)(theta - 1) = theta^2 - 1.
    const auto prod = t.plus(one).times(t.plus(one.scaled(Rational(-1))));
    const auto want = EulerOperator::make(
        1, {{MultiIndex({2}), Rational(1)}, {MultiIndex({0}), Rational(-1)}});
    CHECK(prod == want);
    CHECK(t.plus(t.scaled(Rational(-1))).is_zero());
    CHECK(want.degree() == 2);
}

TEST_CASE("eigenvalue action on monomials: P(theta) x^gamma = P(gamma) x^gamma") {
    std::mt19937 rng(91);
    for (int i = 0; i < 25; ++i) {
        const std::size_t d = 1 + (i % 2);
        const auto P = rand_euler(rng, d, 4);
        const auto gamma = rand_multi_index(rng, d, 6);
        std::vector<Rational> g;
        for (std::size_t j = 0; j < d; ++j) g.push_back(Rational(long(gamma[j])));
        const auto mono = Polynomial::monomial(d, gamma);
        CHECK(P.apply(mono) == mono.scaled(P.symbol(g)));
    }
}

TEST_CASE("symbol: complex and rational routes agree") {
    std::mt19937 rng(92);
    const auto P = rand_euler(rng, 2, 3);
    const Rational z1 = Rational(3) / Rational(2), z2 = Rational(-5) / Rational(4);
    const Rational exact = P.symbol(std::vector<Rational>{z1, z2});
    const std::complex<double> approx =
        P.symbol(std::vector<std::complex<double>>{{1.5, 0.0}, {-1.25, 0.0}});
    CHECK(approx.real() == doctest::Approx(exact.to_double()).epsilon(1e-12));
    CHECK(approx.imag() == 0.0);
}

TEST_CASE("theta form <-> distribution form round trip") {
    std::mt19937 rng(93);
    for (int i = 0; i < 25; ++i) {
        const std::size_t d = 1 + (i % 2);
        const auto P = rand_euler(rng, d, 6);
        const auto T = P.to_distribution();
        // Support sits at (1, ..., 1).
        for (const auto& pt : T.support())
            for (const auto& c : pt) CHECK(c == Rational(1));
        CHECK(EulerOperator::from_distribution(T) == P);
    }
}

TEST_CASE("x-d form consistency through the distribution") {
    // b_beta x^beta d^beta corresponds to (-1)^|beta| M_{delta_1^(beta)}:
    // building the distribution from the x-d coefficients directly must match
    // to_distribution().
    std::mt19937 rng(94);
    for (int i = 0; i < 10; ++i) {
        const auto P = rand_euler(rng, 2, 5);
        const auto xd = P.to_xd_form();
        PointDistribution direct(2);
        const std::vector<Rational> ones = {Rational(1), Rational(1)};
        for (const auto& [beta, b] : xd) {
            const Rational sgn = beta.order() % 2 ? Rational(-1) : Rational(1);
            direct = direct.plus(PointDistribution::delta_derivative(ones, beta, sgn * b));
        }
        CHECK(direct == P.to_distribution());
    }
}

TEST_CASE("from_distribution validates the support") {
    const auto off = PointDistribution::delta({Rational(2)});
    CHECK_THROWS_AS(EulerOperator::from_distribution(off), ValidationError);
    CHECK(EulerOperator::from_distribution(PointDistribution(1)).is_zero());
}

TEST_CASE("multiplier identity: M_{delta_1^(alpha)} = (-1)^|alpha| x^alpha d^alpha") {
    const std::vector<Rational> ones = {Rational(1), Rational(1)};
    for (std::uint32_t a1 = 0; a1 <= 3; ++a1)
        for (std::uint32_t a2 = 0; a2 <= 2; ++a2) {
            const MultiIndex alpha({a1, a2});
            const auto T = PointDistribution::delta_derivative(ones, alpha);
            const Rational sgn = alpha.order() % 2 ? Rational(-1) : Rational(1);
            for_each_leq({4, 4}, [&](const MultiIndex& beta) {
                const auto mono = Polynomial::monomial(2, beta);
                // x^alpha d^alpha x^beta = ff(beta, alpha) x^beta.
                Rational ff(1);
                for (std::size_t j = 0; j < 2; ++j)
                    ff *= falling_factorial(long(beta[j]), alpha[j]);
                CHECK(hadamard_apply(T, mono) == mono.scaled(sgn * ff));
            });
        }
}

TEST_CASE("operator application: exact vs pointwise") {
    std::mt19937 rng(95);
    const auto P = rand_euler(rng, 1, 3);
    Polynomial p(1);
    for (int k = 0; k < 4; ++k) p.add_term(rand_multi_index(rng, 1, 5), rand_rational(rng));
    const auto exact = P.apply(p);
    const auto pj = jet_from_polynomial(p);
    for (double x : {0.5, 1.0, 2.0, -1.5}) {
        CHECK(P.apply_pointwise(pj, {x}) ==
              doctest::Approx(exact.evaluate(std::vector<double>{x})).epsilon(1e-12));
    }
}

TEST_CASE("transpose action pairs correctly") {
    // (P(theta)' T)(p) = T(P(theta) p), exactly.
    std::mt19937 rng(96);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + (i % 2);
        const auto P = rand_euler(rng, d, 3);
        const auto T = rand_distribution(rng, d, 3, 2, false);
        Polynomial p(d);
        for (int k = 0; k < 3; ++k) p.add_term(rand_multi_index(rng, d, 4), rand_rational(rng));
        CHECK(P.transpose_apply(T).apply(p) == T.apply(P.apply(p)));
    }
}

TEST_CASE("euler operator as star multiplier") {
    // P(theta) acting on polynomials equals star with its distribution,
    // through moments: star(T_P, x^alpha-dual) ... verified via the moment
    // homomorphism: moment(T_P, alpha) = P(alpha).
    std::mt19937 rng(97);
    for (int i = 0; i < 15; ++i) {
        const auto P = rand_euler(rng, 1, 5);
        const auto T = P.to_distribution();
        for (std::uint32_t a = 0; a <= 7; ++a) {
            CHECK(T.moment(MultiIndex({a})) == P.symbol(std::vector<Rational>{Rational(long(a))}));
        }
    }
}
