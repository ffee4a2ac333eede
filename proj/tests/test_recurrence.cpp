#include <doctest.h>

#include <cmath>

#include "amplikit/recurrence.hpp"
#include "test_support.hpp"

using namespace amplikit;
using amplikit_test::ConfigSampler;
using amplikit_test::close;

namespace {

IterationMatrix sample_matrix(std::uint64_t seed) {
    ConfigSampler sampler(seed);
    return build_iteration_matrix(sampler.next());
}

}  // namespace

TEST_CASE("coupled recurrence first steps") {
    const IterationMatrix m = sample_matrix(1u);
    const AmplitudePair k0 = iterate_pair(m, 0);
    CHECK(k0.a == Complex{1.0, 0.0});
    CHECK(k0.b == Complex{0.0, 0.0});

    const AmplitudePair k1 = iterate_pair(m, 1);
    CHECK(close(k1.a, m.alpha, 1e-15));
    CHECK(close(k1.b, m.beta, 1e-15));

    const AmplitudePair k2 = iterate_pair(m, 2);
    CHECK(close(k2.a, m.alpha * m.alpha + m.beta * m.lambda, 1e-14));
    CHECK(close(k2.b, m.beta * (m.alpha + m.delta), 1e-14));

    CHECK_THROWS_AS(iterate_pair(m, -1), IndexOutOfRange);
}

TEST_CASE("four-item search reaches the target in one step") {
    const IterationMatrix m =
        build_iteration_matrix(make_config(0.0, 0.0, Complex{0.5, 0.0}));
    const AmplitudePair k1 = iterate_pair(m, 1);
    CHECK(std::abs(std::abs(k1.b) - 1.0) <= 1e-14);
}

TEST_CASE("state normalization holds along the whole trajectory") {
    ConfigSampler sampler(77u);
    for (int trial = 0; trial < 4; ++trial) {
        const PhaseConfig cfg = sampler.next();
        const IterationMatrix m = build_iteration_matrix(cfg);
        Complex a{1.0, 0.0};
        Complex b{0.0, 0.0};
        for (int k = 1; k <= 10000; ++k) {
            const Complex na = m.alpha * a + m.lambda * b;
            const Complex nb = m.beta * a + m.delta * b;
            a = na;
            b = nb;
            const double norm_id =
                std::norm(a) + std::norm(b) +
                2.0 * std::real(std::conj(a) * b * std::conj(cfg.u_tau_gamma));
            REQUIRE(std::abs(norm_id - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("three-term recurrence seeds and long-range agreement") {
    const IterationMatrix m = sample_matrix(2u);
    CHECK(close(iterate_b(m, 1), m.beta, 1e-15));
    CHECK(close(iterate_b(m, 2), m.beta * (m.alpha + m.delta), 1e-14));
    CHECK_THROWS_AS(iterate_b(m, 0), IndexOutOfRange);

    ConfigSampler sampler(5u);
    for (int trial = 0; trial < 20; ++trial) {
        const IterationMatrix r = build_iteration_matrix(sampler.next());
        CHECK(close(iterate_b(r, 500), iterate_pair(r, 500).b, 1e-11));
        for (int k = 1; k <= 100; ++k) {
            REQUIRE(close(iterate_b(r, k), iterate_pair(r, k).b, 1e-12));
        }
    }
}

TEST_CASE("binomial weights are exact integers with the stated edge values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == 137846528820);
    CHECK_THROWS_AS(binomial(-1, 0), IndexOutOfRange);

    // l^{(0)} is identically one on its range
    for (int k = 1; k <= 40; k += 3) {
        for (int i = 0; i <= k - 1; i += 2) {
            CHECK(binomial_weight_l(k, i, 0) == 1);
        }
    }
    CHECK(binomial_weight_l(3, 0, 1) == 1);

    // t at i = 0 matches the next step's leading l-weight
    for (int k = 2; k <= 40; k += 5) {
        for (int j = 1; j <= k / 2; ++j) {
            CHECK(binomial_weight_t(k, 0, j) == binomial_weight_l(k + 1, 0, j));
        }
    }

    // one concrete interior point of the shift identity: 2 + 4 = 6
    CHECK(binomial_weight_t(5, 2, 1) == 2);
    CHECK(binomial_weight_l(5, 1, 1) == 4);
    CHECK(binomial_weight_t(5, 2, 1) + binomial_weight_l(5, 1, 1) ==
          binomial_weight_l(6, 2, 1));

    CHECK_THROWS_AS(binomial_weight_l(3, 3, 1), IndexOutOfRange);
    CHECK_THROWS_AS(binomial_weight_t(4, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(binomial_weight_t(4, 5, 1), IndexOutOfRange);
}

TEST_CASE("coefficient list lengths follow the floor formulas") {
    for (int k = 1; k <= 12; ++k) {
        const PolyCoefficients pc =
            compute_poly_coefficients(Complex{0.3, 0.4}, Complex{0.1, -0.9}, k);
        CHECK(static_cast<int>(pc.c.size()) == (k - 1) / 2 + 1);
        CHECK(static_cast<int>(pc.d.size()) == k / 2 + 1);
    }
}

TEST_CASE("polynomial form at small k matches hand expansion") {
    const IterationMatrix m = sample_matrix(9u);
    CHECK(close(polynomial_b(m, 1), m.beta, 1e-14));

    // b_3 = beta (alpha^2 + alpha delta + delta^2 + beta lambda), which is
    // also (alpha+delta) r_2 + (beta lambda - alpha delta) r_1 times beta.
    const Complex expansion =
        m.beta * (m.alpha * m.alpha + m.alpha * m.delta + m.delta * m.delta +
                  m.beta * m.lambda);
    CHECK(close(polynomial_b(m, 3), expansion, 1e-13));
    const Complex via_recurrence =
        m.beta * ((m.alpha + m.delta) * (m.alpha + m.delta) +
                  (m.beta * m.lambda - m.alpha * m.delta));
    CHECK(close(polynomial_b(m, 3), via_recurrence, 1e-13));
}

TEST_CASE("polynomial form tracks the recurrence across its whole range") {
    ConfigSampler sampler(13u);
    for (int trial = 0; trial < 10; ++trial) {
        const IterationMatrix m = build_iteration_matrix(sampler.next());
        for (int k = 1; k <= kMaxPolynomialStep; ++k) {
            REQUIRE(close(polynomial_b(m, k), iterate_b(m, k), 1e-10));
        }
    }
}

TEST_CASE("polynomial form refuses steps beyond its exact-weight range") {
    const IterationMatrix m = sample_matrix(21u);
    CHECK_THROWS_AS(polynomial_b(m, 41), StepTooLarge);
    CHECK_THROWS_AS(polynomial_b(m, 0), IndexOutOfRange);
}

TEST_CASE("coefficient induction identities") {
    CHECK(coefficient_induction_check(3));
    CHECK(coefficient_induction_check(10));
    for (int k = 2; k <= kMaxPolynomialStep; ++k) {
        REQUIRE(coefficient_induction_check(k));
    }
    CHECK_THROWS_AS(coefficient_induction_check(1), IndexOutOfRange);
    CHECK_THROWS_AS(coefficient_induction_check(41), IndexOutOfRange);
}

TEST_CASE("leading coefficient is the geometric sum in alpha and delta") {
    const Complex alpha = std::polar(1.0, 0.7);
    const Complex delta = std::polar(1.0, -1.3);
    for (int k = 1; k <= 20; ++k) {
        const PolyCoefficients pc = compute_poly_coefficients(alpha, delta, k);
        Complex geometric{0.0, 0.0};
        for (int n = 0; n < k; ++n) {
            geometric += std::pow(alpha, n) * std::pow(delta, k - 1 - n);
        }
        CHECK(close(pc.c[0], geometric, 1e-12));
    }
}
