#include <doctest.h>

#include <cmath>

#include "amplikit/operator_builder.hpp"
#include "test_support.hpp"

using namespace amplikit;
using amplikit_test::ConfigSampler;
using amplikit_test::close;

TEST_CASE("matrix entries reduce to the inversion case at theta = phi = 0") {
    const IterationMatrix m =
        build_iteration_matrix(make_config(0.0, 0.0, Complex{0.1, 0.0}));
    CHECK(close(m.alpha, Complex{0.96, 0.0}, 1e-15));
    CHECK(close(m.beta, Complex{0.2, 0.0}, 1e-15));
    CHECK(close(m.lambda, Complex{-0.2, 0.0}, 1e-15));
    CHECK(close(m.delta, Complex{1.0, 0.0}, 1e-15));
}

TEST_CASE("theta = pi/2 kills every theta-coupled term") {
    const IterationMatrix m = build_iteration_matrix(
        make_config(kPi / 2.0, kPi / 4.0, Complex{0.1, 0.0}));
    CHECK(close(m.alpha, Complex{-1.0, 0.0}, 1e-15));
    CHECK(close(m.lambda, Complex{0.0, 0.0}, 1e-15));
    CHECK(close(m.delta, Complex{0.0, 1.0}, 1e-15));
    CHECK(close(m.beta, Complex{0.1, 0.1}, 1e-15));
}

TEST_CASE("determinant is the pure phase e^{i2(theta+phi)}") {
    const IterationMatrix m = build_iteration_matrix(
        make_config(kPi / 6.0, kPi / 3.0, Complex{0.37, 0.0}));
    CHECK(close(m.determinant(), Complex{-1.0, 0.0}, 1e-14));

    ConfigSampler sampler(17u);
    for (int i = 0; i < 500; ++i) {
        const PhaseConfig cfg = sampler.next();
        const IterationMatrix r = build_iteration_matrix(cfg);
        const Complex expect = std::polar(1.0, 2.0 * (cfg.theta + cfg.phi));
        CHECK(close(r.determinant(), expect, 1e-12));
        CHECK(std::abs(std::abs(r.determinant()) - 1.0) <= 1e-12);
    }
}

TEST_CASE("exponential and trigonometric entry forms agree") {
    ConfigSampler sampler(23u);
    for (int i = 0; i < 500; ++i) {
        const PhaseConfig cfg = sampler.next();
        const IterationMatrix a = build_iteration_matrix(cfg);
        const IterationMatrix b = build_iteration_matrix_trig(cfg);
        CHECK(close(a.alpha, b.alpha, 1e-14));
        CHECK(close(a.beta, b.beta, 1e-14));
        CHECK(close(a.lambda, b.lambda, 1e-14));
        CHECK(close(a.delta, b.delta, 1e-14));
    }
}

TEST_CASE("trace closed form") {
    CHECK(close(trace_closed_form(make_config(0.0, 0.0, Complex{0.1, 0.0})),
                Complex{1.96, 0.0}, 1e-14));
    CHECK(close(trace_closed_form(
                    make_config(kPi / 2.0, kPi / 2.0, Complex{0.3, 0.0})),
                Complex{-2.0, 0.0}, 1e-12));

    ConfigSampler sampler(29u);
    for (int i = 0; i < 10000; ++i) {
        const PhaseConfig cfg = sampler.next();
        const IterationMatrix m = build_iteration_matrix(cfg);
        CHECK(close(trace_closed_form(cfg), m.trace(), 1e-12));
    }
}

TEST_CASE("trace magnitude bound, equality exactly on the double-axis case") {
    CHECK(trace_magnitude_bound_check(
        make_config(kPi / 2.0, kPi / 2.0, Complex{0.5, 0.0})));
    CHECK(trace_magnitude_bound_check(make_config(0.0, 0.0, Complex{0.1, 0.0})));

    // strict inequality away from cos(theta)cos(phi) = 0
    for (int it = 0; it < 50; ++it) {
        for (int jf = 0; jf < 50; ++jf) {
            const double theta = it * kPi / 50.0;
            const double phi = jf * kPi / 50.0;
            const double cc = std::cos(theta) * std::cos(phi);
            if (std::abs(cc) < 1e-9) continue;
            for (double p : {0.05, 0.35, 0.65, 0.95}) {
                const double value =
                    std::abs(std::cos(theta - phi) - 2.0 * p * p * cc);
                CHECK(value < 1.0);
                CHECK(trace_magnitude_bound_check(
                    make_config(theta, phi, Complex{p, 0.0})));
            }
        }
    }
}

TEST_CASE("|beta| is 2p|cos phi| and vanishes only with cos phi") {
    ConfigSampler sampler(31u);
    for (int i = 0; i < 500; ++i) {
        const PhaseConfig cfg = sampler.next();
        const IterationMatrix m = build_iteration_matrix(cfg);
        CHECK(std::abs(std::abs(m.beta) -
                       2.0 * cfg.p * std::abs(std::cos(cfg.phi))) <= 1e-13);
        CHECK(std::abs(m.trace()) <= 2.0 + 1e-12);
    }
    const IterationMatrix degenerate =
        build_iteration_matrix(make_config(0.4, kPi / 2.0, Complex{0.5, 0.0}));
    CHECK(std::abs(degenerate.beta) <= 1e-12);
}
