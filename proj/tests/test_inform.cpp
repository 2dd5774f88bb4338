#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sstmmse/inform.hpp"
#include "sstmmse/numeric.hpp"

using namespace sstmmse;

TEST_CASE("mutual-information reference curves") {
    CHECK(inform::mi_bound_general(0.1) == doctest::Approx(0.9531).epsilon(5e-5));
    CHECK(inform::mi_bound_general(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(inform::mi_bound_general(1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(inform::mi_bound_general(0.0), std::invalid_argument);
    CHECK_THROWS_AS(inform::mi_bound_general(-1.0), std::invalid_argument);

    CHECK(inform::mi_derivative_bound(0.1) == doctest::Approx(0.9091).epsilon(5e-5));
    CHECK(inform::mi_derivative_bound(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(inform::mi_derivative_bound(0.0) == 1.0);

    for (double rho : {1e-4, 0.03, 0.7, 1.0, 12.0, 400.0})
        CHECK(inform::mi_derivative_bound(rho) < inform::mi_bound_general(rho));
}

TEST_CASE("piecewise tanh") {
    CHECK(inform::tanh_piecewise(0.0) == 0.0);
    CHECK(inform::tanh_piecewise(0.5) == 0.5);
    CHECK(inform::tanh_piecewise(1.0) == doctest::Approx(0.75));
    CHECK(inform::tanh_piecewise(1.5) == doctest::Approx(0.9));
    CHECK(inform::tanh_piecewise(3.0) == 1.0);
    CHECK(inform::tanh_piecewise(27.0) == 1.0);
    CHECK_THROWS_AS(inform::tanh_piecewise(-0.1), std::invalid_argument);
    // stays within 0.04 of the real tanh on the half line
    for (double y = 0.0; y <= 6.0; y += 0.01)
        CHECK(std::fabs(inform::tanh_piecewise(y) - std::tanh(y)) <= 0.04);
}

TEST_CASE("scalar binary-input mmse") {
    CHECK(inform::scalar_binary_mmse(0.0) == 1.0);
    CHECK(inform::scalar_binary_mmse(1.0) == doctest::Approx(0.4586).epsilon(0.025));
    CHECK_THROWS_AS(inform::scalar_binary_mmse(-0.5), std::invalid_argument);
    for (int k = -8; k <= 8; ++k) {
        const double rho = std::pow(10.0, k / 4.0);
        const double mmse = inform::scalar_binary_mmse(rho);
        CHECK(mmse >= 0.0);
        if (rho <= 16.0) CHECK(mmse > 1e-8);
        CHECK(mmse <= 1.0);
        CHECK(mmse <= inform::mi_derivative_bound(rho) + 1e-10);
        // self-convergence of the integrator against a doubled resolution
        const double sqrt_rho = std::sqrt(rho);
        const double doubled = 1.0 - numeric::simpson(
            [&](double y) { return numeric::norm_pdf(y) * std::tanh(rho - sqrt_rho * y); },
            -10.0, 10.0, 8192);
        CHECK(std::fabs(mmse - doubled) <= 1e-8);
    }
}

TEST_CASE("half-line tanh gap against the closed-form oracle") {
    for (double rho : {0.125, 0.5, 1.0, 2.0, 8.0, 16.0}) {
        const auto gap = inform::tanh_gap(rho);
        const double plus = oracles::piecewise_tanh_gaussian(rho, rho);
        const double minus = oracles::piecewise_tanh_gaussian(-rho, rho);
        CAPTURE(rho);
        CHECK(std::fabs(gap.i_plus - plus) <= 1e-9);
        CHECK(std::fabs(gap.i_minus - minus) <= 1e-9);
        CHECK(gap.gap == doctest::Approx(plus - minus).epsilon(1e-9));
    }
}

TEST_CASE("tanh gap at rho = 1 and on the dyadic grid") {
    const auto at1 = inform::tanh_gap(1.0);
    CHECK(at1.i_plus == doctest::Approx(0.6079).epsilon(0.01));
    CHECK(at1.i_minus == doctest::Approx(0.0665).epsilon(0.08));
    CHECK(at1.gap == doctest::Approx(0.5414).epsilon(0.01));
    CHECK(at1.gap >= 0.5);
    for (int k = 0; k <= 7; ++k) {
        const double rho = 0.125 * std::pow(2.0, k);
        CHECK(inform::tanh_gap(rho).gap >= rho / (1.0 + rho));
    }
    CHECK_THROWS_AS(inform::tanh_gap(0.0), std::invalid_argument);
    // limiting consistency as rho -> 0+
    const auto tiny = inform::tanh_gap(1e-3);
    CHECK(tiny.gap >= 0.0);
    CHECK(tiny.gap <= 0.05);
}

TEST_CASE("exact-tanh gap equals the full-line integral") {
    for (double rho : {0.25, 1.0, 3.0, 10.0}) {
        const auto exact = inform::tanh_gap_exact(rho);
        CHECK(std::fabs(exact.gap - (1.0 - inform::scalar_binary_mmse(rho))) <= 1e-6);
    }
}

TEST_CASE("mi_point invariants") {
    for (double rho : {0.05, 0.8, 4.0}) {
        const auto point = inform::mi_point(rho);
        CHECK(point.bound_qli <= point.bound_general);
        CHECK(point.scalar_binary_mmse <= point.bound_qli + 1e-10);
        CHECK(point.scalar_binary_mmse > 0.0);
    }
}
