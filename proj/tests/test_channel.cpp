#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sstmmse/channel.hpp"

using namespace sstmmse;

TEST_CASE("q_function against the quadrature oracle") {
    CHECK(channel::q_function(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(channel::q_function(40.0) <= 1e-12);
    for (double x : {-2.0, -0.5, 0.3, 1.0, 2.7, 5.0})
        CHECK(std::fabs(channel::q_function(x) - oracles::q_by_quadrature(x)) <= 1e-12);
    CHECK(channel::q_function(1.0) == doctest::Approx(0.158655).epsilon(5e-6));
}

TEST_CASE("snr_point") {
    const auto zero_db = channel::snr_point(0.0);
    CHECK(zero_db.rho == doctest::Approx(1.0));
    CHECK(zero_db.c == doctest::Approx(1.0));
    CHECK(zero_db.epsilon == doctest::Approx(0.1587).epsilon(5e-4));
    CHECK(channel::snr_point(-10.0).rho == doctest::Approx(0.1));
    for (double db : {-40.0, -3.0, 0.0, 7.0, 15.0}) {
        const auto point = channel::snr_point(db);
        CHECK(point.epsilon > 0.0);
        CHECK(point.epsilon < 0.5);
    }
    // the tail underflows to double 0 at extreme SNR
    CHECK(channel::snr_point(40.0).epsilon < 1e-12);
    CHECK(channel::snr_point(-40.0).epsilon > 0.49);
}

TEST_CASE("transmit maps bits to antipodal symbols with unit-variance noise") {
    const auto snr = channel::snr_point(40.0);  // c = 100, flips impossible
    rng::RandomSource noise(5);
    const std::vector<std::uint8_t> bits{0, 1, 0, 0, 1, 1, 0, 1};
    const auto block = channel::transmit(bits, snr, noise);
    for (std::size_t j = 0; j < bits.size(); ++j) {
        CHECK(block.x[j] == (bits[j] ? -1.0 : 1.0));
        CHECK(block.z_hard[j] == bits[j]);
        CHECK(block.z_hard[j] == (block.z[j] >= 0.0 ? 0 : 1));
    }
}

TEST_CASE("hard-decision error rate matches epsilon at 0 dB") {
    const auto snr = channel::snr_point(0.0);
    rng::RandomSource noise(123);
    const std::vector<std::uint8_t> zeros(1000000, 0);
    const auto block = channel::transmit(zeros, snr, noise);
    long flips = 0;
    for (auto bit : block.z_hard) flips += bit;
    const double rate = static_cast<double>(flips) / static_cast<double>(zeros.size());
    const double sigma =
        std::sqrt(snr.epsilon * (1.0 - snr.epsilon) / static_cast<double>(zeros.size()));
    CHECK(std::fabs(rate - snr.epsilon) <= 3.0 * sigma);
}

TEST_CASE("the antipodal input has unit variance per component") {
    // so the per-branch prediction error with no observations is 1 + 1 = 2
    rng::RandomSource source(41);
    const auto snr = channel::snr_point(0.0);
    std::vector<std::uint8_t> bits(200000);
    for (auto& bit : bits) bit = source.next_bernoulli(0.5) ? 1 : 0;
    const auto block = channel::transmit(bits, snr, source);
    double sum = 0, sum2 = 0;
    for (double x : block.x) {
        sum += x;
        sum2 += x * x;
    }
    const auto n = static_cast<double>(bits.size());
    CHECK(sum2 / n == doctest::Approx(1.0));  // x is +-1 exactly
    CHECK(std::fabs(sum / n) <= 3.0 / std::sqrt(n));
}

TEST_CASE("noise samples have the right first moments") {
    rng::RandomSource noise(99);
    const long n = 400000;
    double sum = 0, sum2 = 0;
    for (long i = 0; i < n; ++i) {
        const double w = noise.next_normal();
        sum += w;
        sum2 += w * w;
    }
    CHECK(std::fabs(sum / n) <= 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("random source streams are reproducible and distinct") {
    rng::RandomSource a(17, 3), b(17, 3), c(17, 4);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u64(), y = b.next_u64(), z = c.next_u64();
        all_equal = all_equal && x == y;
        any_diff = any_diff || x != z;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}
