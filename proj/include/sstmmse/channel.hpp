// BPSK over AWGN: SNR bookkeeping (Eb/N0 in dB, linear rho, amplitude c,
// hard-decision error probability epsilon) plus transmission and hard
// decision. All internal math is in linear rho; only the CLI speaks dB.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sstmmse/rng.hpp"

namespace sstmmse::channel {

// Upper tail of the standard normal, accurate to well below 1e-12
// (delegates to the library erfc).
double q_function(double x);

struct SnrPoint {
    double ebno_db;
    double rho;      // Eb/N0 linear; equals c^2 for a rate-1/2 code
    double c;        // signal amplitude sqrt(rho)
    double epsilon;  // Q(c)
};

SnrPoint snr_point(double ebno_db);

struct ChannelBlock {
    std::vector<double> x;            // antipodal symbols, +1 for bit 0
    std::vector<double> z;            // c*x + unit-variance Gaussian noise
    std::vector<std::uint8_t> z_hard; // 0 iff z >= 0
};

ChannelBlock transmit(std::span<const std::uint8_t> bits, const SnrPoint& snr,
                      rng::RandomSource& noise);

}  // namespace sstmmse::channel
