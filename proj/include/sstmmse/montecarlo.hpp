// Simulation oracles for the closed forms: empirical joint distribution of
// the encoded block for the main decoder, empirical covariance of its soft
// input, and end-to-end SST decoding against a conventional Viterbi baseline
// on identical noise.
//
// Reproducibility: work is split into fixed substreams keyed by
// (seed, stream id); results are merged in stream order, so outputs are
// bit-identical for a given SimConfig regardless of thread count.

#pragma once

#include <cstdint>
#include <vector>

#include "sstmmse/analytic.hpp"
#include "sstmmse/channel.hpp"
#include "sstmmse/codes.hpp"
#include "sstmmse/viterbi.hpp"

namespace sstmmse::montecarlo {

struct SimConfig {
    std::uint64_t seed = 1;
    long trials = 100000;       // samples (or blocks, for BER runs)
    int block_len = 10000;      // info bits per block for BER runs
    codes::Mode mode = codes::Mode::general;
    int threads = 1;
};

struct EmpiricalMixture {
    long n00 = 0, n01 = 0, n10 = 0, n11 = 0;
    long trials = 0;

    double alpha1_hat() const;
    double alpha2_hat() const;
    double delta_hat() const;
    // standard errors of the three estimators (binomial / delta method)
    double alpha1_se() const;
    double alpha2_se() const;
    double delta_se() const;
};

// Draws i.i.d. error windows with P(e=1) = epsilon, forms the encoded block
// (v1, v2) at a steady-state index, and tallies the four joint outcomes.
EmpiricalMixture sample_v_joint(const codes::CodeSpec& code, double epsilon,
                                const SimConfig& cfg);

struct SoftCovResult {
    double mean1 = 0, mean2 = 0;
    analytic::Cov2 cov{};
    // standard errors: means from the sample variance, covariance entries
    // from the spread across substream batches
    double mean1_se = 0, mean2_se = 0;
    double v11_se = 0, v22_se = 0, v12_se = 0;
};

// Samples the soft input pair to the main decoder and returns its mean and
// covariance. The encoded-block signs (v1, v2) come from a sampled error
// window (the all-zero codeword, by linearity); the magnitudes are fresh
// channel uses signed by their own hard error XOR the encoded-block bit, so
// each sample follows the Gaussian-mixture law whose moments the closed
// forms predict. (In the physical decoder the magnitude position also feeds
// the window; for codes whose product matrix has diagonal delay-0 terms that
// error cancels out of the sign and the literal pairing has visibly
// different moments. sst_decode keeps the literal construction.)
SoftCovResult sample_soft_cov(const codes::CodeSpec& code, const channel::SnrPoint& snr,
                              const SimConfig& cfg);

// SST decoding: pre-decoder estimate plus main-decoder correction.
// In general mode the pre-decoder is the inverse encoder and the main decoder
// sees |z| with the sign of the re-encoded difference; in QLI mode the
// pre-decoder adds the two streams and the main decoder sees |z| signed by
// the syndrome, with the L-step realignment before the final addition.
// z is an interleaved terminated block, length 2*(block_len + nu).
std::vector<std::uint8_t> sst_decode(const codes::CodeSpec& code,
                                     std::span<const double> z, codes::Mode mode);

struct BerReport {
    long info_bits = 0;
    long errors_conventional = 0;
    long errors_sst = 0;
    long diff_positions = 0;  // bits where the two decoders disagree with truth differently
    double ber_conventional = 0;
    double ber_sst = 0;
    // z-statistic of the paired error-count difference (0 when identical)
    double paired_z() const;
};

// Runs conventional Viterbi and the SST decoder on identical channel output,
// cfg.trials blocks of cfg.block_len info bits.
BerReport ber_experiment(const codes::CodeSpec& code, const channel::SnrPoint& snr,
                         const SimConfig& cfg);

}  // namespace sstmmse::montecarlo
