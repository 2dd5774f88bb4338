// Trellis and maximum-correlation path search for rate-1/2 feedforward
// encoders. The state is the last nu input bits (bit 0 most recent). Branch
// metrics are correlations r1*x1 + r2*x2 with antipodal branch labels, so the
// search is maximum-likelihood for BPSK soft inputs.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sstmmse/codes.hpp"

namespace sstmmse::montecarlo {

class Trellis {
  public:
    explicit Trellis(const codes::CodeSpec& code);

    int nu() const { return nu_; }
    int num_states() const { return 1 << nu_; }

    // Antipodal outputs for the register value reg = state | (bit << ...)
    // layout below; reg bit j is the input at delay j.
    double branch_x1(std::uint32_t reg) const { return x1_[reg]; }
    double branch_x2(std::uint32_t reg) const { return x2_[reg]; }

  private:
    int nu_;
    std::vector<double> x1_, x2_;  // indexed by (nu+1)-bit register value
};

struct PathSearch {
    // All-states-equal start instead of the all-zero state.
    bool free_start = false;
    // Input bits forced after the free section (e.g. termination zeros).
    std::span<const std::uint8_t> forced_tail;
};

// Decodes n_free free input bits followed by the forced tail from the
// interleaved soft sequence (length 2*(n_free + tail)). Returns the n_free
// decoded bits. Ties resolve deterministically (first candidate wins). When
// the tail is shorter than nu, the best-metric end state is chosen.
std::vector<std::uint8_t> viterbi_path(const Trellis& trellis,
                                       std::span<const double> soft, std::size_t n_free,
                                       const PathSearch& opts = {});

// Terminated maximum-correlation decoding: block_len free bits plus nu zero
// tail bits; soft length must be exactly 2*(block_len + nu).
std::vector<std::uint8_t> viterbi_decode(const codes::CodeSpec& code,
                                         std::span<const double> soft);

}  // namespace sstmmse::montecarlo
