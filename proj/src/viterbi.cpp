#include "sstmmse/viterbi.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sstmmse::montecarlo {

Trellis::Trellis(const codes::CodeSpec& code) : nu_(code.nu) {
    if (nu_ < 1) throw std::invalid_argument("Trellis: constraint length must be >= 1");
    const std::size_t regs = std::size_t{1} << (nu_ + 1);
    x1_.resize(regs);
    x2_.resize(regs);
    const std::uint64_t taps1 = code.g1.bits();
    const std::uint64_t taps2 = code.g2.bits();
    for (std::uint64_t reg = 0; reg < regs; ++reg) {
        x1_[reg] = (std::popcount(reg & taps1) & 1) ? -1.0 : 1.0;
        x2_[reg] = (std::popcount(reg & taps2) & 1) ? -1.0 : 1.0;
    }
}

std::vector<std::uint8_t> viterbi_path(const Trellis& trellis,
                                       std::span<const double> soft, std::size_t n_free,
                                       const PathSearch& opts) {
    const std::size_t steps = n_free + opts.forced_tail.size();
    if (soft.size() != 2 * steps)
        throw std::invalid_argument("viterbi_path: soft length does not match step count");
    const int nstates = trellis.num_states();
    const int nu = trellis.nu();
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    std::vector<double> metric(nstates, kNegInf), next(nstates);
    if (opts.free_start)
        std::fill(metric.begin(), metric.end(), 0.0);
    else
        metric[0] = 0.0;

    // decisions[k*nstates + s] is the dropped oldest bit of the survivor
    // entering state s at step k
    std::vector<std::uint8_t> decisions(steps * static_cast<std::size_t>(nstates));

    for (std::size_t k = 0; k < steps; ++k) {
        const double r1 = soft[2 * k];
        const double r2 = soft[2 * k + 1];
        const bool forced = k >= n_free;
        const std::uint32_t forced_bit = forced ? (opts.forced_tail[k - n_free] & 1u) : 0u;
        std::fill(next.begin(), next.end(), kNegInf);
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(nstates); ++s) {
            if (forced && (s & 1u) != forced_bit) continue;
            // predecessors differ in the dropped bit t = input at delay nu
            for (std::uint32_t t = 0; t < 2; ++t) {
                const std::uint32_t pred =
                    (s >> 1) | (t << (nu - 1));  // valid for nu >= 1
                if (metric[pred] == kNegInf) continue;
                const std::uint32_t reg = s | (t << nu);
                const double cand =
                    metric[pred] + r1 * trellis.branch_x1(reg) + r2 * trellis.branch_x2(reg);
                if (cand > next[s]) {
                    next[s] = cand;
                    decisions[k * nstates + s] = static_cast<std::uint8_t>(t);
                }
            }
        }
        metric.swap(next);
    }

    // end state: fully determined once nu or more bits are forced, otherwise
    // the best metric (lowest index on ties)
    std::uint32_t state = 0;
    if (opts.forced_tail.size() >= static_cast<std::size_t>(nu)) {
        for (int j = 0; j < nu; ++j) {
            const std::size_t idx = opts.forced_tail.size() - 1 - static_cast<std::size_t>(j);
            state |= static_cast<std::uint32_t>(opts.forced_tail[idx] & 1u) << j;
        }
    } else {
        double best = kNegInf;
        for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(nstates); ++s)
            if (metric[s] > best) {
                best = metric[s];
                state = s;
            }
    }

    std::vector<std::uint8_t> bits(n_free);
    for (std::size_t k = steps; k-- > 0;) {
        const std::uint8_t dropped = decisions[k * nstates + state];
        if (k < n_free) bits[k] = static_cast<std::uint8_t>(state & 1u);
        state = (state >> 1) | (static_cast<std::uint32_t>(dropped) << (nu - 1));
    }
    return bits;
}

std::vector<std::uint8_t> viterbi_decode(const codes::CodeSpec& code,
                                         std::span<const double> soft) {
    if (soft.size() % 2 != 0 || soft.size() < 2 * static_cast<std::size_t>(code.nu))
        throw std::invalid_argument("viterbi_decode: bad soft input length");
    const std::size_t block_len = soft.size() / 2 - static_cast<std::size_t>(code.nu);
    const Trellis trellis(code);
    const std::vector<std::uint8_t> tail(static_cast<std::size_t>(code.nu), 0);
    PathSearch opts;
    opts.forced_tail = tail;
    return viterbi_path(trellis, soft, block_len, opts);
}

}  // namespace sstmmse::montecarlo
