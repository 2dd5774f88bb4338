#include "sstmmse/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace sstmmse::montecarlo {

namespace {

constexpr int kStreams = 64;  // fixed substream count, independent of threads

// trials handled by substream s out of kStreams
long stream_share(long trials, int s) {
    const long base = trials / kStreams;
    return base + (s < trials % kStreams ? 1 : 0);
}

void run_streams(int threads, const std::function<void(int)>& work) {
    if (threads <= 1) {
        for (int s = 0; s < kStreams; ++s) work(s);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next.fetch_add(1); s < kStreams; s = next.fetch_add(1)) work(s);
    };
    std::vector<std::thread> pool;
    const int n = std::min(threads, kStreams);
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// steady-state tally index: past the full memory of the product map
int steady_index(const codes::CodeSpec& code) {
    const auto product = codes::product_matrix(code);
    int deg = 0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) deg = std::max(deg, product.at(r, c).degree());
    return deg + 8;
}

// Per-stream draw plan for the error terms feeding (v1, v2): which error
// positions are needed, and which of them each output stream XORs together.
struct DrawPlan {
    std::array<std::vector<int>, 2> positions;       // ascending, per error stream
    std::array<std::vector<std::pair<int, int>>, 2>  // (error stream, slot) per v stream
        terms;
};

DrawPlan make_plan(const codes::TermStats& stats, int k0) {
    DrawPlan plan;
    for (const auto& support : stats.per_stream_supports)
        for (auto [stream, delay] : support) {
            auto& pos = plan.positions[static_cast<std::size_t>(stream)];
            pos.push_back(k0 - delay);
        }
    for (auto& pos : plan.positions) {
        std::sort(pos.begin(), pos.end());
        pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    }
    for (int l = 0; l < 2; ++l)
        for (auto [stream, delay] : stats.per_stream_supports[static_cast<std::size_t>(l)]) {
            const auto& pos = plan.positions[static_cast<std::size_t>(stream)];
            const int slot = static_cast<int>(
                std::lower_bound(pos.begin(), pos.end(), k0 - delay) - pos.begin());
            plan.terms[static_cast<std::size_t>(l)].emplace_back(stream, slot);
        }
    return plan;
}

}  // namespace

double EmpiricalMixture::alpha1_hat() const {
    return trials ? static_cast<double>(n10 + n11) / static_cast<double>(trials) : 0.0;
}
double EmpiricalMixture::alpha2_hat() const {
    return trials ? static_cast<double>(n01 + n11) / static_cast<double>(trials) : 0.0;
}
double EmpiricalMixture::delta_hat() const {
    return trials ? static_cast<double>(n11) / static_cast<double>(trials) -
                        alpha1_hat() * alpha2_hat()
                  : 0.0;
}
double EmpiricalMixture::alpha1_se() const {
    const double a = alpha1_hat();
    return trials ? std::sqrt(a * (1.0 - a) / static_cast<double>(trials)) : 0.0;
}
double EmpiricalMixture::alpha2_se() const {
    const double a = alpha2_hat();
    return trials ? std::sqrt(a * (1.0 - a) / static_cast<double>(trials)) : 0.0;
}

double EmpiricalMixture::delta_se() const {
    if (!trials) return 0.0;
    // delta method over the multinomial cells, gradient of p11 - p1*p2
    const double n = static_cast<double>(trials);
    const double p[4] = {static_cast<double>(n00) / n, static_cast<double>(n01) / n,
                         static_cast<double>(n10) / n, static_cast<double>(n11) / n};
    const double p1 = p[2] + p[3], p2 = p[1] + p[3];
    const double g[4] = {0.0, -p1, -p2, 1.0 - p1 - p2};
    double sum_gp = 0.0, sum_g2p = 0.0;
    for (int i = 0; i < 4; ++i) {
        sum_gp += g[i] * p[i];
        sum_g2p += g[i] * g[i] * p[i];
    }
    return std::sqrt(std::max(0.0, sum_g2p - sum_gp * sum_gp) / n);
}

EmpiricalMixture sample_v_joint(const codes::CodeSpec& code, double epsilon,
                                const SimConfig& cfg) {
    if (!(epsilon >= 0.0 && epsilon <= 0.5))
        throw std::invalid_argument("sample_v_joint: epsilon outside [0, 1/2]");
    if (cfg.trials < 1) throw std::invalid_argument("sample_v_joint: trials must be >= 1");
    const auto stats = codes::term_stats(code, cfg.mode);
    const DrawPlan plan = make_plan(stats, steady_index(code));

    struct Cell { std::array<long, 4> n{}; };
    std::vector<Cell> per_stream(kStreams);
    run_streams(cfg.threads, [&](int s) {
        rng::RandomSource rand(cfg.seed, static_cast<std::uint64_t>(s));
        std::array<std::vector<std::uint8_t>, 2> draws{
            std::vector<std::uint8_t>(plan.positions[0].size()),
            std::vector<std::uint8_t>(plan.positions[1].size())};
        auto& cell = per_stream[static_cast<std::size_t>(s)];
        const long count = stream_share(cfg.trials, s);
        for (long trial = 0; trial < count; ++trial) {
            for (auto& stream_draws : draws)
                for (auto& e : stream_draws)
                    e = rand.next_bernoulli(epsilon) ? 1 : 0;
            int v[2] = {0, 0};
            for (int l = 0; l < 2; ++l)
                for (auto [stream, slot] : plan.terms[static_cast<std::size_t>(l)])
                    v[l] ^= draws[static_cast<std::size_t>(stream)]
                                 [static_cast<std::size_t>(slot)];
            ++cell.n[static_cast<std::size_t>(v[0] * 2 + v[1])];
        }
    });

    EmpiricalMixture out;
    out.trials = cfg.trials;
    for (const auto& cell : per_stream) {
        out.n00 += cell.n[0];
        out.n01 += cell.n[1];
        out.n10 += cell.n[2];
        out.n11 += cell.n[3];
    }
    return out;
}

SoftCovResult sample_soft_cov(const codes::CodeSpec& code, const channel::SnrPoint& snr,
                              const SimConfig& cfg) {
    if (cfg.trials < 2) throw std::invalid_argument("sample_soft_cov: trials must be >= 2");
    const auto stats = codes::term_stats(code, cfg.mode);  // validates the mode
    const DrawPlan plan = make_plan(stats, steady_index(code));
    const double c = snr.c;

    struct Acc {
        double n = 0, sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    };
    std::vector<Acc> per_stream(kStreams);

    run_streams(cfg.threads, [&](int s) {
        rng::RandomSource rand(cfg.seed, static_cast<std::uint64_t>(s));
        std::array<std::vector<std::uint8_t>, 2> draws{
            std::vector<std::uint8_t>(plan.positions[0].size()),
            std::vector<std::uint8_t>(plan.positions[1].size())};
        Acc& acc = per_stream[static_cast<std::size_t>(s)];
        const long count = stream_share(cfg.trials, s);
        for (long trial = 0; trial < count; ++trial) {
            // encoded-block pair (v1, v2) from a sampled error window; this
            // carries all of the code structure, including the shared terms
            // behind delta
            for (auto& stream_draws : draws)
                for (auto& e : stream_draws)
                    e = rand.next_bernoulli(snr.epsilon) ? 1 : 0;
            int v[2] = {0, 0};
            for (int l = 0; l < 2; ++l)
                for (auto [stream, slot] : plan.terms[static_cast<std::size_t>(l)])
                    v[l] ^= draws[static_cast<std::size_t>(stream)]
                                 [static_cast<std::size_t>(slot)];
            // magnitude carriers are fresh channel uses; each sign is the
            // carrier's own hard error XOR the encoded-block bit, so the
            // soft value is N(+-c, 1) per v as in the mixture law
            const double z1 = c + rand.next_normal();
            const double z2 = c + rand.next_normal();
            const int h1 = v[0] ^ (z1 < 0.0 ? 1 : 0);
            const int h2 = v[1] ^ (z2 < 0.0 ? 1 : 0);
            const double a = std::fabs(z1) * (h1 ? -1.0 : 1.0);
            const double b = std::fabs(z2) * (h2 ? -1.0 : 1.0);
            acc.n += 1;
            acc.sa += a;
            acc.sb += b;
            acc.saa += a * a;
            acc.sbb += b * b;
            acc.sab += a * b;
        }
    });

    // pooled point estimates, merged in stream order
    Acc total;
    for (const Acc& acc : per_stream) {
        total.n += acc.n;
        total.sa += acc.sa;
        total.sb += acc.sb;
        total.saa += acc.saa;
        total.sbb += acc.sbb;
        total.sab += acc.sab;
    }
    SoftCovResult out;
    const double n = total.n;
    out.mean1 = total.sa / n;
    out.mean2 = total.sb / n;
    out.cov.v11 = (total.saa - n * out.mean1 * out.mean1) / (n - 1);
    out.cov.v22 = (total.sbb - n * out.mean2 * out.mean2) / (n - 1);
    out.cov.v12 = (total.sab - n * out.mean1 * out.mean2) / (n - 1);
    out.mean1_se = std::sqrt(out.cov.v11 / n);
    out.mean2_se = std::sqrt(out.cov.v22 / n);

    // batch-means spread of the per-stream covariance estimates
    double m11 = 0, m22 = 0, m12 = 0;
    std::vector<std::array<double, 3>> batch;
    batch.reserve(kStreams);
    for (const Acc& acc : per_stream) {
        if (acc.n < 2) continue;
        const double bn = acc.n;
        const double ma = acc.sa / bn, mb = acc.sb / bn;
        batch.push_back({(acc.saa - bn * ma * ma) / (bn - 1),
                         (acc.sbb - bn * mb * mb) / (bn - 1),
                         (acc.sab - bn * ma * mb) / (bn - 1)});
    }
    const double nb = static_cast<double>(batch.size());
    for (const auto& b : batch) {
        m11 += b[0];
        m22 += b[1];
        m12 += b[2];
    }
    m11 /= nb;
    m22 /= nb;
    m12 /= nb;
    double s11 = 0, s22 = 0, s12 = 0;
    for (const auto& b : batch) {
        s11 += (b[0] - m11) * (b[0] - m11);
        s22 += (b[1] - m22) * (b[1] - m22);
        s12 += (b[2] - m12) * (b[2] - m12);
    }
    out.v11_se = std::sqrt(s11 / (nb * (nb - 1)));
    out.v22_se = std::sqrt(s22 / (nb * (nb - 1)));
    out.v12_se = std::sqrt(s12 / (nb * (nb - 1)));
    return out;
}

namespace {

// convolution of a bit sequence with generator taps over the same window
std::vector<std::uint8_t> reencode_stream(const gf2poly::Poly& taps,
                                          std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> out(bits.size(), 0);
    for (int j : taps.exponents())
        for (std::size_t k = static_cast<std::size_t>(j); k < bits.size(); ++k)
            out[k] ^= bits[k - static_cast<std::size_t>(j)] & 1u;
    return out;
}

}  // namespace

std::vector<std::uint8_t> sst_decode(const codes::CodeSpec& code,
                                     std::span<const double> z, codes::Mode mode) {
    if (z.size() % 2 != 0) throw std::invalid_argument("sst_decode: odd soft length");
    const std::size_t total = z.size() / 2;
    const auto nu = static_cast<std::size_t>(code.nu);
    if (total < nu + 1) throw std::invalid_argument("sst_decode: block too short");
    const std::size_t block_len = total - nu;
    if (mode == codes::Mode::qli && !code.qli_shift)
        throw std::invalid_argument("sst_decode: qli mode on a non-QLI code");

    std::vector<std::uint8_t> zh1(total), zh2(total);
    for (std::size_t k = 0; k < total; ++k) {
        zh1[k] = z[2 * k] < 0.0;
        zh2[k] = z[2 * k + 1] < 0.0;
    }

    const Trellis trellis(code);
    std::vector<std::uint8_t> out(block_len);

    if (mode == codes::Mode::general) {
        // pre-decode, re-encode, and sign |z| by the re-encoded difference
        const auto ipre = codes::apply_inverse(code, zh1, zh2, total);
        const auto p1 = reencode_stream(code.g1, ipre);
        const auto p2 = reencode_stream(code.g2, ipre);
        std::vector<double> r(2 * total);
        for (std::size_t k = 0; k < total; ++k) {
            r[2 * k] = std::fabs(z[2 * k]) * ((zh1[k] ^ p1[k]) ? -1.0 : 1.0);
            r[2 * k + 1] = std::fabs(z[2 * k + 1]) * ((zh2[k] ^ p2[k]) ? -1.0 : 1.0);
        }
        // the main decoder searches the coset i + ipre of terminated blocks,
        // so its tail bits are pinned to the pre-decoder tail
        PathSearch opts;
        opts.forced_tail = std::span<const std::uint8_t>(ipre).subspan(block_len, nu);
        const auto uhat = viterbi_path(trellis, r, block_len, opts);
        for (std::size_t k = 0; k < block_len; ++k) out[k] = ipre[k] ^ uhat[k];
        return out;
    }

    const auto shift = static_cast<std::size_t>(*code.qli_shift);
    // syndrome over the padded window; zh beyond the block is zero
    std::vector<std::uint8_t> zeta(total + shift, 0);
    for (std::size_t k = 0; k < zeta.size(); ++k) {
        int acc = 0;
        for (int j : code.g2.exponents()) {
            const std::size_t d = static_cast<std::size_t>(j);
            if (d <= k && k - d < total) acc ^= zh1[k - d];
        }
        for (int j : code.g1.exponents()) {
            const std::size_t d = static_cast<std::size_t>(j);
            if (d <= k && k - d < total) acc ^= zh2[k - d];
        }
        zeta[k] = static_cast<std::uint8_t>(acc);
    }
    std::vector<double> eta(2 * total);
    for (std::size_t k = 0; k < total; ++k) {
        const double sign = zeta[k + shift] ? -1.0 : 1.0;
        eta[2 * k] = std::fabs(z[2 * k]) * sign;
        eta[2 * k + 1] = std::fabs(z[2 * k + 1]) * sign;
    }
    // the decoded sequence is the pre-decoder error advanced by L: its first
    // state is unknown (free start) and only its last L bits are known zero
    const std::vector<std::uint8_t> tail(shift, 0);
    PathSearch opts;
    opts.free_start = true;
    opts.forced_tail = tail;
    const auto ushift = viterbi_path(trellis, eta, total - shift, opts);
    for (std::size_t k = 0; k < block_len; ++k)
        out[k] = static_cast<std::uint8_t>((zh1[k + shift] ^ zh2[k + shift]) ^ ushift[k]);
    return out;
}

double BerReport::paired_z() const {
    if (diff_positions == 0) return 0.0;
    const double sum_d = static_cast<double>(errors_sst - errors_conventional);
    const double sum_d2 = static_cast<double>(diff_positions);
    const double var = sum_d2 - sum_d * sum_d / static_cast<double>(info_bits);
    return var <= 0.0 ? 0.0 : sum_d / std::sqrt(var);
}

BerReport ber_experiment(const codes::CodeSpec& code, const channel::SnrPoint& snr,
                         const SimConfig& cfg) {
    if (cfg.trials < 1 || cfg.block_len < code.nu + 1)
        throw std::invalid_argument("ber_experiment: bad trials/block_len");
    struct Counts {
        long conv = 0, sst = 0, diff = 0;
    };
    std::vector<Counts> per_block(static_cast<std::size_t>(cfg.trials));

    std::atomic<long> next{0};
    auto worker = [&] {
        const auto block_len = static_cast<std::size_t>(cfg.block_len);
        std::vector<std::uint8_t> info(block_len);
        for (long b = next.fetch_add(1); b < cfg.trials; b = next.fetch_add(1)) {
            rng::RandomSource rand(cfg.seed, static_cast<std::uint64_t>(b));
            for (auto& bit : info) bit = rand.next_bernoulli(0.5) ? 1 : 0;
            const auto coded = codes::encode(code, info);
            const auto block = channel::transmit(coded, snr, rand);
            const auto conv = viterbi_decode(code, block.z);
            const auto sst = sst_decode(code, block.z, cfg.mode);
            auto& counts = per_block[static_cast<std::size_t>(b)];
            for (std::size_t k = 0; k < block_len; ++k) {
                const bool conv_err = conv[k] != info[k];
                const bool sst_err = sst[k] != info[k];
                counts.conv += conv_err;
                counts.sst += sst_err;
                counts.diff += conv_err != sst_err;
            }
        }
    };
    if (cfg.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < cfg.threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BerReport report;
    report.info_bits = cfg.trials * static_cast<long>(cfg.block_len);
    for (const auto& counts : per_block) {
        report.errors_conventional += counts.conv;
        report.errors_sst += counts.sst;
        report.diff_positions += counts.diff;
    }
    report.ber_conventional =
        static_cast<double>(report.errors_conventional) / static_cast<double>(report.info_bits);
    report.ber_sst =
        static_cast<double>(report.errors_sst) / static_cast<double>(report.info_bits);
    return report;
}

}  // namespace sstmmse::montecarlo
