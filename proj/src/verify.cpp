#include "sstmmse/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "sstmmse/analytic.hpp"
#include "sstmmse/channel.hpp"
#include "sstmmse/codes.hpp"
#include "sstmmse/inform.hpp"
#include "sstmmse/numeric.hpp"
#include "sstmmse/report.hpp"
#include "sstmmse/rng.hpp"

namespace sstmmse::verify {

namespace {

using analytic::MixtureParams;
using codes::Mode;
using codes::TermStats;

constexpr std::uint64_t kSuiteSeed = 0x5eed0001;
constexpr int kRandomStats = 1000;

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

struct Checker {
    SuiteResult result;
    void check(bool ok, const std::string& witness) {
        ++result.checks;
        if (!ok && result.violations.size() < 32) result.violations.push_back(witness);
        if (!ok && result.violations.size() == 32)
            result.violations.push_back("... further violations suppressed");
    }
};

// a consistent TermStats with the given common/exclusive counts
TermStats make_stats(int m_common, int m_excl1, int m_excl2) {
    TermStats stats;
    for (int j = 0; j < m_common; ++j) {
        stats.per_stream_supports[0].emplace_back(0, j);
        stats.per_stream_supports[1].emplace_back(0, j);
    }
    for (int j = 0; j < m_excl1; ++j) stats.per_stream_supports[0].emplace_back(1, j);
    for (int j = 0; j < m_excl2; ++j)
        stats.per_stream_supports[1].emplace_back(1, m_excl1 + j);
    stats.m_common = m_common;
    stats.m_excl = {m_excl1, m_excl2};
    stats.m_col = {m_common + m_excl1, m_common + m_excl2};
    stats.m_v = m_excl1 + m_excl2;
    stats.m_u = 2;
    return stats;
}

// every built-in code with every applicable mode
std::vector<std::pair<TermStats, std::string>> code_stat_sets() {
    std::vector<std::pair<TermStats, std::string>> sets;
    for (auto name : codes::builtin_names()) {
        const auto& code = codes::builtin(name);
        sets.emplace_back(codes::term_stats_general(code), std::string(name) + "/general");
        if (code.qli_shift)
            sets.emplace_back(codes::term_stats_qli(code), std::string(name) + "/qli");
    }
    return sets;
}

std::vector<double> epsilon_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(i / 100.0);
    return grid;
}

// shared scan: every (stats, epsilon) pair from the code sets, the epsilon
// grid, and randomized term statistics
void scan_mixtures(
    const std::function<void(const TermStats&, double, const MixtureParams&,
                             const std::string&)>& visit) {
    const auto grid = epsilon_grid();
    for (const auto& [stats, label] : code_stat_sets())
        for (double eps : grid)
            visit(stats, eps, analytic::mixture_from_stats(stats, eps),
                  label + fmt(" eps=%.2f", eps));
    rng::RandomSource rand(kSuiteSeed);
    for (int i = 0; i < kRandomStats; ++i) {
        const int mc = static_cast<int>(rand.next_u64() % 17);
        const int m1 = static_cast<int>(rand.next_u64() % 17);
        const int m2 = static_cast<int>(rand.next_u64() % 17);
        const double eps = 0.5 * rand.next_double();
        const auto stats = make_stats(mc, m1, m2);
        visit(stats, eps, analytic::mixture_from_stats(stats, eps),
              fmt("random(%g,%g,%g)", mc, m1, m2) + fmt(" eps=%.6f", eps));
    }
}

SuiteResult suite_parity_bound() {
    Checker ck;
    ck.result.name = "parity-bound";
    const auto grid = epsilon_grid();
    for (int m = 0; m <= 40; ++m)
        for (double eps : grid) {
            const double p = analytic::parity_prob(m, eps);
            ck.check(p >= 0.0 && p <= 0.5,
                     fmt("parity_prob(m=%g, eps=%g) = %.17g out of [0,1/2]", m, eps, p));
        }
    rng::RandomSource rand(kSuiteSeed + 1);
    for (int i = 0; i < kRandomStats; ++i) {
        const int m = static_cast<int>(rand.next_u64() % 64);
        const double eps = 0.5 * rand.next_double();
        const double p = analytic::parity_prob(m, eps);
        ck.check(p >= 0.0 && p <= 0.5, fmt("parity_prob(m=%g, eps=%g) out of range", m, eps));
    }
    return ck.result;
}

SuiteResult suite_joint_consistency() {
    Checker ck;
    ck.result.name = "joint-consistency";
    scan_mixtures([&](const TermStats& stats, double eps, const MixtureParams& mp,
                      const std::string& label) {
        const double tol = 1e-12;
        // the four equivalent expressions for the correlation surplus
        const double d1 = mp.a00 - (1.0 - mp.alpha1) * (1.0 - mp.alpha2);
        const double d2 = (1.0 - mp.alpha1) * mp.alpha2 - mp.a01;
        const double d3 = mp.alpha1 * (1.0 - mp.alpha2) - mp.a10;
        const double d4 = mp.a11 - mp.alpha1 * mp.alpha2;
        for (double d : {d1, d2, d3, d4})
            ck.check(std::fabs(d - mp.delta) <= tol, label + ": surplus expressions disagree");
        // cell sanity
        const double sum = mp.a00 + mp.a01 + mp.a10 + mp.a11;
        ck.check(std::fabs(sum - 1.0) <= tol, label + ": cells do not sum to 1");
        for (double cell : {mp.a00, mp.a01, mp.a10, mp.a11})
            ck.check(cell >= -tol && cell <= 1.0 + tol, label + ": cell out of [0,1]");
        ck.check(mp.a11 <= std::min(mp.alpha1, mp.alpha2) + tol,
                 label + ": a11 above min(alpha1, alpha2)");
        // marginal parity identity: alpha_i = p + s_i - 2 p s_i
        const double lhs1 = analytic::parity_prob(stats.m_col[0], eps);
        const double lhs2 = analytic::parity_prob(stats.m_col[1], eps);
        ck.check(std::fabs(lhs1 - (mp.p + mp.s - 2.0 * mp.p * mp.s)) <= tol,
                 label + ": alpha1 does not match the common/exclusive split");
        ck.check(std::fabs(lhs2 - (mp.p + mp.t - 2.0 * mp.p * mp.t)) <= tol,
                 label + ": alpha2 does not match the common/exclusive split");
    });
    return ck.result;
}

SuiteResult suite_delta_nonneg() {
    Checker ck;
    ck.result.name = "delta-nonneg";
    scan_mixtures([&](const TermStats&, double, const MixtureParams& mp,
                      const std::string& label) {
        ck.check(mp.delta >= 0.0, label + fmt(": delta = %.17g < 0", mp.delta));
        ck.check(mp.alpha1 >= 0.0 && mp.alpha1 <= 0.5 && mp.alpha2 >= 0.0 && mp.alpha2 <= 0.5,
                 label + ": marginal outside [0, 1/2]");
    });
    return ck.result;
}

SuiteResult suite_cov_psd() {
    Checker ck;
    ck.result.name = "cov-psd";
    scan_mixtures([&](const TermStats&, double, const MixtureParams& mp,
                      const std::string& label) {
        const auto err = analytic::error_covariance(mp);
        ck.check(err.det() >= -1e-12, label + fmt(": det = %.17g < 0", err.det()));
        ck.check(err.v11 >= 0.0 && err.v22 >= 0.0, label + ": negative diagonal");
        const double mu = analytic::correlation_mu(mp);
        ck.check(std::fabs(mu) <= 1.0 + 1e-12, label + fmt(": |mu| = %.17g > 1", mu));
    });
    return ck.result;
}

SuiteResult suite_xi_nonneg() {
    Checker ck;
    ck.result.name = "xi-nonneg";
    scan_mixtures([&](const TermStats&, double, const MixtureParams& mp,
                      const std::string& label) {
        const double xi = analytic::mmse_xi(mp);
        ck.check(xi >= -1e-12, label + fmt(": xi = %.17g < 0", xi));
        // common/exclusive decomposition of xi/4
        const double decomposed = mp.s * (1.0 - mp.s) + mp.t * (1.0 - mp.t) +
                                  4.0 * mp.p * (1.0 - mp.p) * (mp.s - mp.t) * (mp.s - mp.t);
        ck.check(std::fabs(xi / 4.0 - decomposed) <= 1e-12,
                 label + ": xi decomposition identity fails");
    });
    return ck.result;
}

SuiteResult suite_innovations() {
    Checker ck;
    ck.result.name = "innovations";
    const double cs[] = {0.3, 1.0, 3.16227766016838};
    scan_mixtures([&](const TermStats&, double, const MixtureParams& mp,
                      const std::string& label) {
        const auto err = analytic::error_covariance(mp);
        for (double c : cs) {
            const auto cov = analytic::covariance_r(mp, c);
            const double c2 = c * c;
            const bool ok = std::fabs(cov.v11 - (1.0 + c2 * err.v11)) <= 1e-12 &&
                            std::fabs(cov.v22 - (1.0 + c2 * err.v22)) <= 1e-12 &&
                            std::fabs(cov.v12 - c2 * err.v12) <= 1e-12;
            ck.check(ok, label + fmt(": covariance does not split at c=%g", c));
            ck.check(cov.det() >= -1e-9, label + fmt(": soft-input det < 0 at c=%g", c));
        }
    });
    return ck.result;
}

SuiteResult suite_mi_bounds() {
    Checker ck;
    ck.result.name = "mi-bounds";
    for (int k = -16; k <= 16; ++k) {
        const double rho = std::pow(10.0, k / 8.0);
        const double general = inform::mi_bound_general(rho);
        const double qli = inform::mi_derivative_bound(rho);
        const double mmse = inform::scalar_binary_mmse(rho);
        ck.check(qli < general, fmt("1/(1+rho) not below log(1+rho)/rho at rho=%g", rho));
        ck.check(mmse <= qli + 1e-10,
                 fmt("binary mmse %.12g above 1/(1+rho) %.12g at rho=%g", mmse, qli, rho));
        ck.check(mmse >= 0.0 && mmse <= 1.0, fmt("binary mmse out of [0,1] at rho=%g", rho));
        // strict positivity is only resolvable above the integrator accuracy
        if (rho <= 16.0)
            ck.check(mmse > 1e-8, fmt("binary mmse not positive at rho=%g", rho));
    }
    return ck.result;
}

SuiteResult suite_tanh_gap() {
    Checker ck;
    ck.result.name = "tanh-gap";
    const auto at1 = inform::tanh_gap(1.0);
    ck.check(std::fabs(at1.i_plus - 0.6079) <= 0.005,
             fmt("i_plus at rho=1 is %.6f, expected 0.6079 +- 0.005", at1.i_plus));
    ck.check(std::fabs(at1.i_minus - 0.0665) <= 0.005,
             fmt("i_minus at rho=1 is %.6f, expected 0.0665 +- 0.005", at1.i_minus));
    ck.check(std::fabs(at1.gap - 0.5414) <= 0.005,
             fmt("gap at rho=1 is %.6f, expected 0.5414 +- 0.005", at1.gap));
    ck.check(at1.gap >= 0.5, fmt("gap at rho=1 is %.6f, below 1/2", at1.gap));
    for (int k = 0; k <= 7; ++k) {
        const double rho = 0.125 * std::pow(2.0, k);
        const auto gap = inform::tanh_gap(rho);
        ck.check(gap.gap >= rho / (1.0 + rho),
                 fmt("gap %.9f below rho/(1+rho) %.9f at rho=%g", gap.gap,
                     rho / (1.0 + rho), rho));
        // with exact tanh the two half-line integrals reproduce the
        // full-line binary-mmse integral
        const auto exact = inform::tanh_gap_exact(rho);
        const double mmse = inform::scalar_binary_mmse(rho);
        ck.check(std::fabs(exact.gap - (1.0 - mmse)) <= 1e-6,
                 fmt("exact-tanh gap %.9f vs 1-mmse %.9f at rho=%g", exact.gap, 1.0 - mmse,
                     rho));
    }
    const auto tiny = inform::tanh_gap(1e-3);
    ck.check(tiny.gap >= 0.0 && tiny.gap <= 0.05, fmt("gap at rho=1e-3 is %.6f", tiny.gap));
    return ck.result;
}

SuiteResult suite_density() {
    Checker ck;
    ck.result.name = "density";
    struct Case {
        const char* code;
        Mode mode;
        double ebno_db;
    };
    const Case cases[] = {{"c1", Mode::general, 0.0},
                          {"c1", Mode::qli, 0.0},
                          {"c2", Mode::general, 5.0},
                          {"c2", Mode::qli, -3.0},
                          {"c5", Mode::general, 2.0}};
    for (const auto& cs : cases) {
        const auto& code = codes::builtin(cs.code);
        const auto snr = channel::snr_point(cs.ebno_db);
        const auto mp =
            analytic::mixture_from_stats(codes::term_stats(code, cs.mode), snr.epsilon);
        const double c = snr.c;
        const double lo = -c - 10.0, hi = c + 10.0;
        const std::string label = std::string(cs.code) + "/" +
                                  std::string(codes::to_string(cs.mode)) +
                                  fmt(" at %g dB", cs.ebno_db);
        const double mass = numeric::simpson(
            [&](double x) {
                return numeric::simpson(
                    [&](double y) { return analytic::joint_density(mp, c, x, y); }, lo, hi,
                    1024);
            },
            lo, hi, 1024);
        ck.check(std::fabs(mass - 1.0) <= 1e-6, label + fmt(": mass %.9f != 1", mass));
        for (double x : {-c, -0.3, 0.0, 0.7, c}) {
            const double marginal = numeric::simpson(
                [&](double y) { return analytic::joint_density(mp, c, x, y); }, lo, hi, 4096);
            const double expected = (1.0 - mp.alpha1) * numeric::norm_pdf(x - c) +
                                    mp.alpha1 * numeric::norm_pdf(x + c);
            ck.check(std::fabs(marginal - expected) <= 1e-8,
                     label + fmt(": x-marginal off by %.3g at x=%g", marginal - expected, x));
        }
        for (double y : {-1.1, 0.0, 0.4, c}) {
            const double marginal = numeric::simpson(
                [&](double x) { return analytic::joint_density(mp, c, x, y); }, lo, hi, 4096);
            const double expected = (1.0 - mp.alpha2) * numeric::norm_pdf(y - c) +
                                    mp.alpha2 * numeric::norm_pdf(y + c);
            ck.check(std::fabs(marginal - expected) <= 1e-8,
                     label + fmt(": y-marginal off by %.3g at y=%g", marginal - expected, y));
        }
    }
    return ck.result;
}

SuiteResult suite_limits() {
    Checker ck;
    ck.result.name = "limits";
    for (const auto& [stats, label] : code_stat_sets()) {
        const auto clean = analytic::mixture_from_stats(stats, 0.0);
        ck.check(clean.alpha1 == 0.0 && clean.alpha2 == 0.0 && clean.delta == 0.0 &&
                     clean.a00 == 1.0,
                 label + ": noiseless limit not degenerate at cell 00");
        ck.check(analytic::mmse_xi(clean) == 0.0, label + ": xi nonzero at epsilon 0");
        const auto worst = analytic::mixture_from_stats(stats, 0.5);
        ck.check(std::fabs(worst.alpha1 - 0.5) <= 1e-15 &&
                     std::fabs(worst.alpha2 - 0.5) <= 1e-15,
                 label + ": marginals not 1/2 at epsilon 1/2");
        ck.check(std::fabs(worst.delta) <= 1e-15, label + ": delta nonzero at epsilon 1/2");
        ck.check(std::fabs(0.5 * analytic::mmse_xi(worst) - 1.0) <= 1e-12,
                 label + ": xi/2 not 1 at epsilon 1/2");
    }
    // Q-function endpoints
    ck.check(std::fabs(channel::q_function(0.0) - 0.5) <= 1e-15, "Q(0) != 1/2");
    ck.check(channel::q_function(40.0) <= 1e-12, "Q(40) not ~ 0");
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.5}) {
        ck.check(std::fabs(channel::q_function(x) + channel::q_function(-x) - 1.0) <= 1e-12,
                 fmt("Q(x)+Q(-x) != 1 at x=%g", x));
        ck.check(channel::q_function(x) > channel::q_function(x + 1e-3),
                 fmt("Q not strictly decreasing at x=%g", x));
    }
    const double eps_low = channel::snr_point(-40.0).epsilon;
    const double eps_high = channel::snr_point(40.0).epsilon;
    ck.check(eps_low > 0.49 && eps_low < 0.5, fmt("epsilon(-40 dB) = %.6f", eps_low));
    ck.check(eps_high >= 0.0 && eps_high < 1e-12, fmt("epsilon(+40 dB) = %.3g", eps_high));
    return ck.result;
}

SuiteResult suite_sweeps() {
    Checker ck;
    ck.result.name = "sweeps";
    const auto grid = report::SweepSpec::default_grid();
    for (auto name : codes::builtin_names()) {
        const auto& code = codes::builtin(name);
        std::vector<Mode> modes{Mode::general};
        if (code.qli_shift) modes.push_back(Mode::qli);
        for (Mode mode : modes) {
            const auto rows = report::sweep_table(code, mode, grid);
            const std::string label =
                std::string(name) + "/" + std::string(codes::to_string(mode));
            for (std::size_t i = 1; i < rows.size(); ++i)
                ck.check(rows[i].half_mmse <= rows[i - 1].half_mmse + 1e-12,
                         label + fmt(": half_mmse increases at %g dB", rows[i].ebno_db));
            for (const auto& row : rows) {
                const double recon = 0.5 * (row.term1 + row.term2 - 8.0 * row.delta);
                ck.check(std::fabs(row.half_mmse - recon) <= 1e-12,
                         label + fmt(": row at %g dB inconsistent", row.ebno_db));
            }
        }
    }
    const auto c1 = report::sweep_table(codes::builtin("c1"), Mode::general, grid);
    ck.check(c1.front().half_mmse > c1.front().bound,
             "c1/general: half_mmse not above the bound at -10 dB");
    ck.check(c1.back().half_mmse < c1.back().bound,
             "c1/general: half_mmse not below the bound at +10 dB");
    return ck.result;
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"parity-bound", &suite_parity_bound},
        {"joint-consistency", &suite_joint_consistency},
        {"delta-nonneg", &suite_delta_nonneg},
        {"cov-psd", &suite_cov_psd},
        {"xi-nonneg", &suite_xi_nonneg},
        {"innovations", &suite_innovations},
        {"mi-bounds", &suite_mi_bounds},
        {"tanh-gap", &suite_tanh_gap},
        {"density", &suite_density},
        {"limits", &suite_limits},
        {"sweeps", &suite_sweeps},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name) {
    std::vector<SuiteResult> results;
    if (name == "all") {
        for (const auto& [unused, fn] : suites()) results.push_back(fn());
        return results;
    }
    for (const auto& [candidate, fn] : suites())
        if (candidate == name) {
            results.push_back(fn());
            return results;
        }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace sstmmse::verify
