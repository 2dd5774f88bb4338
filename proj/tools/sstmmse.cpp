// Command-line front end: structure analysis, SNR sweeps, Monte Carlo
// simulation with analytic targets, named property suites, and the
// preconfigured figure series. Exit codes: 0 ok, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "sstmmse/analytic.hpp"
#include "sstmmse/channel.hpp"
#include "sstmmse/codes.hpp"
#include "sstmmse/inform.hpp"
#include "sstmmse/montecarlo.hpp"
#include "sstmmse/report.hpp"
#include "sstmmse/verify.hpp"

namespace {

using namespace sstmmse;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<double> parse_grid(const std::string& text) {
    double a = 0, b = 0, step = 1;
    const int fields = std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &b, &step);
    if (fields < 1) throw std::invalid_argument("bad grid: " + text);
    if (fields == 1) return {a};
    if (fields == 2) step = 1.0;
    if (step <= 0 || b < a) throw std::invalid_argument("bad grid: " + text);
    std::vector<double> grid;
    for (double x = a; x <= b + 1e-9; x += step) grid.push_back(x);
    return grid;
}

codes::Mode parse_mode_arg(const std::string& text) {
    const auto mode = codes::parse_mode(text);
    if (!mode) throw std::invalid_argument("mode must be 'general' or 'qli'");
    return *mode;
}

void print_term_stats(const codes::TermStats& stats) {
    std::printf("  m_col      = (%d, %d)\n", stats.m_col[0], stats.m_col[1]);
    std::printf("  m_common   = %d\n", stats.m_common);
    std::printf("  m_excl     = (%d, %d)\n", stats.m_excl[0], stats.m_excl[1]);
    std::printf("  m_v        = %d\n", stats.m_v);
    std::printf("  m_u        = %d\n", stats.m_u);
}

int cmd_analyze(const std::string& selector, const std::string& mode_text) {
    const auto code = codes::parse_code(selector);
    const auto mode = parse_mode_arg(mode_text);
    std::printf("code: %s\n", selector.c_str());
    std::printf("  g1 = %s   (taps %s)\n", code.g1.to_pretty_string().c_str(),
                code.g1.to_string().c_str());
    std::printf("  g2 = %s   (taps %s)\n", code.g2.to_pretty_string().c_str(),
                code.g2.to_string().c_str());
    std::printf("  constraint length nu = %d\n", code.nu);
    if (code.qli_shift)
        std::printf("  quick-look-in: yes, g2 = g1 + D^%d\n", *code.qli_shift);
    else
        std::printf("  quick-look-in: no\n");
    std::printf("inverse encoder (column):\n%s\n", code.inverse.to_string().c_str());
    std::printf("inverse * generator:\n%s\n", codes::product_matrix(code).to_string().c_str());
    std::printf("term statistics (%s mode):\n", codes::to_string(mode).data());
    print_term_stats(codes::term_stats(code, mode));
    return kExitOk;
}

int cmd_sweep(const std::vector<std::string>& selectors, const std::string& mode_text,
              const std::string& grid_text, const std::string& out_path,
              const std::string& precision) {
    report::SweepSpec spec;
    spec.codes = selectors;
    spec.mode = parse_mode_arg(mode_text);
    spec.grid_db = parse_grid(grid_text);
    const bool full = precision == "full";
    const auto rows = spec.codes.size() == 1 ? report::sweep_table(spec)
                                             : report::average_sweep(spec);
    if (out_path.empty()) {
        report::emit_csv(rows, std::cout, full);
    } else {
        const auto bytes = report::emit_csv(rows, std::filesystem::path(out_path), full);
        std::printf("wrote %zu bytes to %s\n", bytes, out_path.c_str());
    }
    return kExitOk;
}

int cmd_figures(int figure, const std::string& out_dir, const std::string& format) {
    const auto grid = report::SweepSpec::default_grid();
    std::vector<report::Series> series;
    std::string title;
    const auto general_rows = [&](const char* name) {
        return report::sweep_table(codes::builtin(name), codes::Mode::general, grid);
    };
    const auto qli_rows = [&](const char* name) {
        return report::sweep_table(codes::builtin(name), codes::Mode::qli, grid);
    };
    switch (figure) {
        case 1: {
            const auto rows = general_rows("c1");
            series.push_back(report::bound_series(rows, "bound_general"));
            series.push_back(report::half_mmse_series(rows, "half_mmse_c1"));
            title = "log(1+rho)/rho vs half mmse, c1 as a general code";
            break;
        }
        case 2: {
            const auto rows = general_rows("c2");
            series.push_back(report::bound_series(rows, "bound_general"));
            series.push_back(report::half_mmse_series(rows, "half_mmse_c2"));
            title = "log(1+rho)/rho vs half mmse, c2 as a general code";
            break;
        }
        case 3: {
            std::vector<codes::CodeSpec> four;
            for (const char* name : {"c1", "c2", "c3", "c4"})
                four.push_back(codes::builtin(name));
            const auto rows = report::average_sweep(four, codes::Mode::general, grid);
            series.push_back(report::bound_series(rows, "bound_general"));
            series.push_back(report::half_mmse_series(rows, "half_mmse_avg_c1_c4"));
            title = "log(1+rho)/rho vs averaged half mmse, c1..c4";
            break;
        }
        case 4: {
            const auto rows = qli_rows("c1");
            series.push_back(report::bound_series(rows, "bound_qli"));
            series.push_back(report::half_mmse_series(rows, "half_mmse_c1_qli"));
            title = "1/(1+rho) vs half mmse, c1 as a QLI code";
            break;
        }
        case 5: {
            const auto rows = qli_rows("c2");
            series.push_back(report::bound_series(rows, "bound_qli"));
            series.push_back(report::half_mmse_series(rows, "half_mmse_c2_qli"));
            title = "1/(1+rho) vs half mmse, c2 as a QLI code";
            break;
        }
        default:
            throw std::invalid_argument("figure number must be 1..5");
    }
    const std::filesystem::path dir = out_dir.empty() ? "figures" : out_dir;
    const auto written = report::emit_plot_data(series, dir);
    for (const auto& path : written) std::printf("wrote %s\n", path.string().c_str());
    if (format == "svg") {
        const auto path = dir / ("figure" + std::to_string(figure) + ".svg");
        std::ofstream file(path);
        file << report::render_svg(series, title);
        if (!file) throw std::runtime_error("cannot write " + path.string());
        std::printf("wrote %s\n", path.string().c_str());
    }
    return kExitOk;
}

int cmd_simulate(const std::string& selector, const std::string& mode_text, double ebno_db,
                 long trials, std::uint64_t seed, int threads, int block_len) {
    const auto code = codes::parse_code(selector);
    const auto mode = parse_mode_arg(mode_text);
    const auto snr = channel::snr_point(ebno_db);
    const auto stats = codes::term_stats(code, mode);
    const auto mp = analytic::mixture_from_stats(stats, snr.epsilon);

    montecarlo::SimConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.mode = mode;
    cfg.threads = threads;
    cfg.block_len = block_len;

    std::printf("code %s, %s mode, Eb/N0 = %.2f dB (rho %.6f, c %.6f, eps %.6f)\n",
                selector.c_str(), codes::to_string(mode).data(), ebno_db, snr.rho, snr.c,
                snr.epsilon);
    std::printf("trials %ld, seed %llu, threads %d\n\n", trials,
                static_cast<unsigned long long>(seed), threads);

    const auto mix = montecarlo::sample_v_joint(code, snr.epsilon, cfg);
    const auto zscore = [](double est, double target, double se) {
        return se > 0 ? (est - target) / se : 0.0;
    };
    std::printf("encoded-block joint distribution (estimate / target / z):\n");
    std::printf("  alpha1 %.6f / %.6f / %+.2f\n", mix.alpha1_hat(), mp.alpha1,
                zscore(mix.alpha1_hat(), mp.alpha1, mix.alpha1_se()));
    std::printf("  alpha2 %.6f / %.6f / %+.2f\n", mix.alpha2_hat(), mp.alpha2,
                zscore(mix.alpha2_hat(), mp.alpha2, mix.alpha2_se()));
    std::printf("  delta  %.6f / %.6f / %+.2f\n\n", mix.delta_hat(), mp.delta,
                zscore(mix.delta_hat(), mp.delta, mix.delta_se()));

    const auto soft = montecarlo::sample_soft_cov(code, snr, cfg);
    const auto cov = analytic::covariance_r(mp, snr.c);
    const double mean1 = (1.0 - 2.0 * mp.alpha1) * snr.c;
    const double mean2 = (1.0 - 2.0 * mp.alpha2) * snr.c;
    std::printf("soft-input mean / covariance (estimate / target / z):\n");
    std::printf("  mean1 %.6f / %.6f / %+.2f\n", soft.mean1, mean1,
                zscore(soft.mean1, mean1, soft.mean1_se));
    std::printf("  mean2 %.6f / %.6f / %+.2f\n", soft.mean2, mean2,
                zscore(soft.mean2, mean2, soft.mean2_se));
    std::printf("  v11   %.6f / %.6f / %+.2f\n", soft.cov.v11, cov.v11,
                zscore(soft.cov.v11, cov.v11, soft.v11_se));
    std::printf("  v22   %.6f / %.6f / %+.2f\n", soft.cov.v22, cov.v22,
                zscore(soft.cov.v22, cov.v22, soft.v22_se));
    std::printf("  v12   %.6f / %.6f / %+.2f\n\n", soft.cov.v12, cov.v12,
                zscore(soft.cov.v12, cov.v12, soft.v12_se));

    montecarlo::SimConfig ber_cfg = cfg;
    ber_cfg.trials = std::max<long>(1, trials / block_len);
    const auto ber = montecarlo::ber_experiment(code, snr, ber_cfg);
    std::printf("decoder comparison on %ld info bits:\n", ber.info_bits);
    std::printf("  conventional Viterbi BER %.3e (%ld errors)\n", ber.ber_conventional,
                ber.errors_conventional);
    std::printf("  SST decoder BER          %.3e (%ld errors)\n", ber.ber_sst,
                ber.errors_sst);
    std::printf("  disagreeing positions %ld, paired z %+.2f\n", ber.diff_positions,
                ber.paired_z());
    return kExitOk;
}

int cmd_verify(const std::string& suite) {
    const auto results = verify::run_suites(suite);
    bool all_ok = true;
    for (const auto& result : results) {
        std::printf("%-18s %s (%ld checks)\n", result.name.c_str(),
                    result.passed() ? "pass" : "FAIL", result.checks);
        for (const auto& violation : result.violations)
            std::printf("    %s\n", violation.c_str());
        all_ok = all_ok && result.passed();
    }
    return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"innovations statistics and SST Viterbi decoding analysis for "
                 "rate-1/2 convolutional codes"};
    app.require_subcommand(1);

    std::string code_mode = "general";
    std::string grid_text = "-10:10:1";
    std::string out_path;
    std::string format = "csv";
    std::string precision = "table";
    std::uint64_t seed = 1;
    long trials = 1000000;
    int threads = 1;
    int block_len = 10000;
    double ebno_db = 0.0;

    auto* analyze = app.add_subcommand("analyze", "print code structure and term counts");
    std::string analyze_code;
    analyze->add_option("--code", analyze_code, "built-in name (c1..c5) or 'g1,g2' taps")
        ->required();
    analyze->add_option("--mode", code_mode, "general or qli");

    auto* sweep = app.add_subcommand("sweep", "emit an SNR sweep table as CSV");
    std::vector<std::string> sweep_codes;
    sweep->add_option("--code", sweep_codes, "code selector(s); several are averaged")
        ->required();
    sweep->add_option("--mode", code_mode, "general or qli");
    sweep->add_option("--grid", grid_text, "dB grid as a:b:step");
    sweep->add_option("--out", out_path, "output file (stdout if omitted)");
    sweep->add_option("--precision", precision, "'table' (4 decimals) or 'full'");

    auto* figures = app.add_subcommand("figures", "emit preconfigured figure data series");
    int figure_number = 0;
    figures->add_option("number", figure_number, "figure number 1..5")->required();
    figures->add_option("--out", out_path, "output directory (default 'figures')");
    figures->add_option("--format", format, "'dat' or 'svg' (adds a chart)");

    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimates with analytic targets");
    std::string simulate_code;
    simulate->add_option("--code", simulate_code, "code selector")->required();
    simulate->add_option("--mode", code_mode, "general or qli");
    simulate->add_option("--snr", ebno_db, "Eb/N0 in dB");
    simulate->add_option("--trials", trials, "sample count");
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_option("--threads", threads, "worker threads");
    simulate->add_option("--block-len", block_len, "info bits per decoded block");

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite (or 'all')");
    std::string suite = "all";
    verify_cmd->add_option("suite", suite, "suite name");
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_code, code_mode);
        if (*sweep) return cmd_sweep(sweep_codes, code_mode, grid_text, out_path, precision);
        if (*figures) return cmd_figures(figure_number, out_path, format);
        if (*simulate)
            return cmd_simulate(simulate_code, code_mode, ebno_db, trials, seed, threads,
                                block_len);
        if (*verify_cmd) {
            if (list_suites) {
                for (const auto& name : verify::suite_names()) std::printf("%s\n", name.c_str());
                return kExitOk;
            }
            return cmd_verify(suite);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
