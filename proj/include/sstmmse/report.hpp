// SNR sweeps: one row per Eb/N0 grid point pairing the mode's mutual-
// information reference curve with the innovations MMSE pipeline
// (epsilon -> term stats -> mixture -> xi), plus CSV and plot-data emission.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sstmmse/analytic.hpp"
#include "sstmmse/codes.hpp"

namespace sstmmse::report {

struct TableRow {
    double ebno_db;
    double bound;      // log(1+rho)/rho in general mode, 1/(1+rho) in QLI mode
    double alpha1;
    double term1;      // 4 alpha1 (1 - alpha1)
    double alpha2;
    double term2;      // 4 alpha2 (1 - alpha2)
    double delta;
    double half_mmse;  // xi / 2
};

struct SweepSpec {
    std::vector<std::string> codes;  // selectors, see codes::parse_code
    codes::Mode mode = codes::Mode::general;
    std::vector<double> grid_db;     // strictly increasing, nonempty

    static std::vector<double> default_grid();  // -10..10 dB step 1
};

std::vector<TableRow> sweep_table(const codes::CodeSpec& code, codes::Mode mode,
                                  std::span<const double> grid_db);
std::vector<TableRow> sweep_table(const SweepSpec& spec);  // exactly one code

// Per grid point, the arithmetic mean of half_mmse over the codes; the
// remaining columns are averaged the same way, the bound is mode-only and
// unchanged.
std::vector<TableRow> average_sweep(std::span<const codes::CodeSpec> code_list,
                                    codes::Mode mode, std::span<const double> grid_db);
std::vector<TableRow> average_sweep(const SweepSpec& spec);

// Writes "ebno_db,bound,alpha1,term1,alpha2,term2,delta,half_mmse" plus one
// line per row; 4 decimals unless full_precision. Returns bytes written.
std::size_t emit_csv(std::span<const TableRow> rows, std::ostream& out,
                     bool full_precision = false);
std::size_t emit_csv(std::span<const TableRow> rows, const std::filesystem::path& path,
                     bool full_precision = false);

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

Series bound_series(std::span<const TableRow> rows, std::string name);
Series half_mmse_series(std::span<const TableRow> rows, std::string name);

// Writes <name>.dat ("x y" pairs) per series into the directory.
// Returns the file paths written.
std::vector<std::filesystem::path> emit_plot_data(std::span<const Series> series,
                                                  const std::filesystem::path& dir);

// Minimal self-contained SVG line chart of the series.
std::string render_svg(std::span<const Series> series, const std::string& title);

}  // namespace sstmmse::report
