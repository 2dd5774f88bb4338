#include "sstmmse/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sstmmse/channel.hpp"
#include "sstmmse/inform.hpp"

namespace sstmmse::report {

std::vector<double> SweepSpec::default_grid() {
    std::vector<double> grid;
    for (int db = -10; db <= 10; ++db) grid.push_back(db);
    return grid;
}

namespace {

void check_grid(std::span<const double> grid_db) {
    if (grid_db.empty()) throw std::invalid_argument("sweep: empty grid");
    for (std::size_t i = 1; i < grid_db.size(); ++i)
        if (!(grid_db[i] > grid_db[i - 1]))
            throw std::invalid_argument("sweep: grid must be strictly increasing");
}

double mode_bound(codes::Mode mode, double rho) {
    return mode == codes::Mode::general ? inform::mi_bound_general(rho)
                                        : inform::mi_derivative_bound(rho);
}

}  // namespace

std::vector<TableRow> sweep_table(const codes::CodeSpec& code, codes::Mode mode,
                                  std::span<const double> grid_db) {
    check_grid(grid_db);
    const auto stats = codes::term_stats(code, mode);
    std::vector<TableRow> rows;
    rows.reserve(grid_db.size());
    for (double db : grid_db) {
        const auto snr = channel::snr_point(db);
        const auto mp = analytic::mixture_from_stats(stats, snr.epsilon);
        const auto err = analytic::error_covariance(mp);
        rows.push_back({db, mode_bound(mode, snr.rho), mp.alpha1, err.v11, mp.alpha2,
                        err.v22, mp.delta, 0.5 * analytic::mmse_xi(mp)});
    }
    return rows;
}

std::vector<TableRow> average_sweep(std::span<const codes::CodeSpec> code_list,
                                    codes::Mode mode, std::span<const double> grid_db) {
    if (code_list.empty()) throw std::invalid_argument("average_sweep: no codes");
    check_grid(grid_db);
    std::vector<TableRow> acc;
    for (const auto& code : code_list) {
        const auto rows = sweep_table(code, mode, grid_db);
        if (acc.empty()) {
            acc = rows;
            continue;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            acc[i].alpha1 += rows[i].alpha1;
            acc[i].term1 += rows[i].term1;
            acc[i].alpha2 += rows[i].alpha2;
            acc[i].term2 += rows[i].term2;
            acc[i].delta += rows[i].delta;
            acc[i].half_mmse += rows[i].half_mmse;
        }
    }
    const double n = static_cast<double>(code_list.size());
    for (auto& row : acc) {
        row.alpha1 /= n;
        row.term1 /= n;
        row.alpha2 /= n;
        row.term2 /= n;
        row.delta /= n;
        row.half_mmse /= n;
    }
    return acc;
}

std::vector<TableRow> sweep_table(const SweepSpec& spec) {
    if (spec.codes.size() != 1)
        throw std::invalid_argument("sweep_table: spec must name exactly one code");
    return sweep_table(codes::parse_code(spec.codes.front()), spec.mode, spec.grid_db);
}

std::vector<TableRow> average_sweep(const SweepSpec& spec) {
    std::vector<codes::CodeSpec> code_list;
    code_list.reserve(spec.codes.size());
    for (const auto& selector : spec.codes) code_list.push_back(codes::parse_code(selector));
    return average_sweep(code_list, spec.mode, spec.grid_db);
}

namespace {

std::string format_value(double value, bool full_precision) {
    char buf[48];
    if (full_precision)
        std::snprintf(buf, sizeof buf, "%.17g", value);
    else
        std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

}  // namespace

std::size_t emit_csv(std::span<const TableRow> rows, std::ostream& out, bool full_precision) {
    std::ostringstream body;
    body << "ebno_db,bound,alpha1,term1,alpha2,term2,delta,half_mmse\n";
    for (const auto& row : rows) {
        const double cols[8] = {row.ebno_db, row.bound,  row.alpha1, row.term1,
                                row.alpha2,  row.term2,  row.delta,  row.half_mmse};
        for (int i = 0; i < 8; ++i) {
            if (i) body << ',';
            if (i == 0)
                body << format_value(row.ebno_db, true);  // grid values are exact
            else
                body << format_value(cols[i], full_precision);
        }
        body << '\n';
    }
    const std::string text = body.str();
    out << text;
    if (!out) throw std::runtime_error("emit_csv: write failed");
    return text.size();
}

std::size_t emit_csv(std::span<const TableRow> rows, const std::filesystem::path& path,
                     bool full_precision) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("emit_csv: cannot open " + path.string());
    return emit_csv(rows, file, full_precision);
}

Series bound_series(std::span<const TableRow> rows, std::string name) {
    Series s{std::move(name), {}};
    for (const auto& row : rows) s.points.emplace_back(row.ebno_db, row.bound);
    return s;
}

Series half_mmse_series(std::span<const TableRow> rows, std::string name) {
    Series s{std::move(name), {}};
    for (const auto& row : rows) s.points.emplace_back(row.ebno_db, row.half_mmse);
    return s;
}

std::vector<std::filesystem::path> emit_plot_data(std::span<const Series> series,
                                                  const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    std::filesystem::create_directories(dir);
    for (const auto& s : series) {
        auto path = dir / (s.name + ".dat");
        std::ofstream file(path);
        if (!file) throw std::runtime_error("emit_plot_data: cannot open " + path.string());
        for (auto [x, y] : s.points) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%g %.10g\n", x, y);
            file << buf;
        }
        if (!file) throw std::runtime_error("emit_plot_data: write failed: " + path.string());
        written.push_back(std::move(path));
    }
    return written;
}

std::string render_svg(std::span<const Series> series, const std::string& title) {
    const int width = 640, height = 480, margin = 56;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const auto px = [&](double x) {
        return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    const auto py = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n"
        << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
        << width - 2 * margin << "\" height=\"" << height - 2 * margin
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%g", xmin);
    svg << "<text x=\"" << margin << "\" y=\"" << height - margin + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%g", xmax);
    svg << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 18
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
        << "</text>\n";
    std::snprintf(buf, sizeof buf, "%g", ymin);
    svg << "<text x=\"" << margin - 6 << "\" y=\"" << height - margin
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
        << "</text>\n";
    std::snprintf(buf, sizeof buf, "%g", ymax);
    svg << "<text x=\"" << margin - 6 << "\" y=\"" << margin + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
        << "</text>\n";
    int color_idx = 0;
    int legend_y = margin + 16;
    for (const auto& s : series) {
        const char* color = colors[color_idx++ % 6];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : s.points) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
            svg << buf;
        }
        svg << "\"/>\n"
            << "<text x=\"" << width - margin - 6 << "\" y=\"" << legend_y
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << color << "\">" << s.name << "</text>\n";
        legend_y += 16;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sstmmse::report
