#include "sstmmse/inform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sstmmse/numeric.hpp"

namespace sstmmse::inform {

using numeric::norm_pdf;
using numeric::simpson;

double mi_bound_general(double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("mi_bound_general: rho must be > 0");
    return std::log1p(rho) / rho;
}

double mi_derivative_bound(double rho) {
    if (!(rho >= 0.0)) throw std::invalid_argument("mi_derivative_bound: rho must be >= 0");
    return 1.0 / (1.0 + rho);
}

double scalar_binary_mmse(double rho) {
    if (!(rho >= 0.0)) throw std::invalid_argument("scalar_binary_mmse: rho must be >= 0");
    if (rho == 0.0) return 1.0;
    const double root = std::sqrt(rho);
    // Gaussian weight is negligible beyond |y| = 10; integrand is smooth.
    const auto f = [&](double y) { return norm_pdf(y) * std::tanh(rho - root * y); };
    // at high rho the true value sits below the quadrature's accuracy and
    // 1 - integral is rounding residue; clamp it into range
    return std::max(0.0, 1.0 - simpson(f, -10.0, 10.0, 4096));
}

double tanh_piecewise(double y) {
    if (!(y >= 0.0)) throw std::invalid_argument("tanh_piecewise: y must be >= 0");
    if (y <= 0.5) return y;
    if (y <= 1.0) return 0.5 * y + 0.25;
    if (y <= 1.5) return 0.3 * y + 0.45;
    if (y <= 3.0) return y / 15.0 + 0.8;
    return 1.0;
}

namespace {

// integral over [0, inf) of N(y; mean, rho) * g(y), where g is smooth on each
// cell between the supplied breakpoints; the Gaussian tail is truncated at
// mean + 10 sqrt(rho)
template <class G>
double half_line_gaussian(double mean, double rho, G&& g, const std::vector<double>& breaks) {
    const double sigma = std::sqrt(rho);
    const double upper = mean + 10.0 * sigma;
    if (upper <= 0.0) return 0.0;
    std::vector<double> cuts{0.0};
    for (double b : breaks)
        if (b > 0.0 && b < upper) cuts.push_back(b);
    cuts.push_back(upper);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        if (hi - lo <= 0.0) continue;
        total += simpson(
            [&](double y) { return norm_pdf((y - mean) / sigma) / sigma * g(y); }, lo, hi, 512);
    }
    return total;
}

GapResult gap_with(double rho, double (*tanh_fn)(double)) {
    if (!(rho > 0.0)) throw std::invalid_argument("tanh_gap: rho must be > 0");
    const std::vector<double> breaks{0.5, 1.0, 1.5, 3.0};
    GapResult out;
    out.i_plus = half_line_gaussian(rho, rho, tanh_fn, breaks);
    out.i_minus = half_line_gaussian(-rho, rho, tanh_fn, breaks);
    out.gap = out.i_plus - out.i_minus;
    return out;
}

double tanh_exact(double y) { return std::tanh(y); }

}  // namespace

GapResult tanh_gap(double rho) { return gap_with(rho, &tanh_piecewise); }

GapResult tanh_gap_exact(double rho) { return gap_with(rho, &tanh_exact); }

MiPoint mi_point(double rho) {
    return {rho, mi_bound_general(rho), mi_derivative_bound(rho), scalar_binary_mmse(rho)};
}

}  // namespace sstmmse::inform
