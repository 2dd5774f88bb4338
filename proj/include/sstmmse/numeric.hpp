// Small numerics shared across modules: Gaussian pdf and composite Simpson.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sstmmse::numeric {

inline double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// Composite Simpson on [a, b] with n subintervals (n even, >= 2).
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n < 2 || (n % 2) != 0) throw std::invalid_argument("simpson: n must be even and >= 2");
    if (a == b) return 0.0;
    const double h = (b - a) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(a + i * h);
    for (int i = 2; i < n; i += 2) even += f(a + i * h);
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace sstmmse::numeric
