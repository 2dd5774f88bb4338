// Mutual-information reference curves and the scalar binary-input MMSE.
//
// Two Gaussian-input curves bound the per-branch mutual information of the
// signal model z = sqrt(rho) x + w: log(1+rho)/rho (information normalized by
// rho, the filtering/prediction side) and 1/(1+rho) (its derivative, the
// smoothing side). The binary-input counterpart of the latter is
// 1 - integral of phi(y) tanh(rho - sqrt(rho) y), evaluated numerically.
// tanh_piecewise is the five-segment linear stand-in used by the half-line
// form of the same integral; both variants are exposed.

#pragma once

namespace sstmmse::inform {

// log(1+rho)/rho, natural log. Requires rho > 0.
double mi_bound_general(double rho);

// 1/(1+rho). Requires rho >= 0.
double mi_derivative_bound(double rho);

// 1 - integral phi(y) tanh(rho - sqrt(rho) y) dy with exact tanh,
// composite Simpson, absolute error below 1e-8. Requires rho >= 0.
double scalar_binary_mmse(double rho);

// Five-segment linear approximation of tanh on [0, inf):
// y on [0,1/2], y/2+1/4 on [1/2,1], 3y/10+9/20 on [1,3/2],
// y/15+4/5 on [3/2,3], and 1 beyond. Requires y >= 0.
double tanh_piecewise(double y);

struct GapResult {
    double i_plus;   // integral over [0,inf) of N(y; rho, rho)  * tanh(y)
    double i_minus;  // integral over [0,inf) of N(y; -rho, rho) * tanh(y)
    double gap;      // i_plus - i_minus, to compare against rho/(1+rho)
};

// Half-line Gaussian-weighted tanh integrals with the piecewise-linear tanh.
// Requires rho > 0.
GapResult tanh_gap(double rho);

// Same integrals with exact tanh; gap then equals 1 - scalar_binary_mmse.
GapResult tanh_gap_exact(double rho);

struct MiPoint {
    double rho;
    double bound_general;       // log(1+rho)/rho
    double bound_qli;           // 1/(1+rho)
    double scalar_binary_mmse;  // <= bound_qli
};

MiPoint mi_point(double rho);

}  // namespace sstmmse::inform
