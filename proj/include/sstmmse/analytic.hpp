// Closed-form distribution of the soft input to the main decoder.
//
// Everything here is driven by one primitive: the probability that an XOR of
// m i.i.d. Bernoulli(eps) errors equals 1. From the term statistics of a code
// it yields the marginals (alpha1, alpha2), the joint cell probabilities, the
// correlation surplus delta (through the common/exclusive decomposition
// p, s, t), the 2x2 covariance of the soft input, and the correlation-
// corrected mean-square error xi = 4a1(1-a1) + 4a2(1-a2) - 8 delta.
//
// In QLI mode the same quantities are conventionally written beta1, beta2,
// delta'; the structure is identical, only the term statistics change.

#pragma once

#include "sstmmse/codes.hpp"

namespace sstmmse::analytic {

// P(XOR of m i.i.d. Bernoulli(eps) = 1) = (1 - (1-2 eps)^m) / 2.
// Requires m >= 0 and eps in [0, 1/2].
double parity_prob(int m, double epsilon);

struct MixtureParams {
    double alpha1, alpha2;          // marginal P(v_l = 1)
    double a00, a01, a10, a11;      // joint cell probabilities
    double delta;                   // a11 - alpha1*alpha2 (>= 0)
    double p, s, t;                 // common / exclusive-1 / exclusive-2 parity probs
};

MixtureParams mixture_from_stats(const codes::TermStats& stats, double epsilon);

// Four-component Gaussian mixture density of the soft input pair, unit
// variance components centered at (+-c, +-c).
double joint_density(const MixtureParams& params, double c, double x, double y);

struct Cov2 {
    double v11, v22, v12;
    double det() const { return v11 * v22 - v12 * v12; }
};

// Covariance of the soft input pair: diag 1 + 4c^2 a(1-a), off 4c^2 delta.
Cov2 covariance_r(const MixtureParams& params, double c);

// Covariance of the estimation error of the antipodal input:
// (covariance_r - I) / c^2, i.e. diag 4a(1-a), off 4 delta.
Cov2 error_covariance(const MixtureParams& params);

// Correlation-corrected MMSE xi = 4a1(1-a1) + 4a2(1-a2) - 8 delta. This is
// the linear-estimate value; the true conditional-expectation error is no
// larger.
double mmse_xi(const MixtureParams& params);

// Correlation coefficient delta-based: v12 / sqrt(v11*v22) of the error
// covariance; 0/0 (noiseless) reported as 0.
double correlation_mu(const MixtureParams& params);

}  // namespace sstmmse::analytic
