#include "sstmmse/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "sstmmse/numeric.hpp"

namespace sstmmse::analytic {

double parity_prob(int m, double epsilon) {
    if (m < 0) throw std::invalid_argument("parity_prob: negative term count");
    if (!(epsilon >= 0.0 && epsilon <= 0.5))
        throw std::invalid_argument("parity_prob: epsilon outside [0, 1/2]");
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * epsilon, m));
}

MixtureParams mixture_from_stats(const codes::TermStats& stats, double epsilon) {
    MixtureParams mp;
    mp.p = parity_prob(stats.m_common, epsilon);
    mp.s = parity_prob(stats.m_excl[0], epsilon);
    mp.t = parity_prob(stats.m_excl[1], epsilon);
    mp.alpha1 = parity_prob(stats.m_col[0], epsilon);
    mp.alpha2 = parity_prob(stats.m_col[1], epsilon);
    mp.delta = mp.p * (1.0 - mp.p) * (1.0 - 2.0 * mp.s) * (1.0 - 2.0 * mp.t);
    mp.a11 = mp.delta + mp.alpha1 * mp.alpha2;
    mp.a01 = mp.alpha2 - mp.a11;
    mp.a10 = mp.alpha1 - mp.a11;
    mp.a00 = 1.0 - mp.alpha1 - mp.alpha2 + mp.a11;
    return mp;
}

double joint_density(const MixtureParams& params, double c, double x, double y) {
    using numeric::norm_pdf;
    const double qxm = norm_pdf(x - c), qxp = norm_pdf(x + c);
    const double qym = norm_pdf(y - c), qyp = norm_pdf(y + c);
    return params.a00 * qxm * qym + params.a01 * qxm * qyp +
           params.a10 * qxp * qym + params.a11 * qxp * qyp;
}

Cov2 covariance_r(const MixtureParams& params, double c) {
    const double c2 = c * c;
    return {1.0 + 4.0 * c2 * params.alpha1 * (1.0 - params.alpha1),
            1.0 + 4.0 * c2 * params.alpha2 * (1.0 - params.alpha2),
            4.0 * c2 * params.delta};
}

Cov2 error_covariance(const MixtureParams& params) {
    return {4.0 * params.alpha1 * (1.0 - params.alpha1),
            4.0 * params.alpha2 * (1.0 - params.alpha2),
            4.0 * params.delta};
}

double mmse_xi(const MixtureParams& params) {
    const Cov2 err = error_covariance(params);
    return err.v11 + err.v22 - 2.0 * err.v12;
}

double correlation_mu(const MixtureParams& params) {
    const Cov2 err = error_covariance(params);
    const double denom = std::sqrt(err.v11 * err.v22);
    return denom == 0.0 ? 0.0 : err.v12 / denom;
}

}  // namespace sstmmse::analytic
