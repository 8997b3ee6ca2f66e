#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <mpfr.h>

#include "fracsolve/error.hpp"

namespace fracsolve {

/// Controls the extended-precision Mittag-Leffler series evaluation.
struct MlSeriesConfig {
    int digits = 200;      // working precision, decimal digits (>= 50)
    int term_cap = 10000;  // maximum number of series terms (>= 1000)
};

/// Gamma function for positive real arguments (Lanczos approximation,
/// g = 7, 9 coefficients). Arguments at or below zero are rejected; the
/// solvers only ever need beta+1, beta+2 and model constants.
inline double gamma(double x) {
    if (!(x > 0.0)) raise(Errc::domain_error, "gamma requires a positive argument");
    // Gamma(x) = Gamma(x+1)/x keeps the Lanczos sum in its sweet spot.
    if (x < 0.5) return gamma(x + 1.0) / x;

    static constexpr double kCoef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
    };
    constexpr double kG = 7.0;
    const double z = x - 1.0;
    double acc = kCoef[0];
    for (int i = 1; i < 9; ++i) acc += kCoef[i] / (z + i);
    const double t = z + kG + 0.5;
    constexpr double kSqrt2Pi = 2.5066282746310002;
    return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

namespace detail {

/// Minimal RAII handle for an MPFR scalar.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~BigFloat() { mpfr_clear(v); }
    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;
    mpfr_t v;
};

}  // namespace detail

/// Mittag-Leffler function E_beta(z) = sum_k z^k / Gamma(beta k + 1),
/// summed in extended working precision so the large cancellations at
/// strongly negative arguments do not contaminate the returned double.
/// The series stops once |term| < 1e-40 * |partial sum|.
inline double mittag_leffler(double beta, double z, const MlSeriesConfig& cfg = {}) {
    if (!(beta > 0.0)) raise(Errc::domain_error, "mittag_leffler requires beta > 0");
    if (cfg.digits < 50) raise(Errc::bad_config, "MlSeriesConfig.digits must be >= 50");
    if (cfg.term_cap < 1000) raise(Errc::bad_config, "MlSeriesConfig.term_cap must be >= 1000");

    const auto prec = static_cast<mpfr_prec_t>(std::ceil(cfg.digits * 3.3219280948873623) + 64);
    detail::BigFloat sum(prec), term(prec), zpow(prec), arg(prec), gam(prec), thresh(prec);
    mpfr_set_zero(sum.v, 1);
    mpfr_set_ui(zpow.v, 1, MPFR_RNDN);  // z^k, starting at k = 0

    bool settled = false;
    for (int k = 0; k < cfg.term_cap; ++k) {
        mpfr_set_d(arg.v, beta, MPFR_RNDN);
        mpfr_mul_ui(arg.v, arg.v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add_ui(arg.v, arg.v, 1, MPFR_RNDN);
        mpfr_gamma(gam.v, arg.v, MPFR_RNDN);
        mpfr_div(term.v, zpow.v, gam.v, MPFR_RNDN);
        mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);

        if (k >= 1) {
            mpfr_abs(thresh.v, sum.v, MPFR_RNDN);
            mpfr_mul_d(thresh.v, thresh.v, 1e-40, MPFR_RNDN);
            mpfr_abs(term.v, term.v, MPFR_RNDN);
            if (mpfr_cmp(term.v, thresh.v) < 0) {
                settled = true;
                break;
            }
        }
        mpfr_mul_d(zpow.v, zpow.v, z, MPFR_RNDN);
    }
    if (!settled)
        raise(Errc::convergence_error,
              "Mittag-Leffler series did not settle within the term cap");
    return mpfr_get_d(sum.v, MPFR_RNDN);
}

}  // namespace fracsolve
