#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fracsolve/error.hpp"
#include "fracsolve/special_functions.hpp"
#include "fracsolve/types.hpp"

namespace fracsolve {

/// Predictor (PI rectangular) weights b[r] = ((r+1)^beta - r^beta) / Gamma(beta+1),
/// r = 0..n-1.
inline Vec predictor_weights(double beta, std::size_t n) {
    if (!(beta > 0.0)) raise(Errc::unsupported_order, "beta must be positive");
    const double g1 = gamma(beta + 1.0);
    Vec b(n);
    double prev = 0.0;  // r^beta
    for (std::size_t r = 0; r < n; ++r) {
        const double next = std::pow(static_cast<double>(r + 1), beta);
        b[r] = (next - prev) / g1;
        prev = next;
    }
    return b;
}

/// Corrector (PI trapezoidal) convolution weights:
///   d[0] = 1/Gamma(beta+2),
///   d[r] = ((r-1)^(beta+1) - 2 r^(beta+1) + (r+1)^(beta+1)) / Gamma(beta+2).
inline Vec corrector_weights(double beta, std::size_t n) {
    if (!(beta > 0.0)) raise(Errc::unsupported_order, "beta must be positive");
    const double g2 = gamma(beta + 2.0);
    Vec d(n);
    if (n == 0) return d;
    d[0] = 1.0 / g2;
    const double p = beta + 1.0;
    double below = 0.0;             // (r-1)^(beta+1)
    double mid = std::pow(1.0, p);  // r^(beta+1)
    for (std::size_t r = 1; r < n; ++r) {
        const double above = std::pow(static_cast<double>(r + 1), p);
        d[r] = (below - 2.0 * mid + above) / g2;
        below = mid;
        mid = above;
    }
    return d;
}

/// First-node corrector weight
///   c_n = ((n-1)^(beta+1) - n^beta (n - beta - 1)) / Gamma(beta+2),  n >= 1.
inline double first_corrector_weight(double beta, std::size_t n) {
    if (!(beta > 0.0)) raise(Errc::unsupported_order, "beta must be positive");
    if (n < 1) raise(Errc::index_error, "first_corrector_weight needs n >= 1");
    const double nd = static_cast<double>(n);
    return (std::pow(nd - 1.0, beta + 1.0) - std::pow(nd, beta) * (nd - beta - 1.0)) /
           gamma(beta + 2.0);
}

/// c[n] for n = 1..n_max (index 0 unused).
inline Vec first_corrector_weights(double beta, std::size_t n_max) {
    Vec c(n_max + 1, 0.0);
    for (std::size_t n = 1; n <= n_max; ++n) c[n] = first_corrector_weight(beta, n);
    return c;
}

/// Taylor polynomial of the initial values:
/// component i is sum_{k=0}^{m-1} (t - t0)^k / k! * x0(k, i).
inline Vec taylor_term(const Matrix& x0, double t0, double t) {
    const std::size_t m = x0.rows();
    const std::size_t dims = x0.cols();
    Vec out(dims, 0.0);
    double factor = 1.0;  // (t - t0)^k / k!
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < dims; ++i) out[i] += factor * x0(k, i);
        factor *= (t - t0) / static_cast<double>(k + 1);
    }
    return out;
}

/// Per-dimension quadrature weight tables, precomputed once per solve.
/// a0[i] = h^beta_i * d[i][0] is the implicit coefficient multiplying the
/// current step's rhs value in both the corrector and the Newton scheme.
struct PiWeights {
    std::vector<Vec> b;  // b[i][r], r = 0..N-1
    std::vector<Vec> d;  // d[i][r], r = 0..N-1
    std::vector<Vec> c;  // c[i][n], n = 1..N (index 0 unused)
    Vec a0;              // a0[i] = h^beta_i / Gamma(beta_i + 2)
    Vec h_pow_beta;      // h^beta_i

    static PiWeights build(const Vec& beta, double h, std::size_t n_steps) {
        if (!(h > 0.0)) raise(Errc::bad_config, "step size must be positive");
        PiWeights w;
        const std::size_t dims = beta.size();
        w.b.resize(dims);
        w.d.resize(dims);
        w.c.resize(dims);
        w.a0.resize(dims);
        w.h_pow_beta.resize(dims);
        for (std::size_t i = 0; i < dims; ++i) {
            w.b[i] = predictor_weights(beta[i], n_steps);
            w.d[i] = corrector_weights(beta[i], std::max<std::size_t>(n_steps, 1));
            w.c[i] = first_corrector_weights(beta[i], n_steps);
            w.h_pow_beta[i] = std::pow(h, beta[i]);
            w.a0[i] = w.h_pow_beta[i] * w.d[i][0];
        }
        return w;
    }
};

}  // namespace fracsolve
