#pragma once

#include <any>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>

#include "fracsolve/error.hpp"
#include "fracsolve/types.hpp"

namespace fracsolve {

/// Right-hand side F(t, X, params) of the system D^beta X = F.
using RhsFn = std::function<Vec(double, const Vec&, const std::any&)>;

/// Jacobian dF/dX as an MxM matrix (1x1 for scalar problems).
using JacobianFn = std::function<Matrix(double, const Vec&, const std::any&)>;

/// Initial-value problem for a system of Caputo fractional equations.
///
/// x0 has ceil(max(beta)) rows; row j holds the j-th derivative initial
/// values, so a single row for orders <= 1 and extra rows for a
/// one-dimensional problem with order above one.
struct FdeProblem {
    RhsFn rhs;
    JacobianFn jacobian;  // empty when the problem is solved explicitly
    std::pair<double, double> t_span{0.0, 1.0};
    Matrix x0;   // m x M
    Vec beta;    // length M, entries > 0
    std::any params;

    std::size_t dim() const noexcept { return beta.size(); }
};

struct SolverConfig {
    double h = 0x1p-6;  // step size
    int nc = 2;         // corrections per step (PC)
    double tol = 1e-6;  // iteration/correction tolerance
    int itmax = 100;    // Newton iteration cap (NR)
};

enum class Method { PC, NR };

inline const char* method_name(Method m) { return m == Method::PC ? "pc" : "nr"; }

struct Diagnostics {
    Method method = Method::PC;
    std::size_t total_iterations = 0;  // corrections (PC) or Newton updates (NR)
    double wall_seconds = 0.0;
    bool hit_itmax = false;        // some step stopped on itmax instead of tol
    bool span_truncated = false;   // (T - t0)/h was not integral
    double t_final = 0.0;          // last grid point actually reached
};

struct Solution {
    Vec t;         // t_r = t0 + r h, r = 0..N
    Matrix x;      // (N+1) x M, row r is X(t_r)
    Diagnostics diagnostics;
};

/// Rows required in x0: smallest integer >= max(beta).
inline std::size_t required_taylor_rows(const Vec& beta) {
    double mx = 0.0;
    for (double b : beta) mx = std::max(mx, b);
    return static_cast<std::size_t>(std::ceil(mx));
}

/// Checks the FdeProblem invariants and returns the problem unchanged.
/// Also probes rhs once at (t0, x0 row 0) to confirm the output length.
inline const FdeProblem& validate_problem(const FdeProblem& p) {
    const std::size_t m_dim = p.dim();
    if (m_dim == 0) raise(Errc::bad_config, "empty order vector");
    if (!p.rhs) raise(Errc::bad_config, "rhs callback required");
    for (double b : p.beta) {
        if (!(b > 0.0)) raise(Errc::unsupported_order, "orders must be positive");
        if (m_dim > 1 && b > 1.0)
            raise(Errc::unsupported_order, "orders above one are limited to scalar problems");
    }
    if (!(p.t_span.first < p.t_span.second)) raise(Errc::bad_span, "t0 must be below T");
    const std::size_t m_rows = required_taylor_rows(p.beta);
    if (p.x0.rows() != m_rows || p.x0.cols() != m_dim)
        raise(Errc::bad_initial_shape, "x0 must have ceil(max(beta)) rows and M columns");
    const Vec probe = p.rhs(p.t_span.first, p.x0.row(0), p.params);
    if (probe.size() != m_dim)
        raise(Errc::dimension_mismatch, "rhs output length differs from the system dimension");
    return p;
}

/// Uniform grid over [t0, T]: N = floor((T - t0)/h) with a small relative
/// slack so exact divisions are not lost to rounding. The grid stops at the
/// last point <= T; a non-integral span is reported via Diagnostics.
inline std::pair<std::size_t, Vec> grid_points(std::pair<double, double> t_span, double h) {
    if (!(h > 0.0)) raise(Errc::bad_config, "step size must be positive");
    if (!(t_span.first < t_span.second)) raise(Errc::bad_span, "t0 must be below T");
    const double q = (t_span.second - t_span.first) / h;
    const double slack = 1e-12 * std::max(1.0, q);
    const auto n = static_cast<std::size_t>(std::floor(q + slack));
    Vec grid(n + 1);
    for (std::size_t r = 0; r <= n; ++r) grid[r] = t_span.first + static_cast<double>(r) * h;
    return {n, std::move(grid)};
}

}  // namespace fracsolve
