#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fracsolve/convolution.hpp"
#include "fracsolve/linalg.hpp"
#include "fracsolve/problem.hpp"
#include "fracsolve/weights.hpp"

namespace fracsolve {

struct NewtonResult {
    Vec x;
    std::size_t iterations = 0;
    bool converged = false;
};

/// One implicit step solved by the modified Newton-Raphson iteration
///   x <- x - [I - diag(a0) J]^{-1} (x - psi - a0 .* F(x)),
/// with the Jacobian frozen at x_init and factorized once. Returns after the
/// update's infinity norm drops below tol, or after itmax updates (flagged).
inline NewtonResult newton_iterate(const Vec& psi, const Vec& a0,
                                   const std::function<Vec(const Vec&)>& f_eval,
                                   const Matrix& j_frozen, const Vec& x_init, double tol,
                                   int itmax) {
    const std::size_t dims = psi.size();
    Matrix a = Matrix::identity(dims);
    for (std::size_t r = 0; r < dims; ++r)
        for (std::size_t c = 0; c < dims; ++c) a(r, c) -= a0[r] * j_frozen(r, c);
    const LuFactor lu(std::move(a));

    NewtonResult res{x_init, 0, false};
    Vec resid(dims);
    while (true) {
        const Vec f = f_eval(res.x);
        for (std::size_t i = 0; i < dims; ++i) resid[i] = res.x[i] - psi[i] - a0[i] * f[i];
        const Vec delta = lu.solve(resid);
        double dn = 0.0;
        for (std::size_t i = 0; i < dims; ++i) {
            dn = std::max(dn, std::abs(delta[i]));
            res.x[i] -= delta[i];
        }
        if (dn < tol) {
            res.converged = true;
            break;
        }
        ++res.iterations;
        if (res.iterations >= static_cast<std::size_t>(itmax)) break;
    }
    return res;
}

namespace detail {

inline void check_config(const SolverConfig& cfg) {
    if (!(cfg.h > 0.0)) raise(Errc::bad_config, "h must be positive");
    if (cfg.nc < 1) raise(Errc::bad_config, "nc must be at least 1");
    if (!(cfg.tol > 0.0)) raise(Errc::bad_config, "tol must be positive");
    if (cfg.itmax < 1) raise(Errc::bad_config, "itmax must be at least 1");
}

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Shared stepping state: grid, weight tables, per-dimension rhs history
/// and the history convolvers for one weight family per dimension.
struct StepContext {
    const FdeProblem& problem;
    std::size_t dims;
    double h;
    std::size_t n_steps;
    Vec grid;
    PiWeights weights;
    Matrix x;                                   // trajectory, (N+1) x M
    std::vector<std::vector<double>> f_cols;    // f_cols[i][j] = f_i(t_j, X_j)
    Vec g0;                                     // rhs at the initial node
    bool taylor_const;

    StepContext(const FdeProblem& p, const SolverConfig& cfg)
        : problem(p), dims(p.dim()), h(cfg.h) {
        auto [n, g] = grid_points(p.t_span, cfg.h);
        n_steps = n;
        grid = std::move(g);
        weights = PiWeights::build(p.beta, cfg.h, n_steps);
        x = Matrix(n_steps + 1, dims);
        x.set_row(0, p.x0.row(0));
        taylor_const = p.x0.rows() == 1;
        f_cols.assign(dims, {});
        for (auto& col : f_cols) col.reserve(n_steps + 1);
        g0 = eval_rhs(grid[0], p.x0.row(0));
        if (!all_finite(g0)) throw DivergedError(0, "non-finite rhs at the initial node");
        push_f(g0);
    }

    Vec eval_rhs(double t, const Vec& state) const {
        Vec f = problem.rhs(t, state, problem.params);
        if (f.size() != dims)
            raise(Errc::dimension_mismatch, "rhs output length differs from the system dimension");
        return f;
    }

    void push_f(const Vec& f) {
        for (std::size_t i = 0; i < dims; ++i) f_cols[i].push_back(f[i]);
    }

    Vec taylor_at(double t) const {
        if (taylor_const) return problem.x0.row(0);
        return taylor_term(problem.x0, grid[0], t);
    }

    void accept(std::size_t n, const Vec& state) {
        if (!all_finite(state))
            throw DivergedError(n, "non-finite state at step " + std::to_string(n));
        x.set_row(n, state);
        const Vec f = eval_rhs(grid[n], state);
        if (!all_finite(f))
            throw DivergedError(n, "non-finite rhs at step " + std::to_string(n));
        push_f(f);
    }

    Diagnostics finish(Method method, std::size_t iterations, bool hit_itmax,
                       std::chrono::steady_clock::time_point start) const {
        Diagnostics d;
        d.method = method;
        d.total_iterations = iterations;
        d.hit_itmax = hit_itmax;
        d.t_final = grid.back();
        d.span_truncated = (problem.t_span.second - grid.back()) > 1e-9 * h;
        d.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return d;
    }
};

}  // namespace detail

/// Predictor-corrector scheme: explicit rectangular-rule estimate refined
/// by trapezoidal corrections. nc counts solution stages per step, so the
/// default nc = 2 performs the classic predict-evaluate-correct pass with
/// one correction (matching the reference routines this scheme follows);
/// nc = 1 accepts the bare predictor. For nc > 10 corrections stop early
/// once the infinity norm of successive iterates drops below tol. A present
/// Jacobian is ignored.
inline Solution solve_pc(const FdeProblem& problem, const SolverConfig& config, ConvPlan& plan) {
    const auto start = std::chrono::steady_clock::now();
    validate_problem(problem);
    detail::check_config(config);
    plan.validate();
    plan.reset_solve_state();

    detail::StepContext ctx(problem, config);
    const std::size_t dims = ctx.dims;
    const PiWeights& w = ctx.weights;

    std::vector<LaggedConvolver> pred;
    std::vector<LaggedConvolver> hist;
    pred.reserve(dims);
    hist.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i) {
        pred.emplace_back(plan, w.b[i], ctx.f_cols[i], 0, 1, ctx.n_steps,
                          static_cast<int>(i));
        hist.emplace_back(plan, w.d[i], ctx.f_cols[i], 1, 0, ctx.n_steps,
                          static_cast<int>(dims + i));
    }

    const bool tol_capped = config.nc > 10;
    const int max_corrections = config.nc - 1;
    std::size_t corrections = 0;
    Vec base(dims), xcur(dims);
    for (std::size_t n = 1; n <= ctx.n_steps; ++n) {
        const double tn = ctx.grid[n];
        const Vec taylor = ctx.taylor_at(tn);
        for (std::size_t i = 0; i < dims; ++i) {
            base[i] = taylor[i] +
                      w.h_pow_beta[i] * (w.c[i][n] * ctx.g0[i] + hist[i].sum_at(n));
            xcur[i] = taylor[i] + w.h_pow_beta[i] * pred[i].sum_at(n);
        }
        for (int mu = 1; mu <= max_corrections; ++mu) {
            const Vec f = ctx.eval_rhs(tn, xcur);
            double diff = 0.0;
            for (std::size_t i = 0; i < dims; ++i) {
                const double next = base[i] + w.a0[i] * f[i];
                diff = std::max(diff, std::abs(next - xcur[i]));
                xcur[i] = next;
            }
            ++corrections;
            if (tol_capped && diff < config.tol) break;
        }
        ctx.accept(n, xcur);
    }

    Solution sol;
    sol.diagnostics = ctx.finish(Method::PC, corrections, false, start);
    sol.t = std::move(ctx.grid);
    sol.x = std::move(ctx.x);
    return sol;
}

/// Implicit scheme driven by the modified Newton-Raphson iteration with the
/// step's Jacobian frozen at the previous accepted state. Requires a
/// Jacobian callback.
inline Solution solve_nr(const FdeProblem& problem, const SolverConfig& config, ConvPlan& plan) {
    const auto start = std::chrono::steady_clock::now();
    validate_problem(problem);
    detail::check_config(config);
    plan.validate();
    plan.reset_solve_state();
    if (!problem.jacobian)
        raise(Errc::missing_jacobian, "the Newton-Raphson scheme needs a Jacobian callback");

    detail::StepContext ctx(problem, config);
    const std::size_t dims = ctx.dims;
    const PiWeights& w = ctx.weights;

    std::vector<LaggedConvolver> hist;
    hist.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i)
        hist.emplace_back(plan, w.d[i], ctx.f_cols[i], 1, 0, ctx.n_steps, static_cast<int>(i));

    std::size_t iterations = 0;
    bool hit_itmax = false;
    Vec psi(dims);
    for (std::size_t n = 1; n <= ctx.n_steps; ++n) {
        const double tn = ctx.grid[n];
        const Vec taylor = ctx.taylor_at(tn);
        for (std::size_t i = 0; i < dims; ++i)
            psi[i] = taylor[i] + w.h_pow_beta[i] * (w.c[i][n] * ctx.g0[i] + hist[i].sum_at(n));

        const Vec x_prev = ctx.x.row(n - 1);
        const Matrix jac = problem.jacobian(tn, x_prev, problem.params);
        if (jac.rows() != dims || jac.cols() != dims)
            raise(Errc::dimension_mismatch, "Jacobian must be an MxM matrix");

        const auto f_eval = [&](const Vec& state) { return ctx.eval_rhs(tn, state); };
        NewtonResult res =
            newton_iterate(psi, w.a0, f_eval, jac, x_prev, config.tol, config.itmax);
        iterations += res.iterations;
        if (!res.converged) hit_itmax = true;
        ctx.accept(n, res.x);
    }

    Solution sol;
    sol.diagnostics = ctx.finish(Method::NR, iterations, hit_itmax, start);
    sol.t = std::move(ctx.grid);
    sol.x = std::move(ctx.x);
    return sol;
}

inline Solution solve_pc(const FdeProblem& problem, const SolverConfig& config = {}) {
    ConvPlan plan;
    return solve_pc(problem, config, plan);
}

inline Solution solve_nr(const FdeProblem& problem, const SolverConfig& config = {}) {
    ConvPlan plan;
    return solve_nr(problem, config, plan);
}

inline Solution solve(const FdeProblem& problem, Method method, const SolverConfig& config,
                      ConvPlan& plan) {
    return method == Method::PC ? solve_pc(problem, config, plan)
                                : solve_nr(problem, config, plan);
}

}  // namespace fracsolve
