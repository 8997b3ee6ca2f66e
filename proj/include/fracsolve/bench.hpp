#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "fracsolve/csv.hpp"
#include "fracsolve/models.hpp"
#include "fracsolve/solver.hpp"

namespace fracsolve {

struct BenchRecord {
    std::string model;
    Method method = Method::PC;
    double h = 0.0;
    double seconds = 0.0;  // median wall time of the timed repeats
    double error = 0.0;    // Euclidean norm vs reference; inf when divergent
    std::size_t iterations = 0;
    bool divergent = false;
};

enum class ReferenceKind { Exact, Fine };

struct BenchOptions {
    ReferenceKind reference = ReferenceKind::Exact;
    ConvMode mode = ConvMode::FftPartitioned;
    int repeats = 5;  // timed runs per cell (median)
    int warmup = 1;
    double fine_h = 0x1p-10;
    double fine_tol = 1e-12;
    SolverConfig config;      // h is overridden per cell
    std::size_t threads = 0;  // 0: FRACSOLVE_THREADS, else logical cores
};

inline std::size_t bench_thread_cap() {
    if (const char* env = std::getenv("FRACSOLVE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Euclidean norm of the trajectory difference over the run's own grid.
inline double error_vs_exact(const Solution& sol, const std::function<Vec(double)>& exact) {
    double acc = 0.0;
    for (std::size_t r = 0; r < sol.x.rows(); ++r) {
        const Vec ref = exact(sol.t[r]);
        for (std::size_t c = 0; c < sol.x.cols(); ++c) {
            const double d = sol.x(r, c) - ref[c];
            acc += d * d;
        }
    }
    return std::sqrt(acc);
}

/// Same norm against a fine-step reference, subsampled at the coarse grid's
/// time points. Requires nested grids (step ratio integral).
inline double error_vs_fine(const Solution& sol, const Solution& fine) {
    const double h = sol.t[1] - sol.t[0];
    const double hf = fine.t[1] - fine.t[0];
    const double ratio = h / hf;
    const auto stride = static_cast<std::size_t>(std::llround(ratio));
    if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9)
        raise(Errc::bad_config, "reference grid does not nest the run grid");
    if ((sol.x.rows() - 1) * stride > fine.x.rows() - 1)
        raise(Errc::bad_config, "reference run is shorter than the compared run");
    double acc = 0.0;
    for (std::size_t r = 0; r < sol.x.rows(); ++r) {
        for (std::size_t c = 0; c < sol.x.cols(); ++c) {
            const double d = sol.x(r, c) - fine.x(r * stride, c);
            acc += d * d;
        }
    }
    return std::sqrt(acc);
}

namespace detail {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline bool is_divergence(const Error& e) {
    return e.code() == Errc::diverged || e.code() == Errc::domain_error;
}

}  // namespace detail

/// Runs every (method, h) cell, timing each solve repeats times (plus one
/// warm-up) and reporting the median. reference=fine computes one fine-step
/// reference run first. Cells may run concurrently (FRACSOLVE_THREADS caps
/// the worker count); records keep the input order.
inline std::vector<BenchRecord> run_bench(const ModelSpec& model,
                                          const std::vector<Method>& methods,
                                          const std::vector<double>& hs,
                                          const BenchOptions& opt = {}) {
    if (methods.empty() || hs.empty()) raise(Errc::bad_config, "empty benchmark sweep");
    const FdeProblem problem = model.make_problem();
    validate_problem(problem);

    Solution fine;
    if (opt.reference == ReferenceKind::Fine) {
        SolverConfig fine_cfg = opt.config;
        fine_cfg.h = opt.fine_h;
        fine_cfg.tol = opt.fine_tol;
        ConvPlan plan{opt.mode};
        fine = problem.jacobian ? solve_nr(problem, fine_cfg, plan)
                                : solve_pc(problem, fine_cfg, plan);
    } else if (!model.exact) {
        raise(Errc::no_exact_solution, "model '" + model.name + "' has no exact solution");
    }

    struct Cell {
        Method method;
        double h;
    };
    std::vector<Cell> cells;
    for (Method m : methods)
        for (double h : hs) cells.push_back({m, h});

    std::vector<BenchRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) return;
            const Cell cell = cells[idx];
            BenchRecord rec;
            rec.model = model.name;
            rec.method = cell.method;
            rec.h = cell.h;
            SolverConfig cfg = opt.config;
            cfg.h = cell.h;
            try {
                Solution last;
                std::vector<double> times;
                const int total = opt.warmup + std::max(1, opt.repeats);
                for (int rep = 0; rep < total; ++rep) {
                    ConvPlan plan{opt.mode};
                    last = solve(problem, cell.method, cfg, plan);
                    if (rep >= opt.warmup) times.push_back(last.diagnostics.wall_seconds);
                }
                rec.seconds = detail::median(std::move(times));
                rec.iterations = last.diagnostics.total_iterations;
                rec.error = opt.reference == ReferenceKind::Exact
                                ? error_vs_exact(last, model.exact)
                                : error_vs_fine(last, fine);
            } catch (const Error& e) {
                if (!detail::is_divergence(e)) throw;
                rec.divergent = true;
                rec.error = std::numeric_limits<double>::infinity();
            }
            records[idx] = rec;
        }
    };

    const std::size_t cap = opt.threads ? opt.threads : bench_thread_cap();
    const std::size_t n_workers = std::min(cap, cells.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << "model,method,h,seconds,error,iterations\n";
    for (const auto& r : records) {
        os << r.model << ',' << method_name(r.method) << ',' << csv::format_double(r.h) << ','
           << csv::format_double(r.seconds) << ',' << csv::format_double(r.error) << ','
           << r.iterations << '\n';
    }
}

struct OrderEstimate {
    std::vector<double> hs;      // sorted coarse to fine
    std::vector<double> errors;  // Euclidean norm on the coarsest grid
    std::vector<double> p;       // p[k] from the pair (hs[k-1], hs[k]); p[0] unused
    double mean_p = 0.0;
};

/// Convergence-order estimate: all runs are compared against the exact
/// solution at the coarsest run's grid points (the sweeps use dyadic steps,
/// so grids nest) and adjacent step pairs give p = log(err ratio)/log(h
/// ratio), i.e. log2(err(2h)/err(h)) for halving sweeps.
inline OrderEstimate estimate_order(const ModelSpec& model, Method method, std::vector<double> hs,
                                    const BenchOptions& opt = {}) {
    if (!model.exact)
        raise(Errc::no_exact_solution, "model '" + model.name + "' has no exact solution");
    if (hs.size() < 3) raise(Errc::bad_config, "order estimation needs at least 3 step sizes");
    std::sort(hs.begin(), hs.end(), std::greater<>());
    const FdeProblem problem = model.make_problem();
    validate_problem(problem);

    OrderEstimate est;
    est.hs = hs;
    const double h0 = hs.front();
    for (double h : hs) {
        SolverConfig cfg = opt.config;
        cfg.h = h;
        ConvPlan plan{opt.mode};
        const Solution sol = solve(problem, method, cfg, plan);
        const double ratio = h0 / h;
        const auto stride = static_cast<std::size_t>(std::llround(ratio));
        if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9)
            raise(Errc::bad_config, "step sizes must nest within the coarsest grid");
        double acc = 0.0;
        for (std::size_t r = 0; r * stride < sol.x.rows(); ++r) {
            const Vec ref = model.exact(sol.t[r * stride]);
            for (std::size_t c = 0; c < sol.x.cols(); ++c) {
                const double d = sol.x(r * stride, c) - ref[c];
                acc += d * d;
            }
        }
        est.errors.push_back(std::sqrt(acc));
    }

    est.p.assign(hs.size(), 0.0);
    double sum = 0.0;
    for (std::size_t k = 1; k < hs.size(); ++k) {
        est.p[k] = std::log(est.errors[k - 1] / est.errors[k]) / std::log(hs[k - 1] / hs[k]);
        sum += est.p[k];
    }
    est.mean_p = sum / static_cast<double>(hs.size() - 1);
    return est;
}

inline void write_order_csv(std::ostream& os, const OrderEstimate& est) {
    os << "h,error,p\n";
    for (std::size_t k = 0; k < est.hs.size(); ++k) {
        os << csv::format_double(est.hs[k]) << ',' << csv::format_double(est.errors[k]) << ',';
        if (k > 0) os << csv::format_double(est.p[k]);
        os << '\n';
    }
    os << "mean,," << csv::format_double(est.mean_p) << '\n';
}

/// RMSD between an observed daily series and the sum of the named state
/// columns, sampled at integer days (h must divide one day).
inline double rmsd_against_series(const ModelSpec& model,
                                  const std::vector<std::pair<double, double>>& series,
                                  const std::vector<std::size_t>& columns, Method method,
                                  const BenchOptions& opt = {}) {
    if (series.empty()) raise(Errc::length_mismatch, "empty observation series");
    const SolverConfig& cfg = opt.config;
    const double per_day = 1.0 / cfg.h;
    if (std::abs(per_day - std::llround(per_day)) > 1e-9)
        raise(Errc::bad_config, "daily sampling needs a step size dividing one day");
    const FdeProblem problem = model.make_problem();
    ConvPlan plan{opt.mode};
    const Solution sol = solve(problem, method, cfg, plan);

    Vec observed, predicted;
    observed.reserve(series.size());
    predicted.reserve(series.size());
    for (const auto& [day, count] : series) {
        const double pos = (day - problem.t_span.first) / cfg.h;
        const auto idx = static_cast<std::size_t>(std::llround(pos));
        if (pos < -1e-9 || std::abs(pos - static_cast<double>(idx)) > 1e-6 ||
            idx >= sol.x.rows())
            raise(Errc::length_mismatch, "observation day outside the solved grid");
        double value = 0.0;
        for (std::size_t c : columns) value += sol.x(idx, c);
        observed.push_back(count);
        predicted.push_back(value);
    }
    return rmsd(observed, predicted);
}

}  // namespace fracsolve
