#pragma once

#include <any>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fracsolve/problem.hpp"
#include "fracsolve/special_functions.hpp"

namespace fracsolve {

/// Named builtin problem: right-hand side, optional Jacobian and exact
/// solution, plus default configuration. Instances are immutable;
/// with_param / with_beta return a rebuilt copy so the callbacks always
/// agree with the stored defaults.
struct ModelSpec {
    std::string name;
    RhsFn rhs;
    JacobianFn jacobian;
    std::function<Vec(double)> exact;  // empty when no closed form applies
    std::any default_params;
    Matrix default_x0;
    Vec default_beta;
    std::pair<double, double> default_t_span{0.0, 1.0};
    std::vector<std::string> state_names;

    // internal wiring for overrides
    std::function<ModelSpec(const std::any&, const Vec&)> rebind;
    std::function<std::any(std::any, const std::string&, double)> set_param;

    FdeProblem make_problem() const {
        FdeProblem p;
        p.rhs = rhs;
        p.jacobian = jacobian;
        p.t_span = default_t_span;
        p.x0 = default_x0;
        p.beta = default_beta;
        p.params = default_params;
        return p;
    }

    ModelSpec with_param(const std::string& key, double value) const {
        if (!set_param)
            raise(Errc::bad_config, "model '" + name + "' has no adjustable parameters");
        return rebind(set_param(default_params, key, value), default_beta);
    }

    ModelSpec with_beta(Vec beta) const {
        if (beta.size() != default_beta.size())
            raise(Errc::unsupported_order, "order vector length differs from the model dimension");
        return rebind(default_params, beta);
    }

    std::size_t state_index(const std::string& token) const {
        for (std::size_t i = 0; i < state_names.size(); ++i)
            if (state_names[i] == token) return i;
        if (token.size() > 1 && token[0] == 'x') {
            const long k = std::strtol(token.c_str() + 1, nullptr, 10);
            if (k >= 1 && static_cast<std::size_t>(k) <= default_beta.size())
                return static_cast<std::size_t>(k - 1);
        }
        raise(Errc::bad_config, "unknown state column '" + token + "'");
    }
};

/// Root mean square deviation between two equal-length series.
inline double rmsd(const Vec& y, const Vec& y_hat) {
    if (y.size() != y_hat.size() || y.empty())
        raise(Errc::length_mismatch, "rmsd needs two equal-length nonempty series");
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y_hat[i] - y[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(y.size()));
}

// ---------------------------------------------------------------------------
// Nonlinear benchmark problem with a known smooth solution
// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void unknown_param(const std::string& model, const std::string& key) {
    raise(Errc::bad_config, "unknown parameter '" + key + "' for model '" + model + "'");
}

inline ModelSpec make_nonstiff(double order) {
    if (!(order > 0.0 && order <= 2.0))
        raise(Errc::unsupported_order, "nonstiff model is defined for orders in (0, 2]");
    ModelSpec spec;
    spec.name = "nonstiff";
    spec.state_names = {"X"};
    spec.default_params = order;
    spec.default_beta = {order};
    spec.default_x0 = order <= 1.0 ? Matrix{{0.0}} : Matrix{{0.0}, {0.0}};
    spec.default_t_span = {0.0, 1.0};
    spec.rhs = [](double t, const Vec& x, const std::any& par) {
        const double b = std::any_cast<double>(par);
        if (x[0] < 0.0)
            raise(Errc::domain_error, "negative state in fractional power (solution diverging)");
        const double poly = 1.5 * std::pow(t, b / 2.0) - std::pow(t, 4.0);
        const double v = 40320.0 / gamma(9.0 - b) * std::pow(t, 8.0 - b) -
                         3.0 * gamma(5.0 + b / 2.0) / gamma(5.0 - b / 2.0) *
                             std::pow(t, 4.0 - b / 2.0) +
                         2.25 * gamma(b + 1.0) + poly * poly * poly - std::pow(x[0], 1.5);
        return Vec{v};
    };
    spec.jacobian = [](double, const Vec& x, const std::any&) {
        if (x[0] < 0.0)
            raise(Errc::domain_error, "negative state in fractional power (solution diverging)");
        Matrix j(1, 1);
        j(0, 0) = -1.5 * std::sqrt(x[0]);
        return j;
    };
    spec.exact = [order](double t) {
        return Vec{std::pow(t, 8.0) - 3.0 * std::pow(t, 4.0 + order / 2.0) +
                   2.25 * std::pow(t, order)};
    };
    spec.rebind = [](const std::any&, const Vec& beta) { return make_nonstiff(beta.at(0)); };
    spec.set_param = [](std::any par, const std::string& key, double) -> std::any {
        (void)par;
        unknown_param("nonstiff", key);  // the order doubles as the only parameter
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Stiff linear problem, exact solution through the Mittag-Leffler function
// ---------------------------------------------------------------------------

inline ModelSpec make_stiff_linear(double lambda, double order) {
    ModelSpec spec;
    spec.name = "stiff";
    spec.state_names = {"X"};
    spec.default_params = lambda;
    spec.default_beta = {order};
    spec.default_x0 = Matrix{{1.0}};
    spec.default_t_span = {0.0, 5.0};
    spec.rhs = [](double, const Vec& x, const std::any& par) {
        return Vec{std::any_cast<double>(par) * x[0]};
    };
    spec.jacobian = [](double, const Vec&, const std::any& par) {
        Matrix j(1, 1);
        j(0, 0) = std::any_cast<double>(par);
        return j;
    };
    const double t0 = spec.default_t_span.first;
    spec.exact = [lambda, order, t0](double t) {
        return Vec{mittag_leffler(order, lambda * std::pow(t - t0, order))};
    };
    spec.rebind = [](const std::any& par, const Vec& beta) {
        return make_stiff_linear(std::any_cast<double>(par), beta.at(0));
    };
    spec.set_param = [](std::any par, const std::string& key, double value) -> std::any {
        if (key == "lambda") return value;
        (void)par;
        unknown_param("stiff", key);
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Fractional harmonic motion (order two recovers the classical oscillator)
// ---------------------------------------------------------------------------

struct HarmonicParams {
    double k = 16.0;
    double m = 4.0;
};

inline ModelSpec make_harmonic(HarmonicParams par, double order) {
    if (!(par.k > 0.0) || !(par.m > 0.0))
        raise(Errc::bad_config, "harmonic model needs k > 0 and m > 0");
    ModelSpec spec;
    spec.name = "harmonic";
    spec.state_names = {"X"};
    spec.default_params = par;
    spec.default_beta = {order};
    spec.default_x0 = order > 1.0 ? Matrix{{1.0}, {1.0}} : Matrix{{1.0}};
    spec.default_t_span = {0.0, 10.0};
    spec.rhs = [](double, const Vec& x, const std::any& p) {
        const auto& hp = std::any_cast<const HarmonicParams&>(p);
        return Vec{-hp.k / hp.m * x[0]};
    };
    spec.jacobian = [](double, const Vec&, const std::any& p) {
        const auto& hp = std::any_cast<const HarmonicParams&>(p);
        Matrix j(1, 1);
        j(0, 0) = -hp.k / hp.m;
        return j;
    };
    if (order == 2.0) {
        const double omega = std::sqrt(par.k / par.m);
        const double x0 = spec.default_x0(0, 0);
        const double v0 = spec.default_x0(1, 0);
        spec.exact = [omega, x0, v0](double t) {
            return Vec{x0 * std::cos(omega * t) + v0 / omega * std::sin(omega * t)};
        };
    }
    spec.rebind = [](const std::any& p, const Vec& beta) {
        return make_harmonic(std::any_cast<HarmonicParams>(p), beta.at(0));
    };
    spec.set_param = [](std::any p, const std::string& key, double value) -> std::any {
        auto hp = std::any_cast<HarmonicParams>(p);
        if (key == "k") hp.k = value;
        else if (key == "m") hp.m = value;
        else unknown_param("harmonic", key);
        return hp;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Fractional SIR epidemic model
// ---------------------------------------------------------------------------

struct SirParams {
    double beta = 0.4;    // infectious rate
    double gamma = 0.04;  // recovery rate
};

inline ModelSpec make_sir(SirParams par, Vec beta) {
    ModelSpec spec;
    spec.name = "sir";
    spec.state_names = {"S", "I", "R"};
    spec.default_params = par;
    spec.default_beta = std::move(beta);
    spec.default_x0 = Matrix{{0.9, 0.1, 0.0}};
    spec.default_t_span = {0.0, 100.0};
    spec.rhs = [](double, const Vec& y, const std::any& p) {
        const auto& sp = std::any_cast<const SirParams&>(p);
        const double s = y[0], i = y[1];
        return Vec{-sp.beta * s * i, sp.beta * s * i - sp.gamma * i, sp.gamma * i};
    };
    spec.jacobian = [](double, const Vec& y, const std::any& p) {
        const auto& sp = std::any_cast<const SirParams&>(p);
        const double s = y[0], i = y[1];
        Matrix j(3, 3);
        j(0, 0) = -sp.beta * i;  j(0, 1) = -sp.beta * s;           j(0, 2) = 0.0;
        j(1, 0) = sp.beta * i;   j(1, 1) = sp.beta * s - sp.gamma; j(1, 2) = 0.0;
        j(2, 0) = 0.0;           j(2, 1) = sp.gamma;               j(2, 2) = 0.0;
        return j;
    };
    spec.rebind = [](const std::any& p, const Vec& b) {
        return make_sir(std::any_cast<SirParams>(p), b);
    };
    spec.set_param = [](std::any p, const std::string& key, double value) -> std::any {
        auto sp = std::any_cast<SirParams>(p);
        if (key == "beta") sp.beta = value;
        else if (key == "gamma") sp.gamma = value;
        else unknown_param("sir", key);
        return sp;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Three-species Lotka-Volterra system with sharp oscillations
// ---------------------------------------------------------------------------

struct Lv3Params {
    double a[7] = {3.0, 3.0, 3.0, 5.0, 3.0, 3.0, 3.0};
};

inline ModelSpec make_lv3(Lv3Params par, Vec beta) {
    ModelSpec spec;
    spec.name = "lv3";
    spec.state_names = {"X1", "X2", "X3"};
    spec.default_params = par;
    spec.default_beta = std::move(beta);
    spec.default_x0 = Matrix{{1.0, 1.0, 1.0}};
    spec.default_t_span = {0.0, 60.0};
    spec.rhs = [](double, const Vec& x, const std::any& p) {
        const auto& a = std::any_cast<const Lv3Params&>(p).a;
        return Vec{x[0] * (a[0] - a[1] * x[0] - x[1] - x[2]),
                   x[1] * (1.0 - a[2] + a[3] * x[0]),
                   x[2] * (1.0 - a[4] + a[5] * x[0] + a[6] * x[1])};
    };
    spec.jacobian = [](double, const Vec& x, const std::any& p) {
        const auto& a = std::any_cast<const Lv3Params&>(p).a;
        Matrix j(3, 3);
        j(0, 0) = a[0] - 2.0 * a[1] * x[0] - x[1] - x[2];
        j(0, 1) = -x[0];
        j(0, 2) = -x[0];
        j(1, 0) = a[3] * x[1];
        j(1, 1) = 1.0 - a[2] + a[3] * x[0];
        j(1, 2) = 0.0;
        j(2, 0) = a[5] * x[2];
        j(2, 1) = a[6] * x[2];
        j(2, 2) = 1.0 - a[4] + a[5] * x[0] + a[6] * x[1];
        return j;
    };
    spec.rebind = [](const std::any& p, const Vec& b) {
        return make_lv3(std::any_cast<Lv3Params>(p), b);
    };
    spec.set_param = [](std::any p, const std::string& key, double value) -> std::any {
        auto lp = std::any_cast<Lv3Params>(p);
        if (key.size() == 2 && key[0] == 'a' && key[1] >= '1' && key[1] <= '7')
            lp.a[key[1] - '1'] = value;
        else
            unknown_param("lv3", key);
        return lp;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Generalized Lotka-Volterra community model with Hill-type inhibition and
// piecewise-constant growth-rate schedules for pulse perturbations
// ---------------------------------------------------------------------------

struct GrowthWindow {
    double t_start = 0.0;
    double t_end = 0.0;
    Vec growth;
};

struct GlvParams {
    std::size_t n_species = 3;
    double hill = 2.0;           // Hill coefficient
    Matrix interaction;          // K_ij, diagonal unused
    Vec death;                   // k_i
    Vec growth;                  // baseline b_i
    std::vector<GrowthWindow> schedule;

    const Vec& growth_at(double t) const {
        for (auto it = schedule.rbegin(); it != schedule.rend(); ++it)
            if (t >= it->t_start && t <= it->t_end) return it->growth;
        return growth;
    }
};

inline GlvParams default_glv_params(std::size_t n_species) {
    GlvParams gp;
    gp.n_species = n_species;
    gp.interaction = Matrix(n_species, n_species, 0.1);
    gp.death = Vec(n_species, 1.0);
    gp.growth = Vec(n_species, 1.0);
    if (n_species == 3) gp.growth = {1.0, 0.95, 1.05};
    return gp;
}

inline ModelSpec make_glv(GlvParams par, Vec beta) {
    const std::size_t n = par.n_species;
    if (n == 0) raise(Errc::bad_config, "glv model needs at least one species");
    if (par.growth.size() != n || par.death.size() != n || par.interaction.rows() != n)
        raise(Errc::bad_config, "glv parameter arrays must match the species count");
    ModelSpec spec;
    spec.name = "glv";
    for (std::size_t i = 0; i < n; ++i) spec.state_names.push_back("X" + std::to_string(i + 1));
    spec.default_params = par;
    spec.default_beta = std::move(beta);
    spec.default_x0 = Matrix(1, n, 0.01);
    spec.default_x0(0, 0) = 0.99;
    if (n == 1) spec.default_x0(0, 0) = 0.5;
    spec.default_t_span = {0.0, 100.0};

    auto inhibition = [](const GlvParams& gp, const Vec& x, std::size_t i) {
        double f = 1.0;
        for (std::size_t k = 0; k < gp.n_species; ++k) {
            if (k == i) continue;
            const double kn = std::pow(gp.interaction(i, k), gp.hill);
            f *= kn / (kn + std::pow(x[k], gp.hill));
        }
        return f;
    };
    spec.rhs = [inhibition](double t, const Vec& x, const std::any& p) {
        const auto& gp = std::any_cast<const GlvParams&>(p);
        const Vec& b = gp.growth_at(t);
        Vec out(gp.n_species);
        for (std::size_t i = 0; i < gp.n_species; ++i)
            out[i] = x[i] * (b[i] * inhibition(gp, x, i) - gp.death[i] * x[i]);
        return out;
    };
    spec.jacobian = [inhibition](double t, const Vec& x, const std::any& p) {
        const auto& gp = std::any_cast<const GlvParams&>(p);
        const Vec& b = gp.growth_at(t);
        const std::size_t nn = gp.n_species;
        Matrix j(nn, nn);
        for (std::size_t i = 0; i < nn; ++i) {
            const double fi = inhibition(gp, x, i);
            j(i, i) = b[i] * fi - 2.0 * gp.death[i] * x[i];
            for (std::size_t c = 0; c < nn; ++c) {
                if (c == i) continue;
                const double kn = std::pow(gp.interaction(i, c), gp.hill);
                const double dlog =
                    -gp.hill * std::pow(x[c], gp.hill - 1.0) / (kn + std::pow(x[c], gp.hill));
                j(i, c) = x[i] * b[i] * fi * dlog;
            }
        }
        return j;
    };
    spec.rebind = [](const std::any& p, const Vec& b) {
        return make_glv(std::any_cast<GlvParams>(p), b);
    };
    spec.set_param = [](std::any p, const std::string& key, double value) -> std::any {
        auto gp = std::any_cast<GlvParams>(p);
        auto species_index = [&gp](const std::string& k, std::size_t prefix) -> std::size_t {
            const long i = std::strtol(k.c_str() + prefix, nullptr, 10);
            if (i < 1 || static_cast<std::size_t>(i) > gp.n_species)
                raise(Errc::bad_config, "species index out of range in '" + k + "'");
            return static_cast<std::size_t>(i - 1);
        };
        auto ensure_window = [&gp]() -> GrowthWindow& {
            if (gp.schedule.empty()) gp.schedule.push_back({0.0, 0.0, gp.growth});
            return gp.schedule.back();
        };
        if (key == "hill") gp.hill = value;
        else if (key.rfind("pulse_b", 0) == 0) ensure_window().growth[species_index(key, 7)] = value;
        else if (key == "pulse_start") ensure_window().t_start = value;
        else if (key == "pulse_end") ensure_window().t_end = value;
        else if (key.rfind("b", 0) == 0 && key.size() > 1) gp.growth[species_index(key, 1)] = value;
        else if (key.rfind("k", 0) == 0 && key.size() > 1) gp.death[species_index(key, 1)] = value;
        else unknown_param("glv", key);
        return gp;
    };
    return spec;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Eight-compartment epidemic model with a super-spreader class
// ---------------------------------------------------------------------------

struct CovidParams {
    double beta_inf = 2.55;    // transmission coefficient (day^-1)
    double l = 1.56;           // relative transmissibility of hospitalized patients
    double beta_prime = 7.65;  // super-spreader transmission coefficient (day^-1)
    double kappa = 0.25;       // rate at which exposed become infectious (day^-1)
    double rho1 = 0.58;        // exposed -> symptomatic fraction
    double rho2 = 0.001;       // exposed -> super-spreader fraction
    double gamma_a = 0.94;     // hospitalization rate (day^-1)
    double gamma_i = 0.27;     // recovery rate without hospitalization (day^-1)
    double gamma_r = 0.50;     // recovery rate of hospitalized patients (day^-1)
    double delta_i = 1.0 / 23.0;
    double delta_p = 1.0 / 23.0;
    double delta_h = 1.0 / 23.0;
    double n_pop = 1.0;  // population size; compartments default to fractions
};

namespace detail {

inline void check_covid_params(const CovidParams& cp) {
    const double vals[] = {cp.beta_inf, cp.l,       cp.beta_prime, cp.kappa,
                           cp.rho1,     cp.rho2,    cp.gamma_a,    cp.gamma_i,
                           cp.gamma_r,  cp.delta_i, cp.delta_p,    cp.delta_h,
                           cp.n_pop};
    for (double v : vals)
        if (v < 0.0) raise(Errc::domain_error, "covid parameters must be nonnegative");
    if (cp.rho1 + cp.rho2 > 1.0)
        raise(Errc::domain_error, "covid model needs rho1 + rho2 <= 1");
}

inline ModelSpec make_covid(CovidParams par, Vec beta) {
    check_covid_params(par);
    ModelSpec spec;
    spec.name = "covid";
    spec.state_names = {"S", "E", "I", "P", "A", "H", "R", "F"};
    spec.default_params = par;
    spec.default_beta = std::move(beta);
    // Wuhan-style seeding scaled to a unit population: one symptomatic case
    // and five super-spreaders per 11 million.
    const double i0 = par.n_pop / 11.0e6;
    const double p0 = 5.0 * par.n_pop / 11.0e6;
    spec.default_x0 = Matrix(1, 8, 0.0);
    spec.default_x0(0, 0) = par.n_pop - i0 - p0;
    spec.default_x0(0, 2) = i0;
    spec.default_x0(0, 3) = p0;
    spec.default_t_span = {0.0, 120.0};
    spec.rhs = [](double, const Vec& y, const std::any& p) {
        const auto& cp = std::any_cast<const CovidParams&>(p);
        const double s = y[0], e = y[1], i = y[2], sp = y[3], h = y[5];
        const double force =
            (cp.beta_inf * i + cp.l * cp.beta_inf * h + cp.beta_prime * sp) / cp.n_pop * s;
        return Vec{-force,
                   force - cp.kappa * e,
                   cp.kappa * cp.rho1 * e - (cp.gamma_a + cp.gamma_i) * i - cp.delta_i * i,
                   cp.kappa * cp.rho2 * e - (cp.gamma_a + cp.gamma_i) * sp - cp.delta_p * sp,
                   cp.kappa * (1.0 - cp.rho1 - cp.rho2) * e,
                   cp.gamma_a * (i + sp) - cp.gamma_r * h - cp.delta_h * h,
                   cp.gamma_i * (i + sp) + cp.gamma_r * h,
                   cp.delta_i * i + cp.delta_p * sp + cp.delta_h * h};
    };
    spec.jacobian = [](double, const Vec& y, const std::any& p) {
        const auto& cp = std::any_cast<const CovidParams&>(p);
        const double s = y[0], i = y[2], sp = y[3], h = y[5];
        const double inv_n = 1.0 / cp.n_pop;
        Matrix j(8, 8);
        const double dfds = (cp.beta_inf * i + cp.l * cp.beta_inf * h + cp.beta_prime * sp) * inv_n;
        const double dfdi = cp.beta_inf * s * inv_n;
        const double dfdp = cp.beta_prime * s * inv_n;
        const double dfdh = cp.l * cp.beta_inf * s * inv_n;
        j(0, 0) = -dfds; j(0, 2) = -dfdi; j(0, 3) = -dfdp; j(0, 5) = -dfdh;
        j(1, 0) = dfds;  j(1, 2) = dfdi;  j(1, 3) = dfdp;  j(1, 5) = dfdh;
        j(1, 1) = -cp.kappa;
        j(2, 1) = cp.kappa * cp.rho1;
        j(2, 2) = -(cp.gamma_a + cp.gamma_i + cp.delta_i);
        j(3, 1) = cp.kappa * cp.rho2;
        j(3, 3) = -(cp.gamma_a + cp.gamma_i + cp.delta_p);
        j(4, 1) = cp.kappa * (1.0 - cp.rho1 - cp.rho2);
        j(5, 2) = cp.gamma_a; j(5, 3) = cp.gamma_a;
        j(5, 5) = -(cp.gamma_r + cp.delta_h);
        j(6, 2) = cp.gamma_i; j(6, 3) = cp.gamma_i; j(6, 5) = cp.gamma_r;
        j(7, 2) = cp.delta_i; j(7, 3) = cp.delta_p; j(7, 5) = cp.delta_h;
        return j;
    };
    spec.rebind = [](const std::any& p, const Vec& b) {
        return make_covid(std::any_cast<CovidParams>(p), b);
    };
    spec.set_param = [](std::any p, const std::string& key, double value) -> std::any {
        auto cp = std::any_cast<CovidParams>(p);
        if (key == "beta") cp.beta_inf = value;
        else if (key == "l") cp.l = value;
        else if (key == "beta_prime") cp.beta_prime = value;
        else if (key == "kappa") cp.kappa = value;
        else if (key == "rho1") cp.rho1 = value;
        else if (key == "rho2") cp.rho2 = value;
        else if (key == "gamma_a") cp.gamma_a = value;
        else if (key == "gamma_i") cp.gamma_i = value;
        else if (key == "gamma_r") cp.gamma_r = value;
        else if (key == "delta_i") cp.delta_i = value;
        else if (key == "delta_p") cp.delta_p = value;
        else if (key == "delta_h") cp.delta_h = value;
        else if (key == "N") cp.n_pop = value;
        else unknown_param("covid", key);
        return cp;
    };
    return spec;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public factories
// ---------------------------------------------------------------------------

inline ModelSpec nonstiff_model() { return detail::make_nonstiff(0.5); }

inline ModelSpec stiff_linear_model(double lambda = -10.0) {
    return detail::make_stiff_linear(lambda, 0.8);
}

inline ModelSpec harmonic_model(double k = 16.0, double m_mass = 4.0) {
    return detail::make_harmonic({k, m_mass}, 2.0);
}

inline ModelSpec sir_model() { return detail::make_sir({}, {0.9, 0.6, 0.7}); }

inline ModelSpec lv3_model() { return detail::make_lv3({}, {1.0, 0.9, 0.7}); }

inline ModelSpec glv_microbial_model(std::size_t n_species = 3) {
    return detail::make_glv(detail::default_glv_params(n_species), Vec(n_species, 1.0));
}

inline ModelSpec covid_model(CovidParams params = {}) {
    return detail::make_covid(params, Vec(8, 0.85));
}

inline const std::map<std::string, std::function<ModelSpec()>>& model_registry() {
    static const std::map<std::string, std::function<ModelSpec()>> registry = {
        {"nonstiff", []() { return nonstiff_model(); }},
        {"stiff", []() { return stiff_linear_model(); }},
        {"harmonic", []() { return harmonic_model(); }},
        {"sir", []() { return sir_model(); }},
        {"lv3", []() { return lv3_model(); }},
        {"glv", []() { return glv_microbial_model(); }},
        {"covid", []() { return covid_model(); }},
    };
    return registry;
}

inline ModelSpec model_by_name(const std::string& name) {
    const auto& reg = model_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) raise(Errc::unknown_model, "unknown model '" + name + "'");
    return it->second();
}

}  // namespace fracsolve
