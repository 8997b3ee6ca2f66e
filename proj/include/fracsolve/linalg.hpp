#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "fracsolve/error.hpp"
#include "fracsolve/types.hpp"

namespace fracsolve {

/// LU factorization with partial pivoting for the small dense systems of
/// the Newton scheme. Factor once per time step, solve per iteration.
class LuFactor {
public:
    explicit LuFactor(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
        const std::size_t n = lu_.rows();
        if (n != lu_.cols()) raise(Errc::bad_config, "LU needs a square matrix");
        double norm = 0.0;  // infinity norm of the input
        for (std::size_t r = 0; r < n; ++r) {
            double row_sum = 0.0;
            for (std::size_t c = 0; c < n; ++c) row_sum += std::abs(lu_(r, c));
            norm = std::max(norm, row_sum);
        }
        const double pivot_floor = 1e-14 * norm;

        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (std::abs(lu_(r, k)) > std::abs(lu_(pivot, k))) pivot = r;
            if (std::abs(lu_(pivot, k)) <= pivot_floor)
                raise(Errc::singular_matrix, "pivot below threshold");
            if (pivot != k) {
                for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(pivot, c));
                std::swap(perm_[k], perm_[pivot]);
            }
            for (std::size_t r = k + 1; r < n; ++r) {
                const double factor = lu_(r, k) / lu_(k, k);
                lu_(r, k) = factor;
                for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= factor * lu_(k, c);
            }
        }
    }

    Vec solve(const Vec& rhs) const {
        const std::size_t n = lu_.rows();
        if (rhs.size() != n) raise(Errc::dimension_mismatch, "rhs length mismatch");
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
            x[ii] /= lu_(ii, ii);
        }
        return x;
    }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
};

inline Vec lu_solve(const Matrix& a, const Vec& rhs) { return LuFactor(a).solve(rhs); }

}  // namespace fracsolve
