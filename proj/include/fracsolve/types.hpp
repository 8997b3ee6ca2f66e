#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fracsolve/error.hpp"

namespace fracsolve {

using Vec = std::vector<double>;

/// Dense row-major matrix. Small and unclever on purpose; the solvers only
/// need trajectories, Jacobians and initial-value blocks.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<double>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                raise(Errc::bad_initial_shape, "ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double* row_data(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_data(std::size_t r) const { return data_.data() + r * cols_; }

    Vec row(std::size_t r) const {
        return Vec(row_data(r), row_data(r) + cols_);
    }

    void set_row(std::size_t r, const Vec& values) {
        if (values.size() != cols_) raise(Errc::dimension_mismatch, "row length mismatch");
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
    }

    const std::vector<double>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace fracsolve
