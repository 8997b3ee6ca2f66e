#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "fracsolve/error.hpp"
#include "fracsolve/fft.hpp"
#include "fracsolve/types.hpp"

namespace fracsolve {

enum class ConvMode { Direct, FftPartitioned };

/// Evaluation plan for history convolution sums. A plan instance belongs to
/// a single solve: the kernel-transform cache is keyed by weight stream and
/// must be reset between solves (the solvers do this on entry). Twiddle
/// tables depend only on the transform length and survive resets.
struct ConvPlan {
    ConvMode mode = ConvMode::FftPartitioned;
    std::size_t base_block = 16;                    // power of two >= 2
    std::size_t max_fft_len = std::size_t(1) << 24;

    // (stream id, lag offset, transform length) -> frequency-domain weights
    std::map<std::tuple<int, long, std::size_t>, std::vector<detail::Cplx>> weight_transforms;
    detail::Fft fft;
    unsigned long long op_count = 0;  // approximate scalar multiply-adds

    void validate() const {
        if (base_block < 2 || !detail::is_pow2(base_block))
            raise(Errc::plan_error, "base_block must be a power of two >= 2");
    }

    void reset_solve_state() {
        weight_transforms.clear();
        op_count = 0;
    }
};

inline ConvPlan direct_plan() { return ConvPlan{ConvMode::Direct}; }

/// S_i = sum_{j=lo}^{hi} weights[n-j] * f_history(j, i). An empty window
/// (lo > hi) yields zeros; out-of-range indices raise IndexError.
inline Vec direct_history_sum(const Vec& weights, const Matrix& f_history, std::size_t n,
                              std::size_t lo, std::size_t hi) {
    const std::size_t dims = f_history.cols();
    Vec out(dims, 0.0);
    if (lo > hi) return out;
    if (hi > n || hi >= f_history.rows() || n - lo >= weights.size())
        raise(Errc::index_error, "history window out of range");
    for (std::size_t j = lo; j <= hi; ++j) {
        const double w = weights[n - j];
        const double* row = f_history.row_data(j);
        for (std::size_t i = 0; i < dims; ++i) out[i] += w * row[i];
    }
    return out;
}

namespace detail {

// sum_{j=lo}^{hi} w[q-j] * src[j] over a single source column
inline double direct_lagged_sum(const Vec& w, const std::vector<double>& src, std::size_t q,
                                std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) s += w[q - j] * src[j];
    return s;
}

inline unsigned long long fft_cost(std::size_t p) {
    unsigned long long lg = 0;
    for (std::size_t v = p; v > 1; v >>= 1) ++lg;
    return 5ULL * p * lg;
}

}  // namespace detail

/// Contribution of one completed source block to a range of later targets:
/// out(q - t_lo, i) = sum_{j in block} weights[q-j] * f_block(j - b_lo, i),
/// with weights[k] taken as zero for k < 0 or beyond the provided array.
/// Computed as one zero-padded power-of-two transform per column and
/// identical (to rounding) with the direct double loop over the same ranges.
inline Matrix fft_block_contribution(const Vec& weights, const Matrix& f_block,
                                     std::pair<std::size_t, std::size_t> block_range,
                                     std::pair<std::size_t, std::size_t> target_range,
                                     ConvPlan& plan) {
    const auto [b_lo, b_hi] = block_range;
    const auto [t_lo, t_hi] = target_range;
    if (b_lo > b_hi || t_lo > t_hi) raise(Errc::index_error, "empty block or target range");
    const std::size_t n_block = b_hi - b_lo + 1;
    const std::size_t n_targets = t_hi - t_lo + 1;
    const std::size_t dims = f_block.cols();
    if (f_block.rows() < n_block) raise(Errc::index_error, "f_block shorter than block range");

    Matrix out(n_targets, dims, 0.0);
    if (t_hi < b_lo) return out;  // all lags negative

    const long k_min = std::max(0L, static_cast<long>(t_lo) - static_cast<long>(b_hi));
    const long k_max = static_cast<long>(t_hi) - static_cast<long>(b_lo);
    const std::size_t n_lags = static_cast<std::size_t>(k_max - k_min) + 1;
    const std::size_t p = detail::next_pow2(n_lags + n_block - 1);
    if (p > plan.max_fft_len)
        raise(Errc::plan_error, "transform length exceeds the configured maximum");

    std::vector<detail::Cplx> kernel(p, detail::Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n_lags; ++k) {
        const auto idx = static_cast<std::size_t>(k_min) + k;
        if (idx < weights.size()) kernel[k] = detail::Cplx(weights[idx], 0.0);
    }
    plan.fft.forward(kernel);
    plan.op_count += detail::fft_cost(p);

    std::vector<detail::Cplx> data(p);
    for (std::size_t i = 0; i < dims; ++i) {
        std::fill(data.begin(), data.end(), detail::Cplx(0.0, 0.0));
        for (std::size_t j = 0; j < n_block; ++j) data[j] = detail::Cplx(f_block(j, i), 0.0);
        plan.fft.forward(data);
        for (std::size_t k = 0; k < p; ++k) data[k] *= kernel[k];
        plan.fft.inverse(data);
        plan.op_count += 2 * detail::fft_cost(p) + 4ULL * p;
        for (std::size_t q = t_lo; q <= t_hi; ++q) {
            const long m = static_cast<long>(q) - static_cast<long>(b_lo) - k_min;
            if (m >= 0) out(q - t_lo, i) = data[static_cast<std::size_t>(m)].real();
        }
    }
    return out;
}

/// Incremental evaluator of one lagged history sum
///   S(n) = sum_{j=lo}^{n-1} w[n - j - lag_shift] * src[j]
/// for nondecreasing step n (lag_shift 1 for the predictor b-sum, 0 for the
/// corrector d-sum). In FftPartitioned mode the work follows the
/// doubling-block schedule: with base block r and S = n - lo known sources,
/// a completed source block of length L = r*2^u starting at an even
/// multiple of L serves the targets with S in (o+L, o+2L]; its contribution
/// is computed once via the FFT when the first such target is reached, and
/// the remaining tail of at most r terms is summed directly every step.
class LaggedConvolver {
public:
    LaggedConvolver(ConvPlan& plan, const Vec& w, const std::vector<double>& src,
                    std::size_t lo, std::size_t lag_shift, std::size_t n_max, int stream_id)
        : plan_(&plan),
          w_(&w),
          src_(&src),
          lo_(lo),
          shift_(lag_shift),
          n_max_(n_max),
          stream_(stream_id) {
        plan.validate();
        if (plan.mode == ConvMode::FftPartitioned) {
            acc_.assign(n_max_ + 1, 0.0);
            const std::size_t s_max = n_max_ > lo_ ? n_max_ - lo_ : 0;
            for (std::size_t len = plan.base_block; len < s_max; len <<= 1)
                next_off_.push_back(0);
        }
    }

    double sum_at(std::size_t n) {
        if (n <= lo_) return 0.0;
        const std::size_t avail = n - lo_;  // known sources
        const Vec& w = *w_;
        const std::vector<double>& src = *src_;
        if (plan_->mode == ConvMode::Direct) {
            plan_->op_count += avail;
            return detail::direct_lagged_sum(w, src, n - shift_, lo_, n - 1);
        }
        activate(avail);
        const std::size_t r = plan_->base_block;
        const std::size_t covered = ((avail - 1) / r) * r;
        double tail = 0.0;
        for (std::size_t j = lo_ + covered; j <= n - 1; ++j) tail += w[n - j - shift_] * src[j];
        plan_->op_count += avail - covered;
        return acc_[n] + tail;
    }

private:
    // Folds every block due at source count `avail` into the accumulator.
    void activate(std::size_t avail) {
        const std::size_t r = plan_->base_block;
        for (std::size_t u = 0; u < next_off_.size(); ++u) {
            const std::size_t len = r << u;
            while (next_off_[u] + len < avail) {
                add_block(next_off_[u], len);
                next_off_[u] += 2 * len;
            }
        }
    }

    void add_block(std::size_t offset, std::size_t len) {
        const std::size_t p = 2 * len;
        if (p > plan_->max_fft_len)
            raise(Errc::plan_error, "transform length exceeds the configured maximum");
        const auto& kfft = kernel(p);

        const std::vector<double>& src = *src_;
        std::vector<detail::Cplx> data(p, detail::Cplx(0.0, 0.0));
        for (std::size_t k = 0; k < len; ++k)
            data[k] = detail::Cplx(src[lo_ + offset + k], 0.0);
        plan_->fft.forward(data);
        for (std::size_t k = 0; k < p; ++k) data[k] *= kfft[k];
        plan_->fft.inverse(data);
        plan_->op_count += 2 * detail::fft_cost(p) + 4ULL * p;

        // Block (offset, offset+len-1] in source coordinates serves the
        // targets with source count in (offset+len, offset+2*len]; the
        // convolution entry for count s sits at index s - offset - 2.
        const std::size_t s_max = n_max_ - lo_;
        const std::size_t s_hi = std::min(offset + 2 * len, s_max);
        for (std::size_t s = offset + len + 1; s <= s_hi; ++s)
            acc_[s + lo_] += data[s - offset - 2].real();
    }

    // Frequency-domain weight slice for transform length p; the lag offset
    // is 2 - lag_shift for every block of the same length, so slices recur
    // across blocks and are cached per (stream, offset, length).
    const std::vector<detail::Cplx>& kernel(std::size_t p) {
        const long k_min = 2 - static_cast<long>(shift_);
        const auto key = std::make_tuple(stream_, k_min, p);
        auto it = plan_->weight_transforms.find(key);
        if (it != plan_->weight_transforms.end()) return it->second;
        const Vec& w = *w_;
        std::vector<detail::Cplx> slice(p, detail::Cplx(0.0, 0.0));
        for (std::size_t k = 0; k + 1 < p; ++k) {
            const auto idx = static_cast<std::size_t>(k_min) + k;
            if (idx < w.size()) slice[k] = detail::Cplx(w[idx], 0.0);
        }
        plan_->fft.forward(slice);
        plan_->op_count += detail::fft_cost(p);
        auto [pos, inserted] = plan_->weight_transforms.emplace(key, std::move(slice));
        (void)inserted;
        return pos->second;
    }

    ConvPlan* plan_;
    const Vec* w_;
    const std::vector<double>* src_;
    std::size_t lo_;
    std::size_t shift_;
    std::size_t n_max_;
    std::vector<double> acc_;
    std::vector<std::size_t> next_off_;
    int stream_;
};

enum class HistoryKind { Predictor, Corrector };

/// One-shot evaluation of a full history sum at step n, dispatching on the
/// plan mode. Predictor kind: sum_{j=0}^{n-1} weights[n-1-j] f(X_j);
/// corrector kind: sum_{j=1}^{n-1} weights[n-j] f(X_j) (row 0 ignored).
/// Matches the direct evaluation over the same window to rounding.
inline Vec history_sum(ConvPlan& plan, const Vec& weights, const Matrix& f_history,
                       std::size_t n, HistoryKind kind = HistoryKind::Corrector) {
    // Solver code binds LaggedConvolver streams directly; this one-shot form
    // draws unique stream ids so stale kernel cache entries cannot be hit
    // when a plan is reused with different weight arrays.
    static std::atomic<int> next_id{-1};
    const std::size_t dims = f_history.cols();
    const std::size_t lo = kind == HistoryKind::Predictor ? 0 : 1;
    const std::size_t shift = kind == HistoryKind::Predictor ? 1 : 0;
    Vec out(dims, 0.0);
    if (n == 0 || n <= lo) return out;
    if (f_history.rows() < n) raise(Errc::index_error, "f_history must hold rows 0..n-1");
    for (std::size_t i = 0; i < dims; ++i) {
        std::vector<double> column(n);
        for (std::size_t j = 0; j < n; ++j) column[j] = f_history(j, i);
        LaggedConvolver conv(plan, weights, column, lo, shift, n, next_id.fetch_sub(1));
        out[i] = conv.sum_at(n);
    }
    return out;
}

}  // namespace fracsolve
