#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <unordered_map>
#include <vector>

namespace fracsolve::detail {

using Cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Iterative radix-2 complex FFT with per-length twiddle tables. One table
/// of n/2 roots serves every butterfly stage of a length-n transform.
class Fft {
public:
    void forward(std::vector<Cplx>& a) { transform(a); }

    void inverse(std::vector<Cplx>& a) {
        for (auto& v : a) v = std::conj(v);
        transform(a);
        const double scale = 1.0 / static_cast<double>(a.size());
        for (auto& v : a) v = std::conj(v) * scale;
    }

private:
    void transform(std::vector<Cplx>& a) {
        const std::size_t n = a.size();
        if (n <= 1) return;
        const auto& w = table(n);
        for (std::size_t i = 1, j = 0; i < n; ++i) {
            std::size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(a[i], a[j]);
        }
        for (std::size_t len = 2; len <= n; len <<= 1) {
            const std::size_t stride = n / len;
            const std::size_t half = len / 2;
            for (std::size_t base = 0; base < n; base += len) {
                for (std::size_t k = 0; k < half; ++k) {
                    const Cplx u = a[base + k];
                    const Cplx v = a[base + k + half] * w[k * stride];
                    a[base + k] = u + v;
                    a[base + k + half] = u - v;
                }
            }
        }
    }

    const std::vector<Cplx>& table(std::size_t n) {
        auto it = tables_.find(n);
        if (it != tables_.end()) return it->second;
        std::vector<Cplx> w(n / 2);
        const double step = -6.283185307179586476925287 / static_cast<double>(n);
        for (std::size_t k = 0; k < n / 2; ++k)
            w[k] = Cplx(std::cos(step * static_cast<double>(k)),
                        std::sin(step * static_cast<double>(k)));
        auto [pos, inserted] = tables_.emplace(n, std::move(w));
        (void)inserted;
        return pos->second;
    }

    std::unordered_map<std::size_t, std::vector<Cplx>> tables_;
};

}  // namespace fracsolve::detail
