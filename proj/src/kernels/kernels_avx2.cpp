// Compiled with -mavx2 -mfma; only called after the dispatcher has
// confirmed CPU support.

#include "frachh/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace frachh::kernels::avx2 {

namespace {

inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d vabs(__m256d v) noexcept {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

} // namespace

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i + 4]), _mm256_loadu_pd(&y[i + 4]), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc0);
        i += 4;
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc = std::fma(x[i], y[i], acc);
    }
    return acc;
}

double sum(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(&x[i]));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(&x[i + 4]));
    }
    if (i + 4 <= n) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(&x[i]));
        i += 4;
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += x[i];
    }
    return acc;
}

double sum_abs(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, vabs(_mm256_loadu_pd(&x[i])));
        acc1 = _mm256_add_pd(acc1, vabs(_mm256_loadu_pd(&x[i + 4])));
    }
    if (i + 4 <= n) {
        acc0 = _mm256_add_pd(acc0, vabs(_mm256_loadu_pd(&x[i])));
        i += 4;
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        acc += std::fabs(x[i]);
    }
    return acc;
}

MaxAbs max_abs(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    if (n < 4) {
        return scalar::max_abs(x);
    }
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        best = _mm256_max_pd(best, vabs(_mm256_loadu_pd(&x[i])));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double value = lanes[0];
    for (int k = 1; k < 4; ++k) {
        value = lanes[k] > value ? lanes[k] : value;
    }
    for (; i < n; ++i) {
        const double v = std::fabs(x[i]);
        value = v > value ? v : value;
    }
    // Locate the first occurrence so ties resolve exactly like the scalar path.
    MaxAbs out{value, 0};
    if (value == 0.0) {
        return out;
    }
    const __m256d target = _mm256_set1_pd(value);
    for (i = 0; i + 4 <= n; i += 4) {
        const int mask = _mm256_movemask_pd(
            _mm256_cmp_pd(vabs(_mm256_loadu_pd(&x[i])), target, _CMP_EQ_OQ));
        if (mask != 0) {
            out.index = i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
            return out;
        }
    }
    for (; i < n; ++i) {
        if (std::fabs(x[i]) == value) {
            out.index = i;
            break;
        }
    }
    return out;
}

std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept {
    const std::size_t n = lhs.size();
    const __m256d s = _mm256_set1_pd(slack);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d bound = _mm256_add_pd(_mm256_loadu_pd(&rhs[i]), s);
        const int mask = _mm256_movemask_pd(
            _mm256_cmp_pd(_mm256_loadu_pd(&lhs[i]), bound, _CMP_GT_OQ));
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(mask)));
    }
    for (; i < n; ++i) {
        if (lhs[i] > rhs[i] + slack) {
            ++count;
        }
    }
    return count;
}

} // namespace frachh::kernels::avx2
