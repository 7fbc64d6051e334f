#include "frachh/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace frachh::kernels::neon {

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    const std::size_t n = x.size();
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(&x[i]), vld1q_f64(&y[i]));
        acc1 = vfmaq_f64(acc1, vld1q_f64(&x[i + 2]), vld1q_f64(&y[i + 2]));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        acc = std::fma(x[i], y[i], acc);
    }
    return acc;
}

double sum(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(&x[i]));
        acc1 = vaddq_f64(acc1, vld1q_f64(&x[i + 2]));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        acc += x[i];
    }
    return acc;
}

double sum_abs(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(&x[i])));
    }
    double total = vaddvq_f64(acc);
    for (; i < n; ++i) {
        total += std::fabs(x[i]);
    }
    return total;
}

MaxAbs max_abs(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    float64x2_t best = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        best = vmaxq_f64(best, vabsq_f64(vld1q_f64(&x[i])));
    }
    double value = vmaxvq_f64(best);
    for (; i < n; ++i) {
        const double v = std::fabs(x[i]);
        value = v > value ? v : value;
    }
    MaxAbs out{value, 0};
    if (value == 0.0) {
        return out;
    }
    for (i = 0; i < n; ++i) {
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
    const float64x2_t s = vdupq_n_f64(slack);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t gt = vcgtq_f64(vld1q_f64(&lhs[i]), vaddq_f64(vld1q_f64(&rhs[i]), s));
        count += static_cast<std::size_t>(vgetq_lane_u64(gt, 0) & 1u) +
                 static_cast<std::size_t>(vgetq_lane_u64(gt, 1) & 1u);
    }
    for (; i < n; ++i) {
        if (lhs[i] > rhs[i] + slack) {
            ++count;
        }
    }
    return count;
}

} // namespace frachh::kernels::neon

#endif
