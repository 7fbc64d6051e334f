#include "frachh/kernels.hpp"

#include <cmath>

namespace frachh::kernels::scalar {

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

double sum(std::span<const double> x) noexcept {
    double acc = 0.0;
    for (double v : x) {
        acc += v;
    }
    return acc;
}

double sum_abs(std::span<const double> x) noexcept {
    double acc = 0.0;
    for (double v : x) {
        acc += std::fabs(v);
    }
    return acc;
}

MaxAbs max_abs(std::span<const double> x) noexcept {
    MaxAbs best;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = std::fabs(x[i]);
        if (v > best.value) {
            best.value = v;
            best.index = i;
        }
    }
    return best;
}

std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] > rhs[i] + slack) {
            ++n;
        }
    }
    return n;
}

} // namespace frachh::kernels::scalar
