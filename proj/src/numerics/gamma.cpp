#include "frachh/error.hpp"
#include "frachh/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace frachh {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    // Evaluates gamma(x) for x >= 0.5.
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    // t^(z+0.5) is split in two so it does not overflow before gamma does.
    const double half_power = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * series;
}

} // namespace

double gamma(double x) {
    if (std::isnan(x) || x <= 0.0) {
        throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
    }
    if (x > kGammaMaxArg) {
        throw OverflowError("gamma: result overflows double for x = " + std::to_string(x));
    }
    if (x == std::floor(x) && x <= 23.0) {
        double fact = 1.0;
        for (int k = 2; k < static_cast<int>(x); ++k) {
            fact *= k;
        }
        return fact;
    }
    if (x < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
    }
    return lanczos(x);
}

} // namespace frachh
