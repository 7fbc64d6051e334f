#pragma once

// Data-parallel reductions used by the quadrature rules and grid scans.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
// chosen once at runtime from the CPU feature set; set_isa() overrides the
// choice so tests can compare the paths against each other.

#include <cstddef>
#include <span>
#include <string_view>

namespace frachh::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct MaxAbs {
    double value = 0.0;
    std::size_t index = 0;
};

/// Best ISA the running CPU supports among the compiled variants.
Isa detect_isa() noexcept;

/// ISA the dispatched entry points currently use.
Isa active_isa() noexcept;

/// Forces the dispatched entry points onto `isa`. Returns false (and leaves
/// the selection unchanged) if that variant is unavailable on this machine.
bool set_isa(Isa isa) noexcept;

std::string_view isa_name(Isa isa) noexcept;

// Dispatched entry points. Sizes of paired spans must match.
double dot(std::span<const double> x, std::span<const double> y) noexcept;
double sum(std::span<const double> x) noexcept;
double sum_abs(std::span<const double> x) noexcept;
/// First index attaining max |x_i|. Empty input yields {0, 0}.
MaxAbs max_abs(std::span<const double> x) noexcept;
/// Number of i with lhs_i > rhs_i + slack.
std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept;

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y) noexcept;
double sum(std::span<const double> x) noexcept;
double sum_abs(std::span<const double> x) noexcept;
MaxAbs max_abs(std::span<const double> x) noexcept;
std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept;
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y) noexcept;
double sum(std::span<const double> x) noexcept;
double sum_abs(std::span<const double> x) noexcept;
MaxAbs max_abs(std::span<const double> x) noexcept;
std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept;
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(std::span<const double> x, std::span<const double> y) noexcept;
double sum(std::span<const double> x) noexcept;
double sum_abs(std::span<const double> x) noexcept;
MaxAbs max_abs(std::span<const double> x) noexcept;
std::size_t count_exceeding(std::span<const double> lhs, std::span<const double> rhs,
                            double slack) noexcept;
} // namespace neon
#endif

} // namespace frachh::kernels
