#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace frachh {

using RealFn = std::function<double(double)>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kDefaultMaxPanels = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultKernelMesh = 64;

struct Interval {
    double a = 0.0;
    double b = 1.0;

    double length() const noexcept { return b - a; }
    double midpoint() const noexcept { return 0.5 * (a + b); }
    double reflect(double x) const noexcept { return a + b - x; }
};

/// Throws DomainError unless a < b and both are finite.
void validate_interval(Interval iv);

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    /// False when the panel cap or the round-off floor stopped refinement
    /// before abs_error_estimate reached the requested tolerance.
    bool tolerance_met = true;
};

/// UpperSingular integrates against (b - t)^(alpha - 1),
/// LowerSingular against (t - a)^(alpha - 1).
enum class KernelSide { UpperSingular, LowerSingular };

/// Gamma function for x > 0. Lanczos approximation (g = 7, 9 terms) with
/// exact factorials for small integers; relative error ~1e-15 on (0, 171).
double gamma(double x);

/// Largest x with a finite gamma(x) in double precision.
inline constexpr double kGammaMaxArg = 171.62437695630272;

/// Global adaptive Gauss-Kronrod (7/15) quadrature of h over [a, b].
QuadResult integrate_smooth(const RealFn& h, Interval iv, double tol = kDefaultTol,
                            std::size_t max_panels = kDefaultMaxPanels);

/// Integral of |pole - s|^(alpha - 1) h(s) over `segment`, where `pole` is
/// not inside the open segment. For alpha < 1 the substitution
/// u = |pole - s|^alpha removes the endpoint singularity; for alpha >= 1 the
/// kernel is bounded and multiplied in directly.
QuadResult integrate_kernel_segment(const RealFn& h, Interval segment, double pole, double alpha,
                                    double tol = kDefaultTol,
                                    std::size_t max_panels = kDefaultMaxPanels);

/// Integral over [a, b] of h against the endpoint-singular kernel on `side`.
QuadResult integrate_singular(const RealFn& h, Interval iv, double alpha, KernelSide side,
                              double tol = kDefaultTol,
                              std::size_t max_panels = kDefaultMaxPanels);

struct KernelValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Piecewise representation of
///   K(t) = int_a^t (b - s)^(alpha-1) g(s) ds - int_t^b (s - a)^(alpha-1) g(s) ds
/// on a mesh graded geometrically (ratio 2) toward both endpoints.
/// Immutable after construction; evaluate() is safe to call concurrently.
class CumulativeKernel {
public:
    CumulativeKernel(RealFn g, Interval iv, double alpha, std::size_t mesh_size, double tol);

    KernelValue evaluate(double t) const;
    double operator()(double t) const { return evaluate(t).value; }

    std::span<const double> mesh() const noexcept { return nodes_; }
    /// K at the mesh nodes.
    std::span<const double> node_values() const noexcept { return node_values_; }
    double node_error(std::size_t i) const noexcept { return node_errors_[i]; }
    /// Largest error estimate over the mesh nodes.
    double max_node_error() const noexcept;

    /// False if any panel integral missed its tolerance.
    bool accurate() const noexcept { return accurate_; }
    std::size_t build_evaluations() const noexcept { return build_evaluations_; }

    Interval interval() const noexcept { return iv_; }
    double alpha() const noexcept { return alpha_; }

private:
    RealFn g_;
    Interval iv_;
    double alpha_;
    double panel_tol_;
    bool accurate_ = true;
    std::size_t build_evaluations_ = 0;
    std::vector<double> nodes_;
    std::vector<double> upper_cum_;     // int_a^{t_i} (b-s)^(alpha-1) g
    std::vector<double> upper_cum_err_;
    std::vector<double> lower_tail_;    // int_{t_i}^b (s-a)^(alpha-1) g
    std::vector<double> lower_tail_err_;
    std::vector<double> node_values_;
    std::vector<double> node_errors_;
};

/// Mesh nodes for CumulativeKernel: symmetric about the midpoint, panel
/// widths halving toward each endpoint. `mesh_size` is the panel count
/// (rounded up to even, minimum 32).
std::vector<double> graded_mesh(Interval iv, std::size_t mesh_size);

CumulativeKernel cumulative_kernel(const RealFn& g, Interval iv, double alpha,
                                   std::size_t mesh_size = kDefaultKernelMesh,
                                   double tol = kDefaultTol);

} // namespace frachh
