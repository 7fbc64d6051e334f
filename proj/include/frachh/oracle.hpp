#pragma once

// Reference computations that share no quadrature code with numerics:
// a fixed composite midpoint rule after a separately coded substitution,
// and closed-form Beta-function values built on std::tgamma.

#include "frachh/numerics.hpp"

#include <cstddef>

namespace frachh::oracle {

inline constexpr std::size_t kMinDensePanels = 100000;

/// Integral of h against the endpoint-singular kernel on `side`, by the
/// composite midpoint rule with `panels` cells (>= 1e5). For alpha < 1 the
/// rule runs in u = distance^alpha, where the integrand is bounded and the
/// error is O(panels^-2) for smooth h. For alpha >= 1 it runs in t directly;
/// the error there is O(panels^-min(2, alpha)).
double dense_singular_integral(const RealFn& h, Interval iv, double alpha, KernelSide side,
                               std::size_t panels = 1000000);

/// J_{a+}^alpha [(. - a)^n](b) = n! / Gamma(n + 1 + alpha) (b - a)^(n + alpha).
/// 0 <= n <= 12.
double beta_reference(double alpha, int n, Interval iv);

/// Kernel moment int_a^b (b - t)^(alpha-1) (t - a)^n dt = (b-a)^(n+alpha) B(alpha, n+1),
/// i.e. beta_reference without the 1/Gamma(alpha) factor.
double beta_moment(double alpha, int n, Interval iv);

/// (f(x + h) - f(x - h)) / (2h).
double finite_difference_derivative(const RealFn& f, double x, double h = 1e-5);

} // namespace frachh::oracle
