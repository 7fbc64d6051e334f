#include "frachh/error.hpp"
#include "frachh/functions.hpp"
#include "frachh/kernels.hpp"
#include "frachh/oracle.hpp"
#include "frachh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace frachh {

namespace {

double grid_point(Interval iv, std::size_t i, std::size_t n) {
    if (i + 1 == n) {
        return iv.b;
    }
    return iv.a + iv.length() * static_cast<double>(i) / static_cast<double>(n - 1);
}

} // namespace

HolderPair HolderPair::from_q(double q) {
    if (!(q > 1.0) || !std::isfinite(q)) {
        throw DomainError("Hoelder exponent q must exceed 1, got " + std::to_string(q));
    }
    return HolderPair{q / (q - 1.0), q};
}

HolderPair HolderPair::from_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw DomainError("Hoelder exponent p must exceed 1, got " + std::to_string(p));
    }
    return HolderPair{p, p / (p - 1.0)};
}

void validate(const HolderPair& pair) {
    if (!(pair.p > 1.0) || !(pair.q > 1.0)) {
        throw DomainError("Hoelder pair requires p > 1 and q > 1");
    }
    if (std::fabs(1.0 / pair.p + 1.0 / pair.q - 1.0) > 1e-12) {
        throw DomainError("Hoelder pair requires 1/p + 1/q = 1");
    }
}

bool is_symmetric_on_grid(const RealFn& g, Interval iv) {
    for (std::size_t i = 0; i < kWeightGrid; ++i) {
        const double x = grid_point(iv, i, kWeightGrid);
        const double gx = g(x);
        const double gr = g(iv.reflect(x));
        if (!(std::fabs(gx - gr) <= kSymmetryTol * std::max(1.0, std::fabs(gx)))) {
            return false;
        }
    }
    return true;
}

bool is_nonnegative_on_grid(const RealFn& g, Interval iv) {
    for (std::size_t i = 0; i < kWeightGrid; ++i) {
        if (!(g(grid_point(iv, i, kWeightGrid)) >= -kSymmetryTol)) {
            return false;
        }
    }
    return true;
}

WeightSpec make_weight(std::string label, RealFn g, Interval iv) {
    validate_interval(iv);
    WeightSpec w;
    w.label = std::move(label);
    w.interval = iv;
    w.symmetric = is_symmetric_on_grid(g, iv);
    w.nonnegative = is_nonnegative_on_grid(g, iv);
    w.eval = std::move(g);
    return w;
}

WeightSpec symmetrize(const RealFn& g_raw, Interval iv, std::string label) {
    validate_interval(iv);
    RealFn sym = [g_raw, iv](double x) { return 0.5 * (g_raw(x) + g_raw(iv.reflect(x))); };
    return make_weight(std::move(label), std::move(sym), iv);
}

ConvexityReport check_convexity(const FunctionSpec& f, Interval iv, std::size_t samples,
                                std::uint64_t seed) {
    validate_interval(iv);
    if (samples < 100) {
        throw DomainError("check_convexity needs at least 100 samples");
    }
    if (!f.defined_on(iv)) {
        throw PreconditionError("function '" + f.label + "' is not defined on the interval");
    }
    SeededUniform rng(seed);
    ConvexityReport report;
    report.seed = seed;
    report.samples = samples;
    report.worst_violation = -std::numeric_limits<double>::infinity();
    // Keep clear of an open domain boundary.
    const Interval inner = f.domain_lo_open && iv.a == f.domain_lo
                               ? Interval{iv.a + 1e-12 * iv.length(), iv.b}
                               : iv;
    for (std::size_t i = 0; i < samples; ++i) {
        double x = rng.uniform(inner.a, inner.b);
        double y = rng.uniform(inner.a, inner.b);
        if (x > y) {
            std::swap(x, y);
        }
        const double lambda = rng.uniform(0.0, 1.0);
        const double z = lambda * x + (1.0 - lambda) * y;
        const double gap = f.eval(z) - (lambda * f.eval(x) + (1.0 - lambda) * f.eval(y));
        report.worst_violation = std::max(report.worst_violation, gap);
    }
    report.convex = report.worst_violation <= kConvexitySlack;
    return report;
}

double sup_norm(const RealFn& g, Interval iv, std::size_t grid) {
    validate_interval(iv);
    grid = std::max<std::size_t>(grid, 4097);
    std::vector<double> values(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        const double x = grid_point(iv, i, grid);
        const double y = g(x);
        if (!std::isfinite(y)) {
            throw EvaluationError("sup_norm: non-finite weight sample", x);
        }
        values[i] = y;
    }
    const kernels::MaxAbs best = kernels::max_abs(values);

    // Golden-section search for a larger |g| between the neighbours of the
    // best grid point.
    const std::size_t lo_i = best.index == 0 ? 0 : best.index - 1;
    const std::size_t hi_i = std::min(best.index + 1, grid - 1);
    double lo = grid_point(iv, lo_i, grid);
    double hi = grid_point(iv, hi_i, grid);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto mag = [&](double x) { return std::fabs(g(x)); };
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = mag(c);
    double fd = mag(d);
    double refined = best.value;
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi)); ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = mag(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = mag(d);
        }
        refined = std::max({refined, fc, fd});
    }
    return refined;
}

DerivativeCheck check_derivative(const FunctionSpec& f, Interval iv, std::size_t points) {
    validate_interval(iv);
    if (!f.deriv) {
        throw PreconditionError("function '" + f.label + "' carries no derivative");
    }
    constexpr double h = 1e-5;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    DerivativeCheck out;
    out.passed = true;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = iv.a + iv.length() * static_cast<double>(i + 1) / static_cast<double>(points + 1);
        const double fd = oracle::finite_difference_derivative(f.eval, x, h);
        const double err = std::fabs((*f.deriv)(x) - fd);

        // Third derivative from a wider five-point stencil sets C.
        const double edge = std::min(x - iv.a, iv.b - x);
        const double k = std::min(1e-2 * iv.length(), edge / 2.5);
        const double third = (f.eval(x + 2 * k) - 2 * f.eval(x + k) + 2 * f.eval(x - k) -
                              f.eval(x - 2 * k)) / (2 * k * k * k);
        const double c = 1.0 + 2.0 * std::fabs(third) / 6.0;
        const double scale = std::max(std::fabs(f.eval(x + h)), std::fabs(f.eval(x - h)));
        const double allowance = c * h * h + 8.0 * eps * scale / h;

        if (err > out.worst_error) {
            out.worst_error = err;
            out.worst_at = x;
        }
        if (!(err <= allowance)) {
            out.passed = false;
        }
    }
    return out;
}

} // namespace frachh
