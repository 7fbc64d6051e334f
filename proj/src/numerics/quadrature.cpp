#include "frachh/error.hpp"
#include "frachh/kernels.hpp"
#include "frachh/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace frachh {

namespace {

constexpr std::size_t kNodes = 15;

// Gauss-Kronrod 7/15 abscissae on [-1, 1], ascending.
constexpr std::array<double, kNodes> kAbscissae{
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144845693013, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144845693013,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};

constexpr std::array<double, kNodes> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};

// Gauss weights embedded at the odd Kronrod positions, zero elsewhere, so
// both rules reduce to one dot product each over the same samples.
constexpr std::array<double, kNodes> kGaussWeights{
    0.0, 0.129484966168869693270611432679082,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.417959183673469387755102040816327,
    0.0, 0.381830050505118944950369775488975,
    0.0, 0.279705391489276667901467771423780,
    0.0, 0.129484966168869693270611432679082,
    0.0,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
};

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const noexcept {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.lo > y.lo;
    }
};

Panel apply_rule(const RealFn& h, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::array<double, kNodes> samples;
    for (std::size_t k = 0; k < kNodes; ++k) {
        const double x = center + half * kAbscissae[k];
        const double y = h(x);
        if (!std::isfinite(y)) {
            throw EvaluationError("integrand returned a non-finite value", x);
        }
        samples[k] = y;
    }
    const double kronrod = half * kernels::dot(kKronrodWeights, samples);
    const double gauss = half * kernels::dot(kGaussWeights, samples);

    // Error is |K - G|, floored at the round-off level of the panel.
    std::array<double, kNodes> weighted;
    for (std::size_t k = 0; k < kNodes; ++k) {
        weighted[k] = kKronrodWeights[k] * samples[k];
    }
    const double resabs = std::fabs(half) * kernels::sum_abs(weighted);
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    return Panel{lo, hi, kronrod, std::max(std::fabs(kronrod - gauss), roundoff)};
}

bool splittable(const Panel& p) noexcept {
    const double mid = 0.5 * (p.lo + p.hi);
    const double scale = std::max(std::fabs(p.lo), std::fabs(p.hi));
    return mid > p.lo && mid < p.hi &&
           (p.hi - p.lo) > 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("quadrature tolerance must be positive and finite, got " +
                          std::to_string(tol));
    }
}

} // namespace

void validate_interval(Interval iv) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b) || !(iv.a < iv.b)) {
        throw DomainError("interval requires finite a < b, got [" + std::to_string(iv.a) + ", " +
                          std::to_string(iv.b) + "]");
    }
}

QuadResult integrate_smooth(const RealFn& h, Interval iv, double tol, std::size_t max_panels) {
    validate_interval(iv);
    check_tol(tol);
    max_panels = std::max<std::size_t>(max_panels, 1);

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
    std::vector<Panel> frozen;  // panels too narrow to bisect further
    std::size_t evaluations = kNodes;
    const Panel first = apply_rule(h, iv.a, iv.b);
    double total_error = first.error;
    queue.push(first);

    bool stalled = false;
    while (total_error > tol && queue.size() + frozen.size() < max_panels) {
        if (queue.empty()) {
            stalled = true;
            break;
        }
        const Panel worst = queue.top();
        queue.pop();
        if (!splittable(worst)) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = apply_rule(h, worst.lo, mid);
        const Panel right = apply_rule(h, mid, worst.hi);
        evaluations += 2 * kNodes;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        if (total_error < 0.0) {
            total_error = 0.0;
        }
    }

    // Final totals are summed in abscissa order so results do not depend on
    // heap layout.
    std::vector<Panel> panels = std::move(frozen);
    panels.reserve(panels.size() + queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
    QuadResult out;
    for (const Panel& p : panels) {
        out.value += p.value;
        out.abs_error_estimate += p.error;
    }
    out.evaluations = evaluations;
    // Slack absorbs drift between the running and the re-summed error total.
    out.tolerance_met = !stalled && out.abs_error_estimate <= tol * (1.0 + 1e-9);
    return out;
}

QuadResult integrate_kernel_segment(const RealFn& h, Interval segment, double pole, double alpha,
                                    double tol, std::size_t max_panels) {
    validate_interval(segment);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("fractional order must be positive, got alpha = " +
                          std::to_string(alpha));
    }
    const bool pole_above = pole >= segment.b;
    if (!pole_above && pole > segment.a) {
        throw DomainError("kernel pole lies inside the integration segment");
    }

    if (alpha == 1.0) {
        return integrate_smooth(h, segment, tol, max_panels);
    }

    if (alpha > 1.0) {
        const double exponent = alpha - 1.0;
        auto weighted = [&](double s) { return std::pow(std::fabs(pole - s), exponent) * h(s); };
        return integrate_smooth(weighted, segment, tol, max_panels);
    }

    // u = |pole - s|^alpha, ds = -(1/alpha) |pole - s|^(1-alpha) du.
    const double inv_alpha = 1.0 / alpha;
    const double near = pole_above ? pole - segment.b : segment.a - pole;
    const double far = pole_above ? pole - segment.a : segment.b - pole;
    const Interval u_range{std::pow(near, alpha), std::pow(far, alpha)};
    if (!(u_range.a < u_range.b)) {
        return QuadResult{0.0, 0.0, 1, true};
    }
    auto transformed = pole_above
                           ? RealFn([&](double u) { return h(pole - std::pow(u, inv_alpha)); })
                           : RealFn([&](double u) { return h(pole + std::pow(u, inv_alpha)); });
    QuadResult r = integrate_smooth(transformed, u_range, tol * alpha, max_panels);
    r.value *= inv_alpha;
    r.abs_error_estimate *= inv_alpha;
    return r;
}

QuadResult integrate_singular(const RealFn& h, Interval iv, double alpha, KernelSide side,
                              double tol, std::size_t max_panels) {
    validate_interval(iv);
    const double pole = side == KernelSide::UpperSingular ? iv.b : iv.a;
    if (alpha >= 1.0) {
        return integrate_kernel_segment(h, iv, pole, alpha, tol, max_panels);
    }
    // The substitution moves the midpoint off the bisection grid; split there
    // so a kink of a midpoint-symmetric integrand stays on a panel edge.
    const double m = iv.midpoint();
    const QuadResult lower = integrate_kernel_segment(h, {iv.a, m}, pole, alpha, 0.5 * tol, max_panels);
    const QuadResult upper = integrate_kernel_segment(h, {m, iv.b}, pole, alpha, 0.5 * tol, max_panels);
    return QuadResult{lower.value + upper.value, lower.abs_error_estimate + upper.abs_error_estimate,
                      lower.evaluations + upper.evaluations,
                      lower.tolerance_met && upper.tolerance_met};
}

} // namespace frachh
