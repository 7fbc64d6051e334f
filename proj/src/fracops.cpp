#include "frachh/fracops.hpp"

#include "frachh/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace frachh {

void validate(const FracSetting& s) {
    validate_interval(s.interval());
    if (!(s.alpha > 0.0) || !std::isfinite(s.alpha)) {
        throw DomainError("fractional order must satisfy alpha > 0, got " + std::to_string(s.alpha));
    }
    if (s.strict_domain && s.a < 0.0) {
        throw DomainError("strict mode requires a >= 0, got a = " + std::to_string(s.a));
    }
}

namespace {

QuadResult scaled_operator(const RealFn& h, const FracSetting& s, KernelSide side, double tol) {
    validate(s);
    const double g = gamma(s.alpha);
    QuadResult r = integrate_singular(h, s.interval(), s.alpha, side, tol * g);
    r.value /= g;
    r.abs_error_estimate /= g;
    return r;
}

} // namespace

QuadResult j_left(const RealFn& h, const FracSetting& s, double tol) {
    return scaled_operator(h, s, KernelSide::UpperSingular, tol);
}

QuadResult j_right(const RealFn& h, const FracSetting& s, double tol) {
    return scaled_operator(h, s, KernelSide::LowerSingular, tol);
}

double j_of_constant(const FracSetting& s) {
    validate(s);
    return std::pow(s.b - s.a, s.alpha) / gamma(s.alpha + 1.0);
}

SymmetryReport check_symmetry_lemma(const WeightSpec& g, const FracSetting& s, double tol) {
    if (!g.symmetric) {
        throw PreconditionError("weight '" + g.label + "' is not symmetric about the midpoint");
    }
    const QuadResult left = j_left(g.eval, s, tol);
    const QuadResult right = j_right(g.eval, s, tol);
    SymmetryReport r;
    r.left = left.value;
    r.right = right.value;
    const double scale = std::max({std::fabs(r.left), std::fabs(r.right), 1.0});
    r.gap = std::fabs(r.left - r.right) / scale;
    r.error_budget = (left.abs_error_estimate + right.abs_error_estimate) / scale + 1e-12;
    r.evaluations = left.evaluations + right.evaluations;
    if (r.gap > r.error_budget) {
        r.status = Status::Violated;
    } else if (!left.tolerance_met || !right.tolerance_met) {
        r.status = Status::Inconclusive;
    } else {
        r.status = Status::Holds;
    }
    return r;
}

} // namespace frachh
