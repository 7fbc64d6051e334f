#include "frachh/inequalities.hpp"

#include "frachh/error.hpp"
#include "frachh/kernels.hpp"
#include "frachh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace frachh {

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::Holds:
        return "Holds";
    case Status::Violated:
        return "Violated";
    case Status::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

constexpr double kBudgetFloor = 1e-12;

// ---------------------------------------------------------------------------
// Hypothesis gates

struct Gate {
    bool met = true;
    std::string note;

    void add_note(const std::string& text) { note += (note.empty() ? "" : "; ") + text; }

    void require(bool ok, const std::string& why, const VerifyOptions& opt) {
        if (ok) {
            return;
        }
        if (!opt.force) {
            throw PreconditionError(why);
        }
        met = false;
        add_note("hypotheses unmet: " + why);
    }

    void apply(ReportMeta& meta) const {
        meta.hypotheses_met = met;
        meta.note = note;
    }
};

void require_defined(const FunctionSpec& f, Interval iv) {
    if (!f.defined_on(iv)) {
        throw PreconditionError("function '" + f.label + "' is not defined on [" +
                                std::to_string(iv.a) + ", " + std::to_string(iv.b) + "]");
    }
}

void require_convex(Gate& gate, const FunctionSpec& f, Interval iv, const VerifyOptions& opt) {
    if (f.convexity.is_convex()) {
        return;
    }
    const ConvexityReport rep = check_convexity(f, iv, 1000, opt.seed);
    gate.require(rep.convex, "convexity of '" + f.label + "' refuted by sampling", opt);
    if (rep.convex) {
        gate.add_note("convexity sampled, not certified");
    }
}

void require_derivative(const FunctionSpec& f) {
    if (!f.has_derivative()) {
        throw PreconditionError("function '" + f.label + "' has no derivative");
    }
}

void require_deriv_convex(Gate& gate, const FunctionSpec& f, double q, const VerifyOptions& opt) {
    gate.require(f.convexity.deriv_power_convex(q),
                 "|f'|^q with q = " + std::to_string(q) + " is not certified convex for '" +
                     f.label + "'",
                 opt);
}

void require_weight(Gate& gate, const WeightSpec& g, Interval iv, bool need_nonnegative,
                    const VerifyOptions& opt) {
    if (g.interval.a != iv.a || g.interval.b != iv.b) {
        throw PreconditionError("weight '" + g.label + "' was built for a different interval");
    }
    gate.require(g.symmetric, "weight '" + g.label + "' is not symmetric about the midpoint", opt);
    if (need_nonnegative) {
        gate.require(g.nonnegative, "weight '" + g.label + "' takes negative values", opt);
    }
}

// ---------------------------------------------------------------------------
// Status and retry

double worst_margin(const SandwichReport& r) {
    return std::min(r.lower_margin, r.upper_margin);
}
double worst_margin(const BoundReport& r) {
    return r.slack;
}

template <typename Report>
Status preliminary_status(const Report& r) {
    const double m = worst_margin(r);
    if (m < -r.error_budget) {
        return Status::Violated;
    }
    if (!r.meta.converged || m < 0.0) {
        return Status::Inconclusive;
    }
    return Status::Holds;
}

template <typename Report>
Status final_status(const Report& r) {
    if (worst_margin(r) < -r.error_budget) {
        return Status::Violated;
    }
    return r.meta.converged ? Status::Holds : Status::Inconclusive;
}

Status identity_status(const IdentityReport& r) {
    if (r.residual > r.error_budget * r.scale) {
        return Status::Violated;
    }
    return r.meta.converged ? Status::Holds : Status::Inconclusive;
}

template <typename Compute>
auto with_retry(Compute compute, const VerifyOptions& opt) {
    auto report = compute(opt.tol);
    report.meta.tol_used = opt.tol;
    if (opt.retry && preliminary_status(report) == Status::Inconclusive) {
        auto tighter = compute(opt.tol / 100.0);
        tighter.meta.tol_used = opt.tol / 100.0;
        tighter.meta.retried = true;
        tighter.meta.evaluations += report.meta.evaluations;
        report = std::move(tighter);
    }
    report.status = final_status(report);
    return report;
}

template <typename Compute>
IdentityReport identity_with_retry(Compute compute, const VerifyOptions& opt) {
    IdentityReport report = compute(opt.tol);
    report.meta.tol_used = opt.tol;
    if (opt.retry && identity_status(report) != Status::Holds) {
        IdentityReport tighter = compute(opt.tol / 100.0);
        tighter.meta.tol_used = opt.tol / 100.0;
        tighter.meta.retried = true;
        tighter.meta.evaluations += report.meta.evaluations;
        report = std::move(tighter);
    }
    report.status = identity_status(report);
    return report;
}

// ---------------------------------------------------------------------------
// Shared terms

double endpoint_average(const FunctionSpec& f, Interval iv) {
    return 0.5 * (f.eval(iv.a) + f.eval(iv.b));
}

SandwichReport make_sandwich(double lhs, double mid, double rhs, double abs_error) {
    SandwichReport r;
    r.lhs = lhs;
    r.mid = mid;
    r.rhs = rhs;
    r.lower_margin = mid - lhs;
    r.upper_margin = rhs - mid;
    const double scale = std::max({std::fabs(lhs), std::fabs(mid), std::fabs(rhs), 1.0});
    r.error_budget = abs_error + kBudgetFloor * scale;
    return r;
}

BoundReport make_bound(double observed, double bound, double abs_error) {
    BoundReport r;
    r.observed = observed;
    r.bound = bound;
    r.slack = bound - observed;
    r.error_budget = abs_error + kBudgetFloor * std::max({observed, std::fabs(bound), 1.0});
    return r;
}

IdentityReport make_identity(double lhs, double rhs, double abs_error) {
    IdentityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::fabs(lhs - rhs);
    r.scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    r.error_budget = abs_error / r.scale + kBudgetFloor;
    return r;
}

struct OperatorPair {
    double value = 0.0;  // J_{a+} h(b) + J_{b-} h(a)
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

OperatorPair both_operators(const RealFn& h, const FracSetting& s, double tol) {
    const QuadResult left = j_left(h, s, tol);
    const QuadResult right = j_right(h, s, tol);
    return OperatorPair{left.value + right.value, left.abs_error_estimate + right.abs_error_estimate,
                        left.evaluations + right.evaluations,
                        left.tolerance_met && right.tolerance_met};
}

RealFn product(const FunctionSpec& f, const WeightSpec& g) {
    return [&f, &g](double x) { return f.eval(x) * g.eval(x); };
}

/// Gamma(alpha + 1) / (2 (b - a)^alpha).
double unweighted_scale(const FracSetting& s) {
    return gamma(s.alpha + 1.0) / (2.0 * std::pow(s.b - s.a, s.alpha));
}

struct UnweightedGap {
    double value;
    double error;
    std::size_t evaluations;
    bool converged;
};

UnweightedGap unweighted_gap(const FunctionSpec& f, const FracSetting& s, double tol) {
    const OperatorPair ops = both_operators(f.eval, s, tol);
    const double c = unweighted_scale(s);
    return UnweightedGap{endpoint_average(f, s.interval()) - c * ops.value, c * ops.error,
                         ops.evaluations, ops.converged};
}

double deriv_at(const FunctionSpec& f, double x) {
    const double v = (*f.deriv)(x);
    if (!std::isfinite(v)) {
        throw EvaluationError("derivative of '" + f.label + "' is not finite", x);
    }
    return v;
}

double power_mean(double fpa, double fpb, double q) {
    return std::pow(0.5 * (std::pow(std::fabs(fpa), q) + std::pow(std::fabs(fpb), q)), 1.0 / q);
}

void validate_pair(const HolderPair& pair) {
    validate(pair);
}

} // namespace

// ---------------------------------------------------------------------------
// Sandwich chains

SandwichReport hh_classical(const FunctionSpec& f, Interval iv, const VerifyOptions& opt) {
    validate_interval(iv);
    require_defined(f, iv);
    Gate gate;
    require_convex(gate, f, iv, opt);
    const double len = iv.length();
    auto report = with_retry(
        [&](double tol) {
            const QuadResult integral = integrate_smooth(f.eval, iv, tol);
            SandwichReport r = make_sandwich(f.eval(iv.midpoint()), integral.value / len,
                                             endpoint_average(f, iv),
                                             integral.abs_error_estimate / len);
            r.meta.evaluations = integral.evaluations;
            r.meta.converged = integral.tolerance_met;
            return r;
        },
        opt);
    gate.apply(report.meta);
    return report;
}

SandwichReport fejer_classical(const FunctionSpec& f, const WeightSpec& g, const VerifyOptions& opt) {
    const Interval iv = g.interval;
    require_defined(f, iv);
    Gate gate;
    require_convex(gate, f, iv, opt);
    require_weight(gate, g, iv, true, opt);
    const double f_mid = f.eval(iv.midpoint());
    const double avg = endpoint_average(f, iv);
    const RealFn fg = product(f, g);
    auto report = with_retry(
        [&](double tol) {
            const QuadResult ig = integrate_smooth(g.eval, iv, tol);
            const QuadResult ifg = integrate_smooth(fg, iv, tol);
            const double err = (std::fabs(f_mid) + std::fabs(avg)) * ig.abs_error_estimate +
                               ifg.abs_error_estimate;
            SandwichReport r = make_sandwich(f_mid * ig.value, ifg.value, avg * ig.value, err);
            r.meta.evaluations = ig.evaluations + ifg.evaluations;
            r.meta.converged = ig.tolerance_met && ifg.tolerance_met;
            return r;
        },
        opt);
    gate.apply(report.meta);
    report.meta.note += std::string(report.meta.note.empty() ? "" : "; ") +
                        "middle term without the 1/(b-a) factor";
    return report;
}

SandwichReport hh_fractional(const FunctionSpec& f, const FracSetting& s, const VerifyOptions& opt) {
    validate(s);
    const Interval iv = s.interval();
    require_defined(f, iv);
    Gate gate;
    require_convex(gate, f, iv, opt);
    const double c = unweighted_scale(s);
    auto report = with_retry(
        [&](double tol) {
            const OperatorPair ops = both_operators(f.eval, s, tol);
            SandwichReport r = make_sandwich(f.eval(iv.midpoint()), c * ops.value,
                                             endpoint_average(f, iv), c * ops.error);
            r.meta.evaluations = ops.evaluations;
            r.meta.converged = ops.converged;
            return r;
        },
        opt);
    gate.apply(report.meta);
    return report;
}

SandwichReport fejer_fractional(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                                const VerifyOptions& opt) {
    validate(s);
    const Interval iv = s.interval();
    require_defined(f, iv);
    Gate gate;
    require_convex(gate, f, iv, opt);
    require_weight(gate, g, iv, true, opt);
    const double f_mid = f.eval(iv.midpoint());
    const double avg = endpoint_average(f, iv);
    const RealFn fg = product(f, g);
    auto report = with_retry(
        [&](double tol) {
            const OperatorPair w = both_operators(g.eval, s, tol);
            const OperatorPair p = both_operators(fg, s, tol);
            const double err = (std::fabs(f_mid) + std::fabs(avg)) * w.error + p.error;
            SandwichReport r = make_sandwich(f_mid * w.value, p.value, avg * w.value, err);
            r.meta.evaluations = w.evaluations + p.evaluations;
            r.meta.converged = w.converged && p.converged;
            return r;
        },
        opt);
    gate.apply(report.meta);
    return report;
}

// ---------------------------------------------------------------------------
// Identities

IdentityReport identity_unweighted(const FunctionSpec& f, const FracSetting& s,
                                   const VerifyOptions& opt) {
    validate(s);
    const Interval iv = s.interval();
    require_defined(f, iv);
    require_derivative(f);
    Gate gate;
    const double alpha = s.alpha;
    const RealFn kernel_side = [&](double t) {
        const double x = t * iv.a + (1.0 - t) * iv.b;
        return (std::pow(1.0 - t, alpha) - std::pow(t, alpha)) * (*f.deriv)(x);
    };
    const double half_len = 0.5 * iv.length();
    IdentityReport report = identity_with_retry(
        [&](double tol) {
            const UnweightedGap lhs = unweighted_gap(f, s, tol);
            const QuadResult rhs = integrate_smooth(kernel_side, Interval{0.0, 1.0}, tol);
            IdentityReport r = make_identity(lhs.value, half_len * rhs.value,
                                             lhs.error + half_len * rhs.abs_error_estimate);
            r.meta.evaluations = lhs.evaluations + rhs.evaluations;
            r.meta.converged = lhs.converged && rhs.tolerance_met;
            return r;
        },
        opt);
    gate.apply(report.meta);
    return report;
}

TrapezoidGap weighted_trapezoid_gap(const FunctionSpec& f, const WeightSpec& g,
                                    const FracSetting& s, double tol) {
    const double avg = endpoint_average(f, s.interval());
    const OperatorPair w = both_operators(g.eval, s, tol);
    const OperatorPair p = both_operators(product(f, g), s, tol);
    return TrapezoidGap{avg * w.value - p.value, std::fabs(avg) * w.error + p.error,
                        w.evaluations + p.evaluations, w.converged && p.converged};
}

IdentityReport identity_weighted(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                                 const VerifyOptions& opt) {
    validate(s);
    const Interval iv = s.interval();
    require_defined(f, iv);
    require_derivative(f);
    Gate gate;
    require_weight(gate, g, iv, false, opt);
    const double inv_gamma = 1.0 / gamma(s.alpha);

    // int_a^b |f'| scales the kernel's pointwise error into the outer integral.
    const QuadResult deriv_mass =
        integrate_smooth([&](double t) { return std::fabs((*f.deriv)(t)); }, iv, 1e-6);

    IdentityReport report = identity_with_retry(
        [&](double tol) {
            const TrapezoidGap lhs = weighted_trapezoid_gap(f, g, s, tol);
            const CumulativeKernel kernel(g.eval, iv, s.alpha, opt.kernel_mesh, tol);
            double kernel_err = kernel.max_node_error();
            std::size_t kernel_evals = kernel.build_evaluations();
            const RealFn integrand = [&](double t) {
                const KernelValue k = kernel.evaluate(t);
                kernel_err = std::max(kernel_err, k.abs_error_estimate);
                kernel_evals += k.evaluations;
                return k.value * (*f.deriv)(t);
            };
            const QuadResult outer = integrate_smooth(integrand, iv, tol / inv_gamma);
            const double rhs_err =
                inv_gamma * (outer.abs_error_estimate +
                             kernel_err * (deriv_mass.value + deriv_mass.abs_error_estimate));
            IdentityReport r = make_identity(lhs.value, inv_gamma * outer.value, lhs.abs_error + rhs_err);
            r.meta.evaluations = lhs.evaluations + kernel_evals + outer.evaluations;
            r.meta.converged = lhs.converged && kernel.accurate() && outer.tolerance_met;
            return r;
        },
        opt);
    gate.apply(report.meta);
    return report;
}

// ---------------------------------------------------------------------------
// Bound constants

double bound_constant_1_5(const FracSetting& s, double fpa, double fpb) {
    const double len = s.b - s.a;
    return len / (2.0 * (s.alpha + 1.0)) * (1.0 - std::pow(2.0, -s.alpha)) *
           (std::fabs(fpa) + std::fabs(fpb));
}

double bound_constant_2_4(const FracSetting& s, double g_sup, double fpa, double fpb) {
    const double len = s.b - s.a;
    return std::pow(len, s.alpha + 1.0) * g_sup / ((s.alpha + 1.0) * gamma(s.alpha + 1.0)) *
           (1.0 - std::pow(2.0, -s.alpha)) * (std::fabs(fpa) + std::fabs(fpb));
}

double bound_constant_2_5(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb) {
    const double len = s.b - s.a;
    return 2.0 * std::pow(len, s.alpha + 1.0) * g_sup /
           (std::pow(len, 1.0 / pair.q) * (s.alpha + 1.0) * gamma(s.alpha + 1.0)) *
           (1.0 - std::pow(2.0, -s.alpha)) * power_mean(fpa, fpb, pair.q);
}

double bound_constant_2_5_rederived(const FracSetting& s, double g_sup, HolderPair pair, double fpa,
                                    double fpb) {
    return bound_constant_2_5(s, g_sup, pair, fpa, fpb) * std::pow(s.b - s.a, 1.0 / pair.q);
}

double bound_constant_2_6(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb) {
    const double len = s.b - s.a;
    const double ap = s.alpha * pair.p;
    return std::pow(2.0, 1.0 / pair.p) * g_sup * std::pow(len, s.alpha + 1.0) /
           (std::pow(ap + 1.0, 1.0 / pair.p) * gamma(s.alpha + 1.0)) *
           std::pow(1.0 - std::pow(2.0, -ap), 1.0 / pair.p) * power_mean(fpa, fpb, pair.q);
}

double bound_constant_2_7(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb) {
    const double len = s.b - s.a;
    return g_sup * std::pow(len, s.alpha + 1.0) /
           (std::pow(s.alpha * pair.p + 1.0, 1.0 / pair.p) * gamma(s.alpha + 1.0)) *
           power_mean(fpa, fpb, pair.q);
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

struct DerivBoundSetup {
    Gate gate;
    double fpa;
    double fpb;
};

DerivBoundSetup derivative_bound_setup(const FunctionSpec& f, const FracSetting& s, double q,
                                       const VerifyOptions& opt) {
    validate(s);
    require_defined(f, s.interval());
    require_derivative(f);
    DerivBoundSetup setup{Gate{}, deriv_at(f, s.a), deriv_at(f, s.b)};
    require_deriv_convex(setup.gate, f, q, opt);
    return setup;
}

template <typename Constant>
BoundReport weighted_bound(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                           double q, const VerifyOptions& opt, Constant constant) {
    DerivBoundSetup setup = derivative_bound_setup(f, s, q, opt);
    require_weight(setup.gate, g, s.interval(), false, opt);
    const double g_sup = sup_norm(g);
    const double bound = constant(g_sup, setup.fpa, setup.fpb);
    BoundReport report = with_retry(
        [&](double tol) {
            const TrapezoidGap gap = weighted_trapezoid_gap(f, g, s, tol);
            BoundReport r = make_bound(std::fabs(gap.value), bound, gap.abs_error);
            r.meta.evaluations = gap.evaluations;
            r.meta.converged = gap.converged;
            return r;
        },
        opt);
    setup.gate.apply(report.meta);
    return report;
}

} // namespace

BoundReport bound_unweighted(const FunctionSpec& f, const FracSetting& s, const VerifyOptions& opt) {
    DerivBoundSetup setup = derivative_bound_setup(f, s, 1.0, opt);
    const double bound = bound_constant_1_5(s, setup.fpa, setup.fpb);
    BoundReport report = with_retry(
        [&](double tol) {
            const UnweightedGap gap = unweighted_gap(f, s, tol);
            BoundReport r = make_bound(std::fabs(gap.value), bound, gap.error);
            r.meta.evaluations = gap.evaluations;
            r.meta.converged = gap.converged;
            return r;
        },
        opt);
    setup.gate.apply(report.meta);
    return report;
}

BoundReport bound_thm24(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                        const VerifyOptions& opt) {
    return weighted_bound(f, g, s, 1.0, opt, [&](double g_sup, double fpa, double fpb) {
        return bound_constant_2_4(s, g_sup, fpa, fpb);
    });
}

BoundReport bound_thm25(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                        HolderPair pair, const VerifyOptions& opt) {
    validate_pair(pair);
    BoundReport r = weighted_bound(f, g, s, pair.q, opt, [&](double g_sup, double fpa, double fpb) {
        return bound_constant_2_5(s, g_sup, pair, fpa, fpb);
    });
    if (s.b - s.a != 1.0) {
        const double rederived = bound_constant_2_5_rederived(s, sup_norm(g), pair, deriv_at(f, s.a),
                                                              deriv_at(f, s.b));
        r.meta.note += std::string(r.meta.note.empty() ? "" : "; ") +
                       "bound scales as (b-a)^(alpha+1-1/q); rederived constant " +
                       std::to_string(rederived);
    }
    return r;
}

BoundReport bound_thm26_i(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                          HolderPair pair, const VerifyOptions& opt) {
    validate_pair(pair);
    return weighted_bound(f, g, s, pair.q, opt, [&](double g_sup, double fpa, double fpb) {
        return bound_constant_2_6(s, g_sup, pair, fpa, fpb);
    });
}

BoundReport bound_thm26_ii(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                           HolderPair pair, const VerifyOptions& opt) {
    validate_pair(pair);
    if (!(s.alpha > 0.0 && s.alpha <= 1.0)) {
        throw DomainError("bound-2-7 holds only for 0 < alpha <= 1, got alpha = " +
                          std::to_string(s.alpha));
    }
    return weighted_bound(f, g, s, pair.q, opt, [&](double g_sup, double fpa, double fpb) {
        return bound_constant_2_7(s, g_sup, pair, fpa, fpb);
    });
}

// ---------------------------------------------------------------------------
// Auxiliary integrals and the scalar lemma

AuxIntegrals aux_integrals(const FracSetting& s, double tol) {
    validate(s);
    const double a = s.a;
    const double b = s.b;
    const double m = 0.5 * (a + b);
    const double alpha = s.alpha;
    const double len = b - a;
    const double lead = std::pow(len, alpha + 2.0) / (alpha + 1.0);
    const double half_pow = std::pow(2.0, -(alpha + 1.0));

    AuxIntegrals out;
    out.e_closed = lead * ((alpha + 1.0) / (alpha + 2.0) - half_pow);
    out.f_closed = lead * (1.0 / (alpha + 2.0) - half_pow);

    auto lower_diff = [=](double t) { return std::pow(b - t, alpha) - std::pow(t - a, alpha); };
    auto upper_diff = [=](double t) { return std::pow(t - a, alpha) - std::pow(b - t, alpha); };

    const double abs_tol = tol * std::max(1.0, lead);
    const QuadResult e1 = integrate_smooth([&](double t) { return lower_diff(t) * (b - t); }, {a, m}, abs_tol);
    const QuadResult e2 = integrate_smooth([&](double t) { return upper_diff(t) * (t - a); }, {m, b}, abs_tol);
    const QuadResult f1 = integrate_smooth([&](double t) { return lower_diff(t) * (t - a); }, {a, m}, abs_tol);
    const QuadResult f2 = integrate_smooth([&](double t) { return upper_diff(t) * (b - t); }, {m, b}, abs_tol);

    out.e_numeric = e1.value;
    out.e_numeric_mirror = e2.value;
    out.f_numeric = f1.value;
    out.f_numeric_mirror = f2.value;
    out.abs_error = std::max({e1.abs_error_estimate, e2.abs_error_estimate, f1.abs_error_estimate,
                              f2.abs_error_estimate});
    out.evaluations = e1.evaluations + e2.evaluations + f1.evaluations + f2.evaluations;
    out.converged = e1.tolerance_met && e2.tolerance_met && f1.tolerance_met && f2.tolerance_met;
    return out;
}

namespace {

constexpr double kPowerLemmaSlack = 1e-15;

void check_power_lemma_domain(double a, double b, double alpha) {
    if (!(a >= 0.0) || !(b >= a) || !std::isfinite(b)) {
        throw DomainError("power lemma requires 0 <= a <= b");
    }
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("power lemma requires 0 < alpha <= 1");
    }
}

} // namespace

PowerLemmaResult scalar_power_lemma(double a, double b, double alpha) {
    check_power_lemma_domain(a, b, alpha);
    PowerLemmaResult r;
    r.lhs = std::fabs(std::pow(a, alpha) - std::pow(b, alpha));
    r.rhs = std::pow(b - a, alpha);
    r.holds = r.lhs <= r.rhs + kPowerLemmaSlack;
    return r;
}

PowerLemmaFuzz power_lemma_fuzz(std::size_t trials, std::uint64_t seed, double upper) {
    constexpr std::size_t kBlock = 4096;
    SeededUniform rng(seed);
    PowerLemmaFuzz out;
    out.trials = trials;
    out.seed = seed;
    out.worst_excess = -std::numeric_limits<double>::infinity();
    std::vector<double> lhs(kBlock);
    std::vector<double> rhs(kBlock);
    for (std::size_t done = 0; done < trials;) {
        const std::size_t n = std::min(kBlock, trials - done);
        for (std::size_t i = 0; i < n; ++i) {
            double a = rng.uniform(0.0, upper);
            double b = rng.uniform(0.0, upper);
            if (a > b) {
                std::swap(a, b);
            }
            const double alpha = 1.0 - rng.next();  // (0, 1]
            lhs[i] = std::fabs(std::pow(a, alpha) - std::pow(b, alpha));
            rhs[i] = std::pow(b - a, alpha);
            out.worst_excess = std::max(out.worst_excess, lhs[i] - rhs[i]);
        }
        out.violations += kernels::count_exceeding(std::span(lhs).first(n), std::span(rhs).first(n),
                                                   kPowerLemmaSlack);
        done += n;
    }
    return out;
}

} // namespace frachh
