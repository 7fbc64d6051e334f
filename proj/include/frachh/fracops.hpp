#pragma once

#include "frachh/functions.hpp"
#include "frachh/numerics.hpp"

namespace frachh {

/// Interval [a, b] and fractional order alpha. With strict_domain the
/// operators also require a >= 0.
struct FracSetting {
    double a = 0.0;
    double b = 1.0;
    double alpha = 1.0;
    bool strict_domain = false;

    Interval interval() const noexcept { return {a, b}; }
};

/// Throws DomainError on a >= b, alpha <= 0 (alpha = 0 included), or
/// a < 0 under strict_domain.
void validate(const FracSetting& s);

/// Left Riemann-Liouville integral evaluated at the right endpoint:
///   J_{a+}^alpha h(b) = 1/Gamma(alpha) int_a^b (b - t)^(alpha-1) h(t) dt.
/// `tol` bounds the absolute error of the returned value.
QuadResult j_left(const RealFn& h, const FracSetting& s, double tol = kDefaultTol);

/// Right Riemann-Liouville integral evaluated at the left endpoint:
///   J_{b-}^alpha h(a) = 1/Gamma(alpha) int_a^b (t - a)^(alpha-1) h(t) dt.
QuadResult j_right(const RealFn& h, const FracSetting& s, double tol = kDefaultTol);

/// (b - a)^alpha / Gamma(alpha + 1): both operators applied to h = 1.
double j_of_constant(const FracSetting& s);

enum class Status { Holds, Violated, Inconclusive };

struct SymmetryReport {
    double left = 0.0;
    double right = 0.0;
    /// |left - right| / max(|left|, |right|, 1).
    double gap = 0.0;
    /// Combined quadrature error on the same relative scale, floored at 1e-12.
    double error_budget = 0.0;
    std::size_t evaluations = 0;
    Status status = Status::Inconclusive;
};

/// For a weight symmetric about the midpoint the two endpoint integrals
/// coincide. Throws PreconditionError if g is not flagged symmetric.
SymmetryReport check_symmetry_lemma(const WeightSpec& g, const FracSetting& s,
                                    double tol = kDefaultTol);

} // namespace frachh
