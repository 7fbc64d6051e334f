#pragma once

// One verifier per inequality or identity of the fractional
// Hermite-Hadamard-Fejer family. Every verifier returns a report with the
// computed terms, an error budget built from the quadrature error
// estimates, and a tri-state status.
//
// Status rules (shared by all reports):
//   Violated      a margin is below -error_budget;
//   Holds         every margin is >= -error_budget and all quadratures
//                 met their tolerance;
//   Inconclusive  no violation, but a quadrature missed its tolerance.
// A first pass that lands a margin inside [-error_budget, 0) or misses a
// tolerance is repeated once at tol / 100 before the verdict is final.

#include "frachh/fracops.hpp"
#include "frachh/functions.hpp"
#include "frachh/numerics.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace frachh {

std::string_view to_string(Status s) noexcept;

struct VerifyOptions {
    double tol = kDefaultTol;
    /// Run on inputs that do not meet the hypotheses; reports are then
    /// marked hypotheses_met = false instead of throwing.
    bool force = false;
    bool retry = true;
    std::size_t kernel_mesh = kDefaultKernelMesh;
    /// Seed for sampled convexity checks of Unverified functions.
    std::uint64_t seed = kDefaultSeed;
};

struct ReportMeta {
    std::size_t evaluations = 0;
    double tol_used = kDefaultTol;
    bool retried = false;
    bool converged = true;
    bool hypotheses_met = true;
    std::string note;
};

struct SandwichReport {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
    double lower_margin = 0.0;  // mid - lhs
    double upper_margin = 0.0;  // rhs - mid
    double error_budget = 0.0;
    Status status = Status::Inconclusive;
    ReportMeta meta;
};

struct BoundReport {
    double observed = 0.0;  // |left-hand side|, >= 0
    double bound = 0.0;
    double slack = 0.0;     // bound - observed
    double error_budget = 0.0;
    Status status = Status::Inconclusive;
    ReportMeta meta;
};

struct IdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs|
    double scale = 1.0;     // max(|lhs|, |rhs|, 1)
    /// Relative: Holds iff residual <= error_budget * scale.
    double error_budget = 0.0;
    Status status = Status::Inconclusive;
    ReportMeta meta;
};

// Classical (integer-order) chains.
SandwichReport hh_classical(const FunctionSpec& f, Interval iv, const VerifyOptions& opt = {});
/// Weighted chain f(m) int g <= int f g <= (f(a)+f(b))/2 int g. The middle
/// term carries no 1/(b-a) factor so the chain is the alpha = 1 case of
/// fejer_fractional (up to the common factor 2).
SandwichReport fejer_classical(const FunctionSpec& f, const WeightSpec& g,
                               const VerifyOptions& opt = {});

// Fractional chains.
SandwichReport hh_fractional(const FunctionSpec& f, const FracSetting& s,
                             const VerifyOptions& opt = {});
SandwichReport fejer_fractional(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                                const VerifyOptions& opt = {});

// Trapezoid identities.
IdentityReport identity_unweighted(const FunctionSpec& f, const FracSetting& s,
                                   const VerifyOptions& opt = {});
IdentityReport identity_weighted(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                                 const VerifyOptions& opt = {});

/// Weighted trapezoid gap
///   (f(a)+f(b))/2 [J_{a+} g(b) + J_{b-} g(a)] - [J_{a+}(fg)(b) + J_{b-}(fg)(a)],
/// the left-hand side shared by the weighted bounds.
struct TrapezoidGap {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};
TrapezoidGap weighted_trapezoid_gap(const FunctionSpec& f, const WeightSpec& g,
                                    const FracSetting& s, double tol);

// Closed-form bound constants (pure arithmetic on the inputs).
double bound_constant_1_5(const FracSetting& s, double fpa, double fpb);
double bound_constant_2_4(const FracSetting& s, double g_sup, double fpa, double fpb);
double bound_constant_2_5(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb);
/// The constant the bound-2-5 argument actually produces: bound_constant_2_5 times
/// (b - a)^(1/q). The two agree when b - a = 1.
double bound_constant_2_5_rederived(const FracSetting& s, double g_sup, HolderPair pair, double fpa,
                                    double fpb);
double bound_constant_2_6(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb);
double bound_constant_2_7(const FracSetting& s, double g_sup, HolderPair pair, double fpa, double fpb);

// Derivative-based upper bounds.
BoundReport bound_unweighted(const FunctionSpec& f, const FracSetting& s,
                             const VerifyOptions& opt = {});
BoundReport bound_thm24(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                        const VerifyOptions& opt = {});
BoundReport bound_thm25(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                        HolderPair pair, const VerifyOptions& opt = {});
BoundReport bound_thm26_i(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                          HolderPair pair, const VerifyOptions& opt = {});
/// Requires 0 < alpha <= 1; DomainError otherwise (also under force).
BoundReport bound_thm26_ii(const FunctionSpec& f, const WeightSpec& g, const FracSetting& s,
                           HolderPair pair, const VerifyOptions& opt = {});

struct AuxIntegrals {
    double e_closed = 0.0;
    double e_numeric = 0.0;         // over [a, m] against (b - t)
    double e_numeric_mirror = 0.0;  // over [m, b] against (t - a)
    double f_closed = 0.0;
    double f_numeric = 0.0;         // over [a, m] against (t - a)
    double f_numeric_mirror = 0.0;  // over [m, b] against (b - t)
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// Closed forms of the two auxiliary integrals used by bound-2-4 and
/// their direct quadratures. `tol` is relative to max(1, (b-a)^(alpha+2)/(alpha+1)).
AuxIntegrals aux_integrals(const FracSetting& s, double tol = 1e-13);

struct PowerLemmaResult {
    double lhs = 0.0;  // |a^alpha - b^alpha|
    double rhs = 0.0;  // (b - a)^alpha
    bool holds = false;
};

/// |a^alpha - b^alpha| <= (b - a)^alpha for 0 <= a <= b, 0 < alpha <= 1.
PowerLemmaResult scalar_power_lemma(double a, double b, double alpha);

struct PowerLemmaFuzz {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double worst_excess = 0.0;  // max lhs - rhs
    std::uint64_t seed = 0;
};

/// Random triples 0 <= a <= b <= upper, alpha in (0, 1], checked in bulk.
PowerLemmaFuzz power_lemma_fuzz(std::size_t trials, std::uint64_t seed, double upper = 1000.0);

} // namespace frachh
