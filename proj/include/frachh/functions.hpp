#pragma once

#include "frachh/numerics.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace frachh {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// What is known analytically about a test function.
///  - Unverified: nothing.
///  - AnalyticConvex: f is convex on its domain.
///  - AnalyticDerivConvex: f is convex and |f'|^q is convex for every
///    q >= min_q (convexity of |f'|^q passes to larger q).
struct ConvexityKind {
    enum class Kind { Unverified, AnalyticConvex, AnalyticDerivConvex };

    Kind kind = Kind::Unverified;
    double min_q = std::numeric_limits<double>::infinity();

    static ConvexityKind unverified() { return {}; }
    static ConvexityKind convex() { return {Kind::AnalyticConvex, std::numeric_limits<double>::infinity()}; }
    static ConvexityKind deriv_convex(double min_q = 1.0) { return {Kind::AnalyticDerivConvex, min_q}; }

    bool is_convex() const noexcept { return kind != Kind::Unverified; }
    bool deriv_power_convex(double q) const noexcept {
        return kind == Kind::AnalyticDerivConvex && q >= min_q;
    }
    std::string describe() const;
};

struct FunctionSpec {
    std::string label;
    RealFn eval;
    std::optional<RealFn> deriv;
    ConvexityKind convexity;
    /// Open or closed domain on which eval (and deriv) are finite.
    double domain_lo = -std::numeric_limits<double>::infinity();
    double domain_hi = std::numeric_limits<double>::infinity();
    bool domain_lo_open = false;

    bool has_derivative() const noexcept { return deriv.has_value(); }
    bool defined_on(Interval iv) const noexcept;
};

/// A weight bound to the interval it was built for. The symmetric and
/// nonnegative flags are set from grid checks, never asserted by hand.
struct WeightSpec {
    std::string label;
    RealFn eval;
    Interval interval;
    bool nonnegative = false;
    bool symmetric = false;

    double operator()(double x) const { return eval(x); }
};

struct HolderPair {
    double p;
    double q;

    /// Conjugate pair from q > 1.
    static HolderPair from_q(double q);
    /// Conjugate pair from p > 1.
    static HolderPair from_p(double p);
};

/// Throws DomainError unless p, q > 1 and 1/p + 1/q = 1 to 1e-12.
void validate(const HolderPair& pair);

// Grid used for weight metadata checks.
inline constexpr std::size_t kWeightGrid = 1001;
inline constexpr double kSymmetryTol = 1e-12;

/// Builds a WeightSpec, deriving both flags from the 1001-point grid checks.
WeightSpec make_weight(std::string label, RealFn g, Interval iv);

bool is_symmetric_on_grid(const RealFn& g, Interval iv);
bool is_nonnegative_on_grid(const RealFn& g, Interval iv);

std::vector<FunctionSpec> builtin_function_corpus(std::uint64_t seed = kDefaultSeed);
std::vector<WeightSpec> builtin_weight_corpus(Interval iv, std::uint64_t seed = kDefaultSeed);

/// Throws PreconditionError listing the known labels if none matches.
const FunctionSpec& find_function(const std::vector<FunctionSpec>& corpus, const std::string& label);
const WeightSpec& find_weight(const std::vector<WeightSpec>& corpus, const std::string& label);

/// x -> (g(x) + g(a + b - x)) / 2.
WeightSpec symmetrize(const RealFn& g_raw, Interval iv, std::string label = "symmetrized");

struct ConvexityReport {
    bool convex = false;
    /// max over samples of f(lx + (1-l)y) - (l f(x) + (1-l) f(y)).
    double worst_violation = 0.0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

inline constexpr double kConvexitySlack = 1e-10;

/// Sampling-based refutation of convexity on [a, b]. samples >= 100.
ConvexityReport check_convexity(const FunctionSpec& f, Interval iv, std::size_t samples = 1000,
                                std::uint64_t seed = kDefaultSeed);

/// sup |g| on [a, b]: a 4097-point scan refined by golden-section search
/// around the best grid point.
double sup_norm(const RealFn& g, Interval iv, std::size_t grid = 4097);
inline double sup_norm(const WeightSpec& g) { return sup_norm(g.eval, g.interval); }

struct DerivativeCheck {
    bool passed = false;
    double worst_error = 0.0;
    double worst_at = 0.0;
};

/// Compares f.deriv with central differences (h = 1e-5) at `points`
/// interior points. The allowance C h^2 uses C = 1 + |f'''| estimated from
/// the samples' own second differences.
DerivativeCheck check_derivative(const FunctionSpec& f, Interval iv, std::size_t points = 99);

} // namespace frachh
