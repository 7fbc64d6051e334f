#include "frachh/error.hpp"
#include "frachh/functions.hpp"
#include "frachh/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace frachh {

std::string ConvexityKind::describe() const {
    switch (kind) {
    case Kind::Unverified:
        return "Unverified";
    case Kind::AnalyticConvex:
        return "AnalyticConvex";
    case Kind::AnalyticDerivConvex: {
        std::ostringstream os;
        os << "AnalyticDerivConvex(q>=" << min_q << ")";
        return os.str();
    }
    }
    return "Unverified";
}

bool FunctionSpec::defined_on(Interval iv) const noexcept {
    const bool lower_ok = domain_lo_open ? iv.a > domain_lo : iv.a >= domain_lo;
    return lower_ok && iv.b <= domain_hi;
}

std::vector<FunctionSpec> builtin_function_corpus(std::uint64_t seed) {
    std::vector<FunctionSpec> corpus;

    // |2x|^q is convex for q >= 1.
    corpus.push_back({"sq", [](double x) { return x * x; }, RealFn([](double x) { return 2.0 * x; }),
                      ConvexityKind::deriv_convex()});

    // |exp|^q = exp(qx).
    corpus.push_back({"exp", [](double x) { return std::exp(x); },
                      RealFn([](double x) { return std::exp(x); }), ConvexityKind::deriv_convex()});

    // |4(x-c)^3|^q = 4^q |x-c|^(3q), convex for 3q >= 1.
    constexpr double kQuarticCenter = 0.25;
    corpus.push_back({"quartic",
                      [](double x) {
                          const double d = x - kQuarticCenter;
                          return d * d * d * d;
                      },
                      RealFn([](double x) {
                          const double d = x - kQuarticCenter;
                          return 4.0 * d * d * d;
                      }),
                      ConvexityKind::deriv_convex()});

    // f' = -1/x; |f'|^q = x^(-q) is convex on x > 0.
    {
        FunctionSpec f{"neglog", [](double x) { return -std::log(x); },
                       RealFn([](double x) { return -1.0 / x; }), ConvexityKind::deriv_convex()};
        f.domain_lo = 0.0;
        f.domain_lo_open = true;
        corpus.push_back(std::move(f));
    }

    // f'' = 1/x > 0, but |1 + log x| is concave for x > 1/e.
    {
        FunctionSpec f{"xlogx", [](double x) { return x * std::log(x); },
                       RealFn([](double x) { return 1.0 + std::log(x); }), ConvexityKind::convex()};
        f.domain_lo = 0.0;
        f.domain_lo_open = true;
        corpus.push_back(std::move(f));
    }

    // |sinh x| = sinh|x| is convex; raising a nonnegative convex function to
    // q >= 1 keeps it convex.
    corpus.push_back({"cosh", [](double x) { return std::cosh(x); },
                      RealFn([](double x) { return std::sinh(x); }), ConvexityKind::deriv_convex()});

    // Equality case of every inequality; |f'|^q is constant.
    corpus.push_back({"linear", [](double x) { return 2.0 * x + 1.0; },
                      RealFn([](double) { return 2.0; }), ConvexityKind::deriv_convex()});

    // f' is the logistic function, which is not convex.
    corpus.push_back({"softplus",
                      [](double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); },
                      RealFn([](double x) { return 1.0 / (1.0 + std::exp(-x)); }),
                      ConvexityKind::convex()});

    // A (x - c)^2 + B with A > 0: |2A(x - c)|^q convex for q >= 1.
    {
        SeededUniform rng(seed);
        const double amp = rng.uniform(0.5, 2.0);
        const double center = rng.uniform(-1.0, 2.0);
        const double offset = rng.uniform(0.0, 1.0);
        corpus.push_back({"randquad",
                          [=](double x) { return amp * (x - center) * (x - center) + offset; },
                          RealFn([=](double x) { return 2.0 * amp * (x - center); }),
                          ConvexityKind::deriv_convex()});
    }

    // No derivative at the kink; excluded from derivative-based checks.
    constexpr double kKink = 0.5;
    corpus.push_back({"abs", [](double x) { return std::fabs(x - kKink); }, std::nullopt,
                      ConvexityKind::convex()});

    // max of three lines; kinks at x = 0 and x = 1.
    corpus.push_back({"pwlinear",
                      [](double x) { return std::max({-x, 0.5 * x, 2.0 * x - 1.5}); }, std::nullopt,
                      ConvexityKind::convex()});

    return corpus;
}

std::vector<WeightSpec> builtin_weight_corpus(Interval iv, std::uint64_t seed) {
    validate_interval(iv);
    const double a = iv.a;
    const double b = iv.b;
    const double m = iv.midpoint();
    const double len = iv.length();

    std::vector<WeightSpec> corpus;
    corpus.push_back(make_weight("unit", [](double) { return 1.0; }, iv));
    corpus.push_back(make_weight("parabolic", [=](double x) { return (x - a) * (b - x); }, iv));
    corpus.push_back(make_weight("vee", [=](double x) { return std::fabs(x - m); }, iv));

    const double lambda = 8.0 / (len * len);
    corpus.push_back(make_weight("bump", [=](double x) { return std::exp(-lambda * (x - m) * (x - m)); }, iv));

    corpus.push_back(make_weight(
        "cosine", [=](double x) { return std::cos(std::numbers::pi * (x - m) / len); }, iv));

    {
        SeededUniform rng(seed ^ 0x5eed5eedULL);
        std::array<double, 5> coeff{1.0, 0.0, 0.0, 0.0, 0.0};
        for (std::size_t k = 1; k < coeff.size(); ++k) {
            coeff[k] = rng.uniform(0.0, 1.0);
        }
        const RealFn raw = [=](double x) {
            const double s = (x - a) / len;
            double acc = 0.0;
            for (std::size_t k = coeff.size(); k-- > 0;) {
                acc = acc * s + coeff[k];
            }
            return acc;
        };
        corpus.push_back(symmetrize(raw, iv, "randpoly"));
    }

    // Symmetric but sign-changing: admissible for the trapezoid identity and
    // the derivative bounds, not for the sandwich inequalities.
    corpus.push_back(make_weight(
        "signed", [=](double x) { return std::cos(2.0 * std::numbers::pi * (x - m) / len); }, iv));

    return corpus;
}

namespace {

template <typename Spec>
const Spec& find_by_label(const std::vector<Spec>& corpus, const std::string& label,
                          const char* kind) {
    for (const Spec& s : corpus) {
        if (s.label == label) {
            return s;
        }
    }
    std::string known;
    for (const Spec& s : corpus) {
        known += (known.empty() ? "" : ", ") + s.label;
    }
    throw PreconditionError(std::string("unknown ") + kind + " label '" + label +
                            "' (known: " + known + ")");
}

} // namespace

const FunctionSpec& find_function(const std::vector<FunctionSpec>& corpus, const std::string& label) {
    return find_by_label(corpus, label, "function");
}

const WeightSpec& find_weight(const std::vector<WeightSpec>& corpus, const std::string& label) {
    return find_by_label(corpus, label, "weight");
}

} // namespace frachh
