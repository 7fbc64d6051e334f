#include "frachh/oracle.hpp"

#include "frachh/error.hpp"

#include <cmath>
#include <string>

namespace frachh::oracle {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double checked(const RealFn& h, double x) {
    const double y = h(x);
    if (!std::isfinite(y)) {
        throw EvaluationError("oracle integrand returned a non-finite value", x);
    }
    return y;
}

} // namespace

double dense_singular_integral(const RealFn& h, Interval iv, double alpha, KernelSide side,
                               std::size_t panels) {
    if (!(iv.a < iv.b)) {
        throw DomainError("oracle: interval requires a < b");
    }
    if (!(alpha > 0.0)) {
        throw DomainError("oracle: alpha must be positive");
    }
    if (panels < kMinDensePanels) {
        throw DomainError("oracle: at least 1e5 panels required");
    }
    const bool upper = side == KernelSide::UpperSingular;
    const double len = iv.b - iv.a;
    // Maps a distance from the singular endpoint back to t.
    auto at_distance = [&](double d) { return upper ? iv.b - d : iv.a + d; };
    const double n = static_cast<double>(panels);

    CompensatedSum acc;
    if (alpha < 1.0) {
        // t = endpoint -+ u^(1/alpha), dt = (1/alpha) u^(1/alpha - 1) du, and
        // distance^(alpha-1) = u^((alpha-1)/alpha): the product is 1/alpha.
        const double u_max = std::pow(len, alpha);
        const double step = u_max / n;
        const double expo = 1.0 / alpha;
        for (std::size_t i = 0; i < panels; ++i) {
            const double u = (static_cast<double>(i) + 0.5) * step;
            acc.add(checked(h, at_distance(std::pow(u, expo))));
        }
        return acc.value() * step / alpha;
    }

    const double step = len / n;
    for (std::size_t i = 0; i < panels; ++i) {
        const double d = (static_cast<double>(i) + 0.5) * step;
        acc.add(std::pow(d, alpha - 1.0) * checked(h, at_distance(d)));
    }
    return acc.value() * step;
}

double beta_moment(double alpha, int n, Interval iv) {
    if (!(alpha > 0.0)) {
        throw DomainError("beta_reference: alpha must be positive");
    }
    if (n < 0 || n > 12) {
        throw DomainError("beta_reference: monomial degree must lie in [0, 12], got " +
                          std::to_string(n));
    }
    if (!(iv.a < iv.b)) {
        throw DomainError("beta_reference: interval requires a < b");
    }
    const double len = iv.b - iv.a;
    const double beta = std::tgamma(alpha) * std::tgamma(n + 1.0) / std::tgamma(n + 1.0 + alpha);
    return beta * std::pow(len, n + alpha);
}

double beta_reference(double alpha, int n, Interval iv) {
    beta_moment(alpha, n, iv);  // argument validation
    return std::tgamma(n + 1.0) / std::tgamma(n + 1.0 + alpha) * std::pow(iv.b - iv.a, n + alpha);
}

double finite_difference_derivative(const RealFn& f, double x, double h) {
    if (!(h > 0.0)) {
        throw DomainError("finite difference step must be positive");
    }
    const double fp = f(x + h);
    const double fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
        throw EvaluationError("finite difference sample is non-finite", x);
    }
    return (fp - fm) / (2.0 * h);
}

} // namespace frachh::oracle
