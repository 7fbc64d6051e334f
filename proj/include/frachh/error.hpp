#pragma once

#include <stdexcept>
#include <string>

namespace frachh {

/// Argument outside the mathematical domain of an operation (x <= 0 for
/// gamma, alpha <= 0, a >= b, alpha > 1 where a bound requires alpha <= 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An integrand or function returned a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double abscissa)
        : std::runtime_error(what + " (at x = " + std::to_string(abscissa) + ")"),
          abscissa_(abscissa) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// Inputs do not meet the hypotheses a verifier requires.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace frachh
