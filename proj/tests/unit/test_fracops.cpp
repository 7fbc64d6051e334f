#include "frachh/error.hpp"
#include "frachh/fracops.hpp"
#include "frachh/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace frachh;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double rel(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

} // namespace

TEST_CASE("setting validation") {
    CHECK_NOTHROW(validate(FracSetting{-1.0, 2.0, 0.5}));
    CHECK_THROWS_AS(validate(FracSetting{-1.0, 2.0, 0.5, true}), DomainError);
    CHECK_THROWS_AS(validate(FracSetting{0.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate(FracSetting{0.0, 1.0, -0.5}), DomainError);
    CHECK_THROWS_AS(validate(FracSetting{1.0, 1.0, 0.5}), DomainError);
}

TEST_CASE("operator examples") {
    const FracSetting half{0.0, 1.0, 0.5};
    auto one = [](double) { return 1.0; };
    auto sq = [](double x) { return x * x; };
    CHECK(j_left(one, half).value == doctest::Approx(1.1283791671).epsilon(1e-10));
    CHECK(j_right(one, half).value == doctest::Approx(1.1283791671).epsilon(1e-10));
    CHECK(j_left(sq, half).value == doctest::Approx(16.0 / (15.0 * kSqrtPi)).epsilon(1e-12));
    CHECK(j_right(sq, half).value == doctest::Approx(0.4 / kSqrtPi).epsilon(1e-12));

    const FracSetting classical{0.0, 1.0, 1.0};
    CHECK(j_left(sq, classical).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(j_right(sq, classical).value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("operators match the Beta oracle") {
    for (double alpha : {0.25, 0.5, 1.5, 3.0}) {
        const FracSetting s{1.0, 3.0, alpha};
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(alpha);
            CAPTURE(n);
            const double want = oracle::beta_reference(alpha, n, s.interval());
            CHECK(rel(j_left([=](double t) { return std::pow(t - 1.0, n); }, s, 1e-12).value, want) <= 1e-10);
            CHECK(rel(j_right([=](double t) { return std::pow(3.0 - t, n); }, s, 1e-12).value, want) <= 1e-10);
        }
    }
}

TEST_CASE("constant identity and alpha = 1 reduction") {
    for (double alpha : {0.25, 0.7, 1.0, 2.0}) {
        const FracSetting s{-1.0, 2.0, alpha};
        const double want = j_of_constant(s);
        CHECK(rel(j_left([](double) { return 1.0; }, s).value, want) <= 1e-10);
        CHECK(rel(j_right([](double) { return 1.0; }, s).value, want) <= 1e-10);
    }
    auto h = [](double x) { return std::exp(x) * std::sin(x); };
    const FracSetting s{0.0, 2.0, 1.0};
    const double plain = integrate_smooth(h, s.interval()).value;
    CHECK(rel(j_left(h, s).value, plain) <= 1e-10);
    CHECK(rel(j_right(h, s).value, plain) <= 1e-10);
}

TEST_CASE("linearity and reflection") {
    auto h1 = [](double x) { return std::cos(x); };
    auto h2 = [](double x) { return x * x * x; };
    const FracSetting s{1.0, 3.0, 0.6};
    const QuadResult a = j_left(h1, s);
    const QuadResult b = j_left(h2, s);
    const QuadResult c = j_left([&](double x) { return 2.0 * h1(x) - 0.5 * h2(x); }, s);
    CHECK(std::fabs(c.value - (2.0 * a.value - 0.5 * b.value)) <=
          c.abs_error_estimate + 2.0 * a.abs_error_estimate + 0.5 * b.abs_error_estimate + 1e-13);

    const QuadResult left = j_left(h1, s);
    const QuadResult right = j_right([&](double x) { return h1(s.interval().reflect(x)); }, s);
    CHECK(std::fabs(left.value - right.value) <= left.abs_error_estimate + right.abs_error_estimate + 1e-13);
}

TEST_CASE("symmetry lemma examples") {
    const Interval iv{0.0, 1.0};
    const auto corpus = builtin_weight_corpus(iv);

    const SymmetryReport unit = check_symmetry_lemma(find_weight(corpus, "unit"), {0.0, 1.0, 0.7});
    CHECK(unit.left == doctest::Approx(1.0 / std::tgamma(1.7)).epsilon(1e-10));
    CHECK(unit.status == Status::Holds);

    const SymmetryReport par = check_symmetry_lemma(find_weight(corpus, "parabolic"), {0.0, 1.0, 0.5});
    CHECK(par.left == doctest::Approx(4.0 / (15.0 * kSqrtPi)).epsilon(1e-10));
    CHECK(par.right == doctest::Approx(0.1504505556).epsilon(1e-9));
    CHECK(par.gap <= 1e-8);

    const SymmetryReport vee = check_symmetry_lemma(find_weight(corpus, "vee"), {0.0, 1.0, 1.0});
    CHECK(vee.left == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(vee.right == doctest::Approx(0.25).epsilon(1e-12));

    const WeightSpec skew = make_weight("skew", [](double x) { return x; }, iv);
    CHECK_THROWS_AS(check_symmetry_lemma(skew, {0.0, 1.0, 0.5}), PreconditionError);
}
