#include "frachh/error.hpp"
#include "frachh/numerics.hpp"
#include "frachh/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace frachh;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

} // namespace

TEST_CASE("gamma at exact points") {
    CHECK(frachh::gamma(1.0) == 1.0);
    CHECK(frachh::gamma(5.0) == 24.0);
    CHECK(rel_err(frachh::gamma(0.5), std::sqrt(std::numbers::pi)) <= 1e-12);
    CHECK(rel_err(frachh::gamma(1.5), 0.5 * std::sqrt(std::numbers::pi)) <= 1e-12);
}

TEST_CASE("gamma matches std::tgamma across (0, 171]") {
    double worst = 0.0;
    for (double x = 0.003; x < 171.0; x *= 1.0137) {
        worst = std::max(worst, rel_err(frachh::gamma(x), std::tgamma(x)));
    }
    for (double x : {1e-8, 0.1, 0.25, 0.75, 2.5, 10.5, 100.25, 170.9, 171.6}) {
        CAPTURE(x);
        CHECK(rel_err(frachh::gamma(x), std::tgamma(x)) <= 1e-12);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("gamma rejects its domain boundary and overflow") {
    CHECK_THROWS_AS(frachh::gamma(0.0), DomainError);
    CHECK_THROWS_AS(frachh::gamma(-1.5), DomainError);
    CHECK_THROWS_AS(frachh::gamma(std::nan("")), DomainError);
    CHECK_THROWS_AS(frachh::gamma(172.0), OverflowError);
    CHECK(std::isfinite(frachh::gamma(kGammaMaxArg)));
}

TEST_CASE("integrate_smooth on closed forms") {
    const QuadResult sq = integrate_smooth([](double x) { return x * x; }, {0.0, 1.0}, 1e-10);
    CHECK(sq.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(sq.tolerance_met);
    CHECK(sq.evaluations >= 1);

    CHECK(integrate_smooth([](double) { return 1.0; }, {2.0, 5.0}).value == doctest::Approx(3.0).epsilon(1e-14));

    const QuadResult par = integrate_smooth([](double x) { return x * (1.0 - x); }, {0.0, 1.0});
    CHECK(par.value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    const double dense = oracle::dense_singular_integral([](double x) { return x * (1.0 - x); }, {0.0, 1.0},
                                                         1.0, KernelSide::UpperSingular, 100000);
    CHECK(std::fabs(par.value - dense) <= 1e-9);

    const QuadResult e = integrate_smooth([](double x) { return std::exp(x); }, {0.0, 1.0}, 1e-12);
    CHECK(std::fabs(e.value - (std::numbers::e - 1.0)) <= 10.0 * e.abs_error_estimate + 1e-15);
}

TEST_CASE("integrate_smooth is deterministic and flags failures") {
    auto h = [](double x) { return std::sqrt(std::fabs(std::sin(7.0 * x))); };
    const QuadResult r1 = integrate_smooth(h, {0.0, 3.0}, 1e-9);
    const QuadResult r2 = integrate_smooth(h, {0.0, 3.0}, 1e-9);
    CHECK(r1.value == r2.value);
    CHECK(r1.abs_error_estimate == r2.abs_error_estimate);
    CHECK(r1.evaluations == r2.evaluations);

    const QuadResult capped = integrate_smooth(h, {0.0, 3.0}, 1e-15, 4);
    CHECK_FALSE(capped.tolerance_met);

    CHECK_THROWS_AS(integrate_smooth([](double) { return std::nan(""); }, {0.0, 1.0}), EvaluationError);
    CHECK_THROWS_AS(integrate_smooth([](double x) { return x; }, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(integrate_smooth([](double x) { return x; }, {0.0, 1.0}, 0.0), DomainError);
}

TEST_CASE("evaluation errors carry the abscissa") {
    try {
        integrate_smooth([](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : x; },
                         {0.0, 1.0});
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.abscissa() > 0.5);
    }
}

TEST_CASE("integrate_singular examples") {
    const QuadResult one = integrate_singular([](double) { return 1.0; }, {0.0, 1.0}, 0.5,
                                              KernelSide::UpperSingular);
    CHECK(one.value == doctest::Approx(2.0).epsilon(1e-12));

    const QuadResult t2 = integrate_singular([](double t) { return t * t; }, {0.0, 1.0}, 0.5,
                                             KernelSide::LowerSingular);
    CHECK(t2.value == doctest::Approx(0.4).epsilon(1e-12));

    const QuadResult t2u = integrate_singular([](double t) { return t * t; }, {0.0, 1.0}, 0.5,
                                              KernelSide::UpperSingular);
    CHECK(t2u.value == doctest::Approx(16.0 / 15.0).epsilon(1e-12));
    CHECK(rel_err(t2u.value, std::tgamma(0.5) * oracle::beta_reference(0.5, 2, {0.0, 1.0})) <= 1e-10);

    CHECK_THROWS_AS(integrate_singular([](double) { return 1.0; }, {0.0, 1.0}, 0.0, KernelSide::UpperSingular),
                    DomainError);
    CHECK_THROWS_AS(integrate_singular([](double) { return 1.0; }, {0.0, 1.0}, -1.0, KernelSide::LowerSingular),
                    DomainError);
}

TEST_CASE("integrate_singular matches the Beta closed form for monomials") {
    for (double alpha : {0.25, 0.5, 0.75, 1.0, 1.5, 2.5}) {
        for (const Interval iv : {Interval{0.0, 1.0}, Interval{1.0, 3.0}, Interval{-1.0, 2.0}}) {
            for (int n = 0; n <= 6; ++n) {
                CAPTURE(alpha);
                CAPTURE(n);
                // (t - a)^n against the upper kernel is the Beta moment.
                auto h = [=](double t) { return std::pow(t - iv.a, n); };
                const QuadResult r = integrate_singular(h, iv, alpha, KernelSide::UpperSingular, 1e-12);
                const double exact = oracle::beta_moment(alpha, n, iv);
                CHECK(rel_err(r.value, exact) <= 1e-8);
                CHECK(std::fabs(r.value - exact) <= 10.0 * r.abs_error_estimate + 1e-13 * std::fabs(exact));
                // Mirror: (b - t)^n against the lower kernel.
                auto hm = [=](double t) { return std::pow(iv.b - t, n); };
                const QuadResult rm = integrate_singular(hm, iv, alpha, KernelSide::LowerSingular, 1e-12);
                CHECK(rel_err(rm.value, exact) <= 1e-8);
            }
        }
    }
}

TEST_CASE("singular and smooth paths agree for alpha >= 1") {
    auto h = [](double t) { return std::cos(t) + t * t; };
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
        const Interval iv{1.0, 3.0};
        const QuadResult s = integrate_singular(h, iv, alpha, KernelSide::UpperSingular);
        const QuadResult d = integrate_smooth([&](double t) { return std::pow(iv.b - t, alpha - 1.0) * h(t); }, iv);
        CHECK(std::fabs(s.value - d.value) <= s.abs_error_estimate + d.abs_error_estimate + 1e-14);
    }
}

TEST_CASE("tightening the tolerance never lowers the cost") {
    auto h = [](double t) { return std::exp(std::sin(3.0 * t)); };
    for (double alpha : {0.3, 1.0, 2.2}) {
        std::size_t previous = 0;
        for (double tol = 1e-4; tol >= 1e-13; tol /= 2.0) {
            const QuadResult r = integrate_singular(h, {0.0, 2.0}, alpha, KernelSide::LowerSingular, tol);
            CHECK(r.evaluations >= previous);
            previous = r.evaluations;
        }
    }
}

TEST_CASE("graded mesh is symmetric and refined toward both ends") {
    const Interval iv{1.0, 3.0};
    const auto nodes = graded_mesh(iv, 40);
    REQUIRE(nodes.size() == 41);
    CHECK(nodes.front() == iv.a);
    CHECK(nodes.back() == iv.b);
    CHECK(nodes[20] == iv.midpoint());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i] + nodes[nodes.size() - 1 - i] == doctest::Approx(iv.a + iv.b).epsilon(1e-15));
    }
    for (std::size_t i = 1; i < 20; ++i) {
        CHECK(nodes[i] - nodes[i - 1] <= nodes[i + 1] - nodes[i]);
    }
    CHECK(nodes[1] - nodes[0] < nodes[20] - nodes[19]);
    CHECK(graded_mesh(iv, 3).size() == 33);
}

TEST_CASE("cumulative kernel closed forms") {
    const CumulativeKernel lin([](double) { return 1.0; }, {0.0, 1.0}, 1.0, 64, 1e-12);
    for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        CHECK(lin(t) == doctest::Approx(2.0 * t - 1.0).epsilon(1e-12).scale(1.0));
    }

    const CumulativeKernel half([](double) { return 1.0; }, {0.0, 1.0}, 0.5, 64, 1e-12);
    for (double t : {0.0, 1e-6, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        CAPTURE(t);
        CHECK(std::fabs(half(t) - (2.0 * std::sqrt(t) - 2.0 * std::sqrt(1.0 - t))) <= 1e-10);
    }
    CHECK(std::fabs(half(0.5)) <= 1e-12);
    CHECK(half.accurate());
    CHECK_THROWS_AS(half.evaluate(1.5), DomainError);
}

TEST_CASE("cumulative kernel end values and antisymmetry") {
    const Interval iv{1.0, 3.0};
    auto g = [](double x) { return std::exp(-(x - 2.0) * (x - 2.0)); };
    for (double alpha : {0.25, 0.5, 1.0, 1.7}) {
        CAPTURE(alpha);
        const CumulativeKernel k(g, iv, alpha, 64, 1e-11);
        const double upper = integrate_singular(g, iv, alpha, KernelSide::UpperSingular, 1e-12).value;
        const double lower = integrate_singular(g, iv, alpha, KernelSide::LowerSingular, 1e-12).value;
        CHECK(std::fabs(k(iv.b) - upper) <= 1e-9);
        CHECK(std::fabs(k(iv.a) + lower) <= 1e-9);
        CHECK(std::fabs(k(iv.midpoint())) <= 1e-9);
        for (double t : k.mesh()) {
            CHECK(std::fabs(k(t) + k(iv.reflect(t))) <= 1e-9);
        }
        CHECK(std::fabs(k(1.3) + k(2.7)) <= 1e-9);
    }
}
