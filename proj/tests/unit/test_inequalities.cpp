#include "frachh/error.hpp"
#include "frachh/inequalities.hpp"
#include "frachh/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace frachh;

namespace {

// f = x^2, g = x(1 - x) on [0, 1], alpha = 1/2, from Beta closed forms.
constexpr double kAnchorW = 0.30090111122547002;
constexpr double kAnchorLhs = 0.075225277806367505;
constexpr double kAnchorMid = 0.093136058236455006;
constexpr double kAnchorRhs = 0.15045055561273501;
constexpr double kAnchorGap = 0.057314497376280004;
constexpr double kAnchorBound24 = 0.11016486876421574;

struct Fixture {
    std::vector<FunctionSpec> fs = builtin_function_corpus();
    std::vector<WeightSpec> unit_ws = builtin_weight_corpus({0.0, 1.0});

    const FunctionSpec& fn(const char* label) const { return find_function(fs, label); }
    const WeightSpec& wt(const char* label) const { return find_weight(unit_ws, label); }
};

double rel(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}

} // namespace

TEST_CASE("anchor constants agree with the Beta oracle") {
    const Interval iv{0.0, 1.0};
    // J_{0+} of t^n at 1 is beta_reference; J_{1-} of t^n at 0 mirrors it through (1 - t)^n.
    auto jl = [&](int n) { return oracle::beta_reference(0.5, n, iv); };
    auto jr = [&](int n) { return 1.0 / ((n + 0.5) * std::tgamma(0.5)); };
    const double w = jl(1) - jl(2) + jr(1) - jr(2);
    const double p = jl(3) - jl(4) + jr(3) - jr(4);
    CHECK(rel(w, kAnchorW) <= 1e-13);
    CHECK(rel(p, kAnchorMid) <= 1e-13);
}

TEST_CASE_FIXTURE(Fixture, "classical Hermite-Hadamard") {
    const SandwichReport sq = hh_classical(fn("sq"), {0.0, 1.0});
    CHECK(sq.lhs == 0.25);
    CHECK(sq.mid == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(sq.rhs == 0.5);
    CHECK(sq.status == Status::Holds);

    const SandwichReport e = hh_classical(fn("exp"), {0.0, 1.0});
    CHECK(e.lhs == doctest::Approx(std::exp(0.5)));
    CHECK(e.mid == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-12));
    CHECK(e.rhs == doctest::Approx((1.0 + std::numbers::e) / 2.0));
    CHECK(e.status == Status::Holds);

    const SandwichReport lin = hh_classical(fn("linear"), {1.0, 3.0});
    CHECK(std::fabs(lin.lower_margin) <= lin.error_budget);
    CHECK(std::fabs(lin.upper_margin) <= lin.error_budget);
    CHECK(lin.status == Status::Holds);
}

TEST_CASE_FIXTURE(Fixture, "classical Fejer") {
    const SandwichReport r = fejer_classical(fn("sq"), wt("parabolic"));
    CHECK(r.lhs == doctest::Approx(0.25 / 6.0).epsilon(1e-12));
    CHECK(r.mid == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(0.5 / 6.0).epsilon(1e-12));
    CHECK(r.status == Status::Holds);

    const auto ws = builtin_weight_corpus({0.0, 2.0});
    const SandwichReport unit = fejer_classical(fn("sq"), find_weight(ws, "unit"));
    const SandwichReport hh = hh_classical(fn("sq"), {0.0, 2.0});
    CHECK(unit.mid == doctest::Approx(hh.mid * 2.0).epsilon(1e-12));
    CHECK(unit.lhs == doctest::Approx(hh.lhs * 2.0).epsilon(1e-14));
}

TEST_CASE_FIXTURE(Fixture, "fractional Hermite-Hadamard") {
    const SandwichReport r = hh_fractional(fn("sq"), {0.0, 1.0, 0.5});
    CHECK(r.mid == doctest::Approx(11.0 / 30.0).epsilon(1e-10));
    CHECK(r.status == Status::Holds);

    const SandwichReport one = hh_fractional(fn("exp"), {0.0, 1.0, 1.0});
    const SandwichReport classical = hh_classical(fn("exp"), {0.0, 1.0});
    CHECK(rel(one.mid, classical.mid) <= 1e-12);
}

TEST_CASE_FIXTURE(Fixture, "fractional Fejer anchor") {
    const SandwichReport r = fejer_fractional(fn("sq"), wt("parabolic"), {0.0, 1.0, 0.5});
    CHECK(std::fabs(r.lhs - kAnchorLhs) <= 1e-10);
    CHECK(std::fabs(r.mid - kAnchorMid) <= 1e-10);
    CHECK(std::fabs(r.rhs - kAnchorRhs) <= 1e-10);
    CHECK(r.status == Status::Holds);
    CHECK(r.meta.hypotheses_met);
    CHECK_FALSE(r.meta.retried);
}

TEST_CASE_FIXTURE(Fixture, "reductions") {
    for (double alpha : {0.25, 1.0, 2.5}) {
        const Interval iv{1.0, 3.0};
        const auto ws = builtin_weight_corpus(iv);
        const FracSetting s{iv.a, iv.b, alpha};
        const SandwichReport fej = fejer_fractional(fn("cosh"), find_weight(ws, "unit"), s);
        const SandwichReport hh = hh_fractional(fn("cosh"), s);
        const double scale = 2.0 * std::pow(iv.length(), alpha) / frachh::gamma(alpha + 1.0);
        CHECK(rel(fej.lhs, scale * hh.lhs) <= 1e-10);
        CHECK(rel(fej.mid, scale * hh.mid) <= 1e-10);
        CHECK(rel(fej.rhs, scale * hh.rhs) <= 1e-10);
    }
    const auto ws = builtin_weight_corpus({0.0, 1.0});
    const SandwichReport frac = fejer_fractional(fn("exp"), find_weight(ws, "bump"), {0.0, 1.0, 1.0});
    const SandwichReport classical = fejer_classical(fn("exp"), find_weight(ws, "bump"));
    CHECK(frac.lhs == 2.0 * classical.lhs);
    CHECK(frac.rhs == 2.0 * classical.rhs);
    CHECK(rel(frac.mid, 2.0 * classical.mid) <= 1e-10);
}

TEST_CASE_FIXTURE(Fixture, "unweighted identity and bound") {
    const IdentityReport id = identity_unweighted(fn("sq"), {0.0, 1.0, 1.0});
    CHECK(id.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(id.rhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(id.status == Status::Holds);

    const IdentityReport e = identity_unweighted(fn("exp"), {0.0, 1.0, 0.5});
    CHECK(e.residual <= 1e-8 * e.scale);

    const IdentityReport lin = identity_unweighted(fn("linear"), {-1.0, 2.0, 0.3});
    CHECK(std::fabs(lin.lhs) <= 1e-12);
    CHECK(std::fabs(lin.rhs) <= 1e-12);

    const BoundReport b1 = bound_unweighted(fn("sq"), {0.0, 1.0, 1.0});
    CHECK(b1.observed == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(b1.bound == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(b1.status == Status::Holds);

    const BoundReport b2 = bound_unweighted(fn("sq"), {0.0, 1.0, 0.5});
    CHECK(b2.observed == doctest::Approx(0.5 - 11.0 / 30.0).epsilon(1e-10));
    CHECK(b2.bound == doctest::Approx((2.0 / 3.0) * (1.0 - 1.0 / std::sqrt(2.0))).epsilon(1e-14));
    CHECK(b2.status == Status::Holds);
}

TEST_CASE_FIXTURE(Fixture, "weighted identity") {
    const IdentityReport r = identity_weighted(fn("sq"), wt("parabolic"), {0.0, 1.0, 0.5});
    CHECK(std::fabs(r.lhs - kAnchorGap) <= 1e-10);
    CHECK(rel(r.rhs, kAnchorGap) <= 1e-6);
    CHECK(r.status == Status::Holds);

    const IdentityReport konst = identity_weighted(
        FunctionSpec{"const", [](double) { return 3.0; }, RealFn([](double) { return 0.0; }),
                     ConvexityKind::deriv_convex()},
        wt("bump"), {0.0, 1.0, 0.7});
    CHECK(std::fabs(konst.lhs) <= konst.error_budget);
    CHECK(konst.rhs == 0.0);

    // Symmetry is required, nonnegativity is not.
    const IdentityReport sgn = identity_weighted(fn("exp"), wt("signed"), {0.0, 1.0, 0.4});
    CHECK(sgn.status == Status::Holds);

    // g = 1 reduces to the unweighted identity times 2 (b-a)^alpha / Gamma(alpha + 1).
    const FracSetting s{1.0, 3.0, 0.75};
    const auto ws = builtin_weight_corpus(s.interval());
    const IdentityReport w = identity_weighted(fn("exp"), find_weight(ws, "unit"), s);
    const IdentityReport u = identity_unweighted(fn("exp"), s);
    const double scale = 2.0 * std::pow(2.0, 0.75) / frachh::gamma(1.75);
    CHECK(rel(w.lhs, scale * u.lhs) <= 1e-9);
    CHECK(rel(w.rhs, scale * u.rhs) <= 1e-8);

    CHECK_THROWS_AS(identity_weighted(fn("abs"), wt("unit"), {0.0, 1.0, 0.5}), PreconditionError);
}

TEST_CASE_FIXTURE(Fixture, "weighted bounds at the worked examples") {
    const FracSetting one{0.0, 1.0, 1.0};
    const BoundReport b24 = bound_thm24(fn("sq"), wt("unit"), one);
    CHECK(b24.observed == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(b24.bound == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(b24.status == Status::Holds);

    const BoundReport anchor = bound_thm24(fn("sq"), wt("parabolic"), {0.0, 1.0, 0.5});
    CHECK(std::fabs(anchor.observed - kAnchorGap) <= 1e-10);
    CHECK(std::fabs(anchor.bound - kAnchorBound24) <= 1e-10);
    CHECK(anchor.status == Status::Holds);

    const BoundReport b25 = bound_thm25(fn("sq"), wt("unit"), one, HolderPair::from_q(2.0));
    CHECK(b25.bound == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(b25.status == Status::Holds);

    const BoundReport b26 = bound_thm26_i(fn("sq"), wt("unit"), one, HolderPair::from_q(2.0));
    CHECK(b26.bound == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b26.status == Status::Holds);

    const BoundReport b27 = bound_thm26_ii(fn("sq"), wt("unit"), one, HolderPair::from_q(2.0));
    CHECK(b27.bound == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(b27.status == Status::Holds);

    CHECK_THROWS_AS(bound_thm26_ii(fn("sq"), wt("unit"), {0.0, 1.0, 1.5}, HolderPair::from_q(2.0)), DomainError);
    VerifyOptions forced;
    forced.force = true;
    CHECK_THROWS_AS(bound_thm26_ii(fn("sq"), wt("unit"), {0.0, 1.0, 1.5}, HolderPair::from_q(2.0), forced),
                    DomainError);
    CHECK_THROWS_AS(bound_thm25(fn("sq"), wt("unit"), one, HolderPair{1.0, 1.0}), DomainError);
}

TEST_CASE("bound constants") {
    const FracSetting s{1.0, 3.0, 0.8};
    const double scale = 2.0 * std::pow(2.0, 0.8) / frachh::gamma(1.8);
    CHECK(rel(bound_constant_2_4(s, 1.0, 1.5, -4.0), scale * bound_constant_1_5(s, 1.5, -4.0)) <= 1e-12);

    const HolderPair pair = HolderPair::from_q(3.0);
    const double stated = bound_constant_2_5(s, 0.7, pair, 2.0, 5.0);
    const double rederived = bound_constant_2_5_rederived(s, 0.7, pair, 2.0, 5.0);
    CHECK(rel(rederived, stated * std::pow(2.0, 1.0 / 3.0)) <= 1e-14);
    const FracSetting unit_len{0.0, 1.0, 0.8};
    CHECK(bound_constant_2_5(unit_len, 0.7, pair, 2.0, 5.0) ==
          doctest::Approx(bound_constant_2_5_rederived(unit_len, 0.7, pair, 2.0, 5.0)).epsilon(1e-15));

    // At alpha = 1, bound-2-7 is the classical weighted bound.
    const FracSetting one{0.0, 2.0, 1.0};
    const HolderPair two = HolderPair::from_q(2.0);
    CHECK(bound_constant_2_7(one, 1.0, two, 1.0, 1.0) == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE_FIXTURE(Fixture, "stated bound-2-5 fails once b - a exceeds one") {
    const auto ws = builtin_weight_corpus({-1.0, 2.0});
    const FracSetting s{-1.0, 2.0, 1.0};
    const BoundReport r = bound_thm25(fn("sq"), find_weight(ws, "unit"), s, HolderPair::from_q(2.0));
    CHECK(r.observed == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(8.2158383625774).epsilon(1e-12));
    CHECK(r.status == Status::Violated);
    const double rederived = bound_constant_2_5_rederived(s, 1.0, HolderPair::from_q(2.0), -2.0, 4.0);
    CHECK(rederived >= r.observed);
}

TEST_CASE_FIXTURE(Fixture, "linear functions sit on the equality case") {
    const FracSetting s{1.0, 3.0, 0.5};
    const auto ws = builtin_weight_corpus(s.interval());
    const WeightSpec& g = find_weight(ws, "cosine");
    for (const BoundReport& r :
         {bound_unweighted(fn("linear"), s), bound_thm24(fn("linear"), g, s),
          bound_thm25(fn("linear"), g, s, HolderPair::from_q(2.0)),
          bound_thm26_i(fn("linear"), g, s, HolderPair::from_q(2.0)),
          bound_thm26_ii(fn("linear"), g, s, HolderPair::from_q(2.0))}) {
        CHECK(r.observed <= r.error_budget);
        CHECK(r.status == Status::Holds);
    }
    const SandwichReport fej = fejer_fractional(fn("linear"), g, s);
    CHECK(fej.status == Status::Holds);
}

TEST_CASE_FIXTURE(Fixture, "hypotheses are enforced unless forced") {
    const FunctionSpec concave{"negsq", [](double x) { return -x * x; }, RealFn([](double x) { return -2.0 * x; }),
                               ConvexityKind::unverified()};
    CHECK_THROWS_AS(hh_classical(concave, {0.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(fejer_fractional(concave, wt("unit"), {0.0, 1.0, 0.5}), PreconditionError);

    VerifyOptions forced;
    forced.force = true;
    const SandwichReport r = hh_fractional(concave, {0.0, 1.0, 0.5}, forced);
    CHECK_FALSE(r.meta.hypotheses_met);
    CHECK(r.status == Status::Violated);
    CHECK(r.meta.note.find("hypotheses unmet") != std::string::npos);

    // Sampled convexity counts as met, with a note.
    const FunctionSpec sampled{"sq", [](double x) { return x * x; }, std::nullopt, ConvexityKind::unverified()};
    const SandwichReport s = hh_classical(sampled, {0.0, 1.0});
    CHECK(s.meta.hypotheses_met);
    CHECK(s.meta.note.find("sampled") != std::string::npos);

    // Negative weight for the sandwich; |f'| not certified convex for the bound.
    CHECK_THROWS_AS(fejer_classical(fn("sq"), wt("signed")), PreconditionError);
    CHECK_THROWS_AS(bound_thm24(fn("xlogx"), builtin_weight_corpus({1.0, 3.0})[0], {1.0, 3.0, 0.5}),
                    PreconditionError);
    CHECK_THROWS_AS(bound_unweighted(fn("abs"), {0.0, 1.0, 0.5}), PreconditionError);
    CHECK_THROWS_AS(hh_fractional(fn("neglog"), {0.0, 1.0, 0.5}), PreconditionError);
    // Weight built for another interval.
    CHECK_THROWS_AS(fejer_fractional(fn("sq"), wt("unit"), {1.0, 3.0, 0.5}), PreconditionError);
}

TEST_CASE("auxiliary integrals") {
    const AuxIntegrals unit = aux_integrals({0.0, 1.0, 1.0});
    CHECK(unit.e_closed == doctest::Approx(5.0 / 24.0).epsilon(1e-15));
    CHECK(unit.f_closed == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        for (Interval iv : {Interval{0.0, 1.0}, Interval{1.0, 3.0}, Interval{-1.0, 2.0}}) {
            const AuxIntegrals r = aux_integrals({iv.a, iv.b, alpha});
            CAPTURE(alpha);
            CHECK(std::fabs(r.e_closed - r.e_numeric) <= 1e-10 * std::max(1.0, r.e_closed));
            CHECK(std::fabs(r.e_closed - r.e_numeric_mirror) <= 1e-10 * std::max(1.0, r.e_closed));
            CHECK(std::fabs(r.f_closed - r.f_numeric) <= 1e-10 * std::max(1.0, r.f_closed));
            CHECK(std::fabs(r.f_closed - r.f_numeric_mirror) <= 1e-10 * std::max(1.0, r.f_closed));
            const double sum = std::pow(iv.length(), alpha + 2.0) / (alpha + 1.0) * (1.0 - std::pow(2.0, -alpha));
            CHECK(std::fabs(r.e_closed + r.f_closed - sum) <= 1e-12 * std::max(1.0, sum));
            CHECK(r.converged);
        }
    }
}

TEST_CASE("power lemma") {
    const PowerLemmaResult eq = scalar_power_lemma(2.0, 2.0, 0.3);
    CHECK(eq.lhs == 0.0);
    CHECK(eq.rhs == 0.0);
    CHECK(eq.holds);
    const PowerLemmaResult zero = scalar_power_lemma(0.0, 5.0, 0.4);
    CHECK(zero.lhs == zero.rhs);
    const PowerLemmaResult ex = scalar_power_lemma(0.25, 1.0, 0.5);
    CHECK(ex.lhs == doctest::Approx(0.5));
    CHECK(ex.rhs == doctest::Approx(0.8660254038));
    CHECK(ex.holds);
    CHECK_THROWS_AS(scalar_power_lemma(-1.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(scalar_power_lemma(2.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(scalar_power_lemma(0.0, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(scalar_power_lemma(0.0, 1.0, 0.0), DomainError);

    const PowerLemmaFuzz fuzz = power_lemma_fuzz(20000, 42);
    CHECK(fuzz.violations == 0);
    CHECK(fuzz.trials == 20000);
    const PowerLemmaFuzz again = power_lemma_fuzz(20000, 42);
    CHECK(again.worst_excess == fuzz.worst_excess);
}

TEST_CASE("status names") {
    CHECK(to_string(Status::Holds) == "Holds");
    CHECK(to_string(Status::Violated) == "Violated");
    CHECK(to_string(Status::Inconclusive) == "Inconclusive");
}
