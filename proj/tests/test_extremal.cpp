#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "certquad/extremal.hpp"
#include "test_support.hpp"

using namespace certquad;

TEST_CASE("the Lipschitz witness interpolates its defining values") {
    Interval iv(0.0, 1.0);
    WitnessFunction w = make_fstar(EvaluationPoint{0.25}, 1.0, iv);
    const IntegrandFunction& f = w.function();
    CHECK(f.value(0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f.value(0.25) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(f.value(0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(f.value(0.8) == doctest::Approx(0.05).epsilon(1e-13));
    CHECK(w.designated_x() == 0.25);
    CHECK(w.companion_closed() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w.mean_closed() == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(w.gap_closed() == doctest::Approx(0.125).epsilon(1e-15));

    WitnessFunction at_a = make_fstar(EvaluationPoint{0.0}, 1.0, iv);
    CHECK(at_a.function().value(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    WitnessFunction at_mid = make_fstar(EvaluationPoint{0.5}, 1.0, iv);
    CHECK(at_mid.function().value(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(at_mid.function().value(1.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("closed forms agree with the numerical pipeline") {
    testsupport::Rng rng(51);
    for (const Interval& iv : {Interval(0.0, 1.0), Interval(-2.0, 5.0)}) {
        for (int trial = 0; trial < 4; ++trial) {
            double x = rng.uniform(iv.a(), iv.midpoint());
            for (const WitnessFunction& w :
                 {make_fstar(EvaluationPoint{x}, 1.0, iv), make_midpoint_kink(1.75, iv),
                  make_quarter_kink(iv)}) {
                EvaluationPoint d{w.designated_x()};
                CHECK(companion_value(w.function(), d, iv) ==
                      doctest::Approx(w.companion_closed()).epsilon(1e-10));
                CHECK(integral_mean(w.function(), iv) ==
                      doctest::Approx(w.mean_closed()).epsilon(1e-9));

                for (NormKind kind : {NormKind::linf(), NormKind::l1(), NormKind::lp(3.0)}) {
                    auto closed = w.norms(x, kind);
                    REQUIRE(closed.has_value());
                    SegmentNorms est = segment_norms(w.function(), x, iv, kind);
                    CHECK(closed->left == doctest::Approx(est.left).epsilon(1e-9));
                    CHECK(closed->middle == doctest::Approx(est.middle).epsilon(1e-9));
                    CHECK(closed->right == doctest::Approx(est.right).epsilon(1e-9));
                    CHECK(closed->whole == doctest::Approx(est.whole).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("fractional-exponent witnesses have no derivative norms") {
    WitnessFunction w = make_fstar(EvaluationPoint{0.25}, 0.5, Interval(0.0, 1.0));
    CHECK_FALSE(w.norms(0.25, NormKind::linf()).has_value());
    CHECK_FALSE(w.norms(0.25, NormKind::l1()).has_value());
    CHECK_FALSE(w.norms(0.25, NormKind::lp(2.0)).has_value());
}

TEST_CASE("sup-norm sharpness at the quarter point and the end point") {
    for (const Interval& iv : {Interval(0.0, 1.0), Interval(-2.0, 5.0)}) {
        double len = iv.length();

        WitnessFunction q = make_quarter_kink(iv);
        EvaluationPoint xq{q.designated_x()};
        CHECK(xq.x == doctest::Approx(iv.quarter()).epsilon(1e-15));
        auto nq = q.norms(xq.x, NormKind::linf());
        REQUIRE(nq.has_value());
        BoundReport rq = bound_for(*nq, xq, iv);
        // gap == (1/8)(b-a)||f'||: the maximal branch is attained
        CHECK(q.gap_closed() == doctest::Approx(len / 8.0).epsilon(1e-15));
        CHECK(std::fabs(q.gap_closed() - rq.max_branch) <= 1e-12 * rq.max_branch);

        WitnessFunction m = make_midpoint_kink(2.5, iv);
        EvaluationPoint xm{m.designated_x()};
        CHECK(xm.x == iv.a());
        auto nm = m.norms(xm.x, NormKind::linf());
        REQUIRE(nm.has_value());
        BoundReport rm = bound_for(*nm, xm, iv);
        // gap == (1/4)(b-a)||f'||: the end-point bound is attained
        CHECK(m.gap_closed() == doctest::Approx(2.5 * len / 4.0).epsilon(1e-15));
        CHECK(std::fabs(m.gap_closed() - rm.max_branch) <= 1e-12 * rm.max_branch);
    }
}

TEST_CASE("p-norm bounds approach the gap as p grows") {
    const double expected[] = {1.1547005383792515, 1.0208689934101327, 1.0019459466173959,
                               1.000193290942238};
    const double ps[] = {2.0, 10.0, 100.0, 1000.0};
    Interval iv(0.0, 1.0);

    WitnessFunction q = make_quarter_kink(iv);
    WitnessFunction m = make_midpoint_kink(1.0, iv);
    double prev_q = 2.0, prev_m = 2.0;
    for (int i = 0; i < 4; ++i) {
        NormKind kind = NormKind::lp(ps[i]);

        EvaluationPoint xq{q.designated_x()};
        BoundReport rq = bound_for(*q.norms(xq.x, kind), xq, iv);
        REQUIRE(rq.combined.has_value());
        double ratio_q = *rq.combined / q.gap_closed();
        CHECK(ratio_q == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(ratio_q < prev_q);
        prev_q = ratio_q;

        EvaluationPoint xm{m.designated_x()};
        BoundReport rm = bound_for(*m.norms(xm.x, kind), xm, iv);
        double ratio_m = rm.first_bound / m.gap_closed();
        CHECK(ratio_m == doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(ratio_m < prev_m);
        prev_m = ratio_m;
    }
    CHECK(prev_q <= 1.01);
    CHECK(prev_m <= 1.01);
}

TEST_CASE("the Lipschitz witness attains its class bound for every k and x") {
    Interval iv(-1.0, 3.0);
    for (double k : {0.5, 1.0}) {
        for (double x : {iv.a(), iv.quarter(), iv.midpoint()}) {
            WitnessFunction w = make_fstar(EvaluationPoint{x}, k, iv);
            double bound = lipschitz_bound(EvaluationPoint{x}, iv, k, 1.0);
            CHECK(w.gap_closed() == doctest::Approx(bound).epsilon(1e-12));
            double numeric_gap = std::fabs(companion_value(w.function(), EvaluationPoint{x}, iv) -
                                           integral_mean(w.function(), iv));
            CHECK(numeric_gap == doctest::Approx(bound).epsilon(1e-9));
        }
    }
}

TEST_CASE("witness constructors validate their parameters") {
    Interval iv(0.0, 1.0);
    CHECK_THROWS_AS(make_fstar(EvaluationPoint{0.25}, 0.0, iv), std::invalid_argument);
    CHECK_THROWS_AS(make_fstar(EvaluationPoint{0.25}, 1.5, iv), std::invalid_argument);
    CHECK_THROWS_AS(make_fstar(EvaluationPoint{0.75}, 1.0, iv), std::invalid_argument);
    CHECK_THROWS_AS(make_midpoint_kink(0.0, iv), std::invalid_argument);
    CHECK_THROWS_AS(make_midpoint_kink(-1.0, iv), std::invalid_argument);
}

TEST_CASE("the two-point identity holds for smooth integrands") {
    testsupport::Rng rng(52);
    Interval iv(-1.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        auto coeffs = testsupport::random_coeffs(rng, 3);
        IntegrandFunction f =
            IntegrandFunction::from_expression(parse(testsupport::poly_text(coeffs)));
        IdentityCheck c = verify_identity(f, EvaluationPoint{rng.uniform(-1.0, 0.5)}, iv);
        CHECK(c.gap <= 1e-9);
        CHECK(c.gap == std::fabs(c.lhs - c.rhs));
    }
}

TEST_CASE("the two-point identity holds across kinks") {
    IntegrandFunction f = IntegrandFunction::from_expression(parse("abs(t - 0.4) + sin(t)"));
    IdentityCheck c = verify_identity(f, EvaluationPoint{0.3}, Interval(0.0, 1.0));
    CHECK(c.gap <= 1e-9);

    IntegrandFunction g = IntegrandFunction::from_expression(parse("7"));
    IdentityCheck cz = verify_identity(g, EvaluationPoint{0.2}, Interval(0.0, 1.0));
    CHECK(std::fabs(cz.lhs) <= 1e-12);
    CHECK(std::fabs(cz.rhs) <= 1e-12);
}
