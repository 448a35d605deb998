#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "certquad/expr.hpp"
#include "test_support.hpp"

using namespace certquad;

TEST_CASE("numbers, the variable, and arithmetic evaluate") {
    CHECK(parse("42")(0.0) == 42.0);
    CHECK(parse("2.5")(0.0) == 2.5);
    CHECK(parse("1e3")(0.0) == 1000.0);
    CHECK(parse("2.5e-1")(0.0) == 0.25);
    CHECK(parse("t")(3.5) == 3.5);
    CHECK(parse("2*t + 1")(2.0) == 5.0);
    CHECK(parse("t - 2 - 1")(0.0) == -3.0);  // left associative
    CHECK(parse("8/4/2")(0.0) == 1.0);
    CHECK(parse("1 + 2*3")(0.0) == 7.0);
    CHECK(parse("(1 + 2)*3")(0.0) == 9.0);
    CHECK(parse("  t  +\t1 ")(1.0) == 2.0);
}

TEST_CASE("powers take constant exponents and fold them at parse time") {
    CHECK(parse("t^2")(3.0) == 9.0);
    CHECK(parse("t^-2")(2.0) == 0.25);
    CHECK(parse("t^(1 + 1)")(3.0) == 9.0);
    CHECK(parse("2^3")(0.0) == 8.0);
    CHECK(parse("t^0.5")(4.0) == 2.0);
    // unary minus is a base, so it binds before '^'
    CHECK(parse("-t^2")(2.0) == 4.0);
    CHECK(parse("-(t^2)")(2.0) == -4.0);
    CHECK_THROWS_AS(parse("t^t"), ParseError);
    CHECK_THROWS_AS(parse("2^(t+1)"), ParseError);
}

TEST_CASE("function calls evaluate") {
    CHECK(parse("abs(t)")(-2.0) == 2.0);
    CHECK(parse("sign(t)")(-0.5) == -1.0);
    CHECK(parse("sign(t)")(0.0) == 0.0);
    CHECK(parse("sin(t)")(0.0) == 0.0);
    CHECK(parse("cos(t)")(0.0) == 1.0);
    CHECK(parse("exp(t)")(1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(parse("ln(exp(t))")(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(parse("sqrt(t)")(9.0) == 3.0);
    CHECK(parse("sin(cos(t))")(1.0) ==
          doctest::Approx(std::sin(std::cos(1.0))).epsilon(1e-15));
}

TEST_CASE("parse errors carry the byte offset of the problem") {
    auto offset_of = [](const char* text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("t +") == 3);           // input ended early
    CHECK(offset_of("t @ 1") == 2);
    CHECK(offset_of("foo(t)") == 0);        // unknown identifier
    CHECK(offset_of("x") == 0);
    CHECK(offset_of("sin t") == 4);         // missing '('
    CHECK(offset_of("sin(t") == 5);         // missing ')'
    CHECK(offset_of("1 2") == 2);           // trailing input
    CHECK(offset_of(".5") == 0);            // numbers need a leading digit
    CHECK(offset_of("t^t") == 1);           // variable exponent
    CHECK(offset_of("abs(t, 1)") == 5);     // single-argument functions
}

TEST_CASE("evaluation domain errors identify the node and the point") {
    CHECK_THROWS_AS(parse("ln(t)")(0.0), EvalError);
    CHECK_THROWS_AS(parse("ln(t)")(-1.0), EvalError);
    CHECK_THROWS_AS(parse("1/t")(0.0), EvalError);
    CHECK_THROWS_AS(parse("sqrt(t)")(-1.0), EvalError);
    CHECK_THROWS_AS(parse("t^0.5")(-1.0), EvalError);
    try {
        parse("1/(t - 2)")(2.0);
        CHECK(false);
    } catch (const EvalError& e) {
        CHECK(e.node() == "div");
        CHECK(e.at() == 2.0);
    }
}

TEST_CASE("affine detection finds slope and intercept") {
    auto affine = [](const char* text) { return parse(text).affine_coefficients(); };
    REQUIRE(affine("2*t + 1"));
    CHECK(affine("2*t + 1")->first == 2.0);
    CHECK(affine("2*t + 1")->second == 1.0);
    CHECK(affine("t")->first == 1.0);
    CHECK(affine("7")->first == 0.0);
    CHECK(affine("(3 - 1)*t/2")->first == 1.0);
    CHECK(affine("1 - t")->first == -1.0);
    CHECK_FALSE(affine("t^2"));
    CHECK_FALSE(affine("sin(t)"));
    CHECK(affine("sin(1)*t")->first == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
}

TEST_CASE("differentiation handles the sampled corpus by central differences") {
    for (const auto& c : testsupport::fd_corpus()) {
        CAPTURE(c.text);
        Expression f = parse(c.text);
        std::vector<double> kinks;
        Expression df = differentiate(f, &kinks);
        const double h = 1e-6;
        for (int i = 0; i <= 40; ++i) {
            double t = c.lo + (c.hi - c.lo) * i / 40.0;
            bool near_kink = false;
            for (double k : kinks)
                if (std::fabs(t - k) < 1e-4) near_kink = true;
            if (near_kink) continue;
            double fd = (f(t + h) - f(t - h)) / (2.0 * h);
            double sym = df(t);
            CHECK(std::fabs(sym - fd) <= 1e-5 * (1.0 + std::fabs(sym)));
        }
    }
}

TEST_CASE("differentiating abs records the kink it introduces") {
    std::vector<double> kinks;
    differentiate(parse("abs(t - 0.5)"), &kinks);
    REQUIRE(kinks.size() == 1);
    CHECK(kinks[0] == 0.5);

    kinks.clear();
    differentiate(parse("abs(2*t + 1)"), &kinks);
    REQUIRE(kinks.size() == 1);
    CHECK(kinks[0] == -0.5);

    kinks.clear();
    Expression d = differentiate(parse("sign(t - 0.25)"), &kinks);
    REQUIRE(kinks.size() == 1);
    CHECK(kinks[0] == 0.25);
    CHECK(d(3.0) == 0.0);  // sign is flat away from its jump
}

TEST_CASE("abs over a non-affine argument refuses to differentiate") {
    CHECK_THROWS_AS(differentiate(parse("abs(t^2 - 0.5)")), NonDifferentiableError);
    CHECK_THROWS_AS(differentiate(parse("sign(sin(t))")), NonDifferentiableError);
    // but abs of a constant-slope argument is fine inside larger expressions
    CHECK_NOTHROW(differentiate(parse("t^2 + abs(t)*3")));
}

TEST_CASE("rendered text reparses to an evaluation-equivalent tree") {
    testsupport::Rng rng(20240817);
    for (const auto& c : testsupport::fd_corpus()) {
        CAPTURE(c.text);
        Expression f = parse(c.text);
        Expression g = parse(f.render());
        for (int i = 0; i < 100; ++i) {
            double t = rng.uniform(c.lo, c.hi);
            double a = f(t);
            CHECK(std::fabs(g(t) - a) <= 1e-12 * (1.0 + std::fabs(a)));
        }
    }
    // parenthesization keeps negation and powers apart
    CHECK(parse(parse("-(t^2)").render())(2.0) == -4.0);
    CHECK(parse(parse("-t^2").render())(2.0) == 4.0);
    CHECK(parse(parse("(t+1)*(t+2)").render())(1.0) == 6.0);
    CHECK(parse(parse("t - (1 - t)").render())(0.0) == -1.0);
    CHECK(parse(parse("1/(2/t)").render())(4.0) == 2.0);
    CHECK(parse(parse("(2*t)^3").render())(1.0) == 8.0);
}

TEST_CASE("derivatives of derivatives still evaluate") {
    Expression f = parse("t^3");
    Expression d2 = differentiate(differentiate(f));
    CHECK(d2(2.0) == doctest::Approx(12.0).epsilon(1e-15));
}
