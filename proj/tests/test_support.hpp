#pragma once

// Shared helpers for the test binaries: a seeded RNG wrapper and random
// polynomial generators whose exact derivatives and antiderivatives double
// as oracles.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

class Rng {
  public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  private:
    std::mt19937 gen_;
};

inline std::string number_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// c0 + c1*t + ... + cd*t^d as parser input.
inline std::string poly_text(const std::vector<double>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += " + ";
        s += "(" + number_text(coeffs[i]) + ")";
        for (std::size_t j = 0; j < i; ++j) s += "*t";
    }
    return s;
}

inline std::vector<double> random_coeffs(Rng& rng, int degree, double lo = -3.0,
                                         double hi = 3.0) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (double& v : c) v = rng.uniform(lo, hi);
    return c;
}

inline double poly_eval(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

// Exact integral of the polynomial over [lo, hi].
inline double poly_integral(const std::vector<double>& c, double lo, double hi) {
    double vhi = 0.0, vlo = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        vhi = vhi * hi + c[i] / static_cast<double>(i + 1);
        vlo = vlo * lo + c[i] / static_cast<double>(i + 1);
    }
    return vhi * hi - vlo * lo;
}

// Polynomial plus a scaled kink term: poly(t) + m*abs(t - s). Piecewise
// polynomial, differentiable everywhere except s.
inline std::string kinked_poly_text(const std::vector<double>& coeffs, double m, double s) {
    return poly_text(coeffs) + " + (" + number_text(m) + ")*abs(t - (" + number_text(s) + "))";
}

// Fixed differentiation corpus checked by central differences, with the
// range each expression is sampled over.
struct FdCase {
    const char* text;
    double lo;
    double hi;
};

inline const std::vector<FdCase>& fd_corpus() {
    static const std::vector<FdCase> cases = {
        {"t^2", -2.0, 2.0},
        {"t^3 - 2*t + 1", -2.0, 2.0},
        {"sin(t)", -3.0, 3.0},
        {"cos(3*t)", -2.0, 2.0},
        {"exp(-(t^2))", -2.0, 2.0},
        {"ln(t^2 + 1)", -2.0, 2.0},
        {"sqrt(t^2 + 1)", -2.0, 2.0},
        {"abs(t - 0.5)", -1.0, 2.0},
        {"abs(2*t + 1)", -2.0, 1.0},
        {"t*sin(t)", -3.0, 3.0},
        {"sin(t)/(t^2 + 2)", -3.0, 3.0},
        {"t^2*exp(t)", -1.5, 1.5},
        {"(t + 1)^4", -2.0, 2.0},
        {"abs(t)*t^2", -1.5, 1.5},
        {"2/(t + 3)", -2.0, 2.0},
    };
    return cases;
}

} // namespace testsupport
