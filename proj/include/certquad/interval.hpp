#pragma once

#include <cmath>
#include <stdexcept>

namespace certquad {

// Closed interval [a, b] with a < b. The integration domain used everywhere.
class Interval {
  public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!(std::isfinite(a) && std::isfinite(b)))
            throw std::invalid_argument("interval endpoints must be finite");
        if (!(a < b))
            throw std::invalid_argument("interval requires a < b");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }
    double midpoint() const { return 0.5 * (a_ + b_); }
    // The left quarter point (3a+b)/4, where the two-point rule is tightest.
    double quarter() const { return 0.25 * (3.0 * a_ + b_); }
    // Reflection x |-> a+b-x about the midpoint.
    double reflect(double x) const { return a_ + b_ - x; }
    bool contains(double t) const { return a_ <= t && t <= b_; }

  private:
    double a_;
    double b_;
};

// Evaluation point for the two-point rule; valid range is [a, (a+b)/2].
struct EvaluationPoint {
    double x;
};

// Throws unless a <= x <= (a+b)/2. The rule is symmetric under x |-> a+b-x,
// so points in the right half are rejected rather than silently mirrored.
inline void require_left_half(const Interval& domain, double x) {
    if (!(domain.a() <= x && x <= domain.midpoint()))
        throw std::invalid_argument("evaluation point must lie in [a, (a+b)/2]");
}

} // namespace certquad
