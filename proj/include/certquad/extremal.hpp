#pragma once

#include <optional>
#include <string>

#include "certquad/bounds.hpp"
#include "certquad/integrand.hpp"
#include "certquad/interval.hpp"
#include "certquad/norms.hpp"

namespace certquad {

// A built-in function that achieves (or approaches) equality in one of the
// bound families, carrying closed-form values so sharpness tests compare
// exact numbers instead of estimates. `norms` returns closed-form segment
// norms at any valid evaluation point, or nullopt when the derivative norms
// do not exist (the Lipschitz witness with k < 1 has an unbounded
// derivative at its kinks).
class WitnessFunction {
  public:
    const IntegrandFunction& function() const { return f_; }
    const Interval& domain() const { return domain_; }
    const std::string& name() const { return name_; }

    // The evaluation point whose sharpness claim this witness backs.
    double designated_x() const { return designated_x_; }

    // Closed forms: the two-point functional at designated_x, the integral
    // mean over the domain, and their absolute difference.
    double companion_closed() const { return companion_; }
    double mean_closed() const { return mean_; }
    double gap_closed() const;

    std::optional<SegmentNorms> norms(double x, NormKind kind) const;

  private:
    friend WitnessFunction make_fstar(EvaluationPoint x, double k, const Interval& domain);
    friend WitnessFunction make_midpoint_kink(double k, const Interval& domain);
    friend WitnessFunction make_quarter_kink(const Interval& domain);

    WitnessFunction(IntegrandFunction f, Interval domain, std::string name, double designated_x,
                    double companion, double mean, std::optional<double> derivative_magnitude);

    IntegrandFunction f_;
    Interval domain_;
    std::string name_;
    double designated_x_;
    double companion_;
    double mean_;
    // |f'| is this constant a.e. when set; closed-form norms derive from it.
    std::optional<double> slope_magnitude_;
};

// The Lipschitz-class extremal: (x-t)^k on [a,x], (t-x)^k on [x,(a+b)/2],
// mirrored through the midpoint. Its gap equals lipschitz_bound(x, k, M=1)
// exactly. Kinks at x, (a+b)/2, a+b-x. Requires 0 < k <= 1.
WitnessFunction make_fstar(EvaluationPoint x, double k, const Interval& domain);

// k|t - (a+b)/2|: equality witness for the trapezoid-form bounds taken at
// x = a. Requires k > 0.
WitnessFunction make_midpoint_kink(double k, const Interval& domain);

// Distance to the nearer quarter point: |t - (3a+b)/4| on the left half,
// |t - (a+3b)/4| on the right. Equality witness at x = (3a+b)/4, where the
// two-point functional vanishes and the gap is (b-a)/8.
WitnessFunction make_quarter_kink(const Interval& domain);

struct IdentityCheck {
    double lhs = 0.0;  // companion value minus integral mean
    double rhs = 0.0;  // the three weighted integrals of f'
    double gap = 0.0;  // |lhs - rhs|
};

// Numerically confirm that companion - mean equals the signed weighted
// integral of f' with weights (t-a), (t-(a+b)/2), (t-b) over the three
// segments, scaled by 1/(b-a). Both sides are computed independently.
IdentityCheck verify_identity(const IntegrandFunction& f, EvaluationPoint x,
                              const Interval& domain);

} // namespace certquad
