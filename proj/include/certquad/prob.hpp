#pragma once

#include "certquad/integrand.hpp"
#include "certquad/interval.hpp"
#include "certquad/norms.hpp"

namespace certquad {

// A probability density on a bounded interval. Construction samples the
// function for negativity, integrates it, and rejects anything whose mass
// differs from 1 by more than 1e-8 unless `rescale` is set, in which case
// the density is divided by its computed mass.
class DensityFunction {
  public:
    static DensityFunction make(IntegrandFunction pdf, const Interval& domain,
                                bool rescale = false);

    const IntegrandFunction& pdf() const { return pdf_; }
    const Interval& domain() const { return domain_; }

    // Mass of the *original* function as integrated at construction; after
    // rescaling the stored density integrates to 1.
    double normalization() const { return normalization_; }

  private:
    DensityFunction(IntegrandFunction pdf, Interval domain, double normalization)
        : pdf_(std::move(pdf)), domain_(domain), normalization_(normalization) {}

    IntegrandFunction pdf_;
    Interval domain_;
    double normalization_;
};

// F(x) = integral of the density from a to x; 0 at a and 1 (within the
// normalization tolerance) at b.
double cdf(const DensityFunction& d, double x);

// E(X) computed as b - integral of F over [a,b], cross-checked against the
// direct moment integral of t*f(t); disagreement beyond 1e-6 throws.
double expectation(const DensityFunction& d);

// Bound on |(F(x) + F(a+b-x))/2 - (b - E(X))/(b-a)| in terms of a norm of
// the density itself (which is F'). The L1 branch needs no norm factor
// because the density integrates to 1.
struct CdfBoundReport {
    double x = 0.0;
    double functional = 0.0;  // (F(x) + F(a+b-x)) / 2
    double target = 0.0;      // (b - E(X)) / (b - a)
    double gap = 0.0;
    double bound = 0.0;
    NormKind kind = NormKind::linf();
    bool certified = false;
};

CdfBoundReport cdf_companion_bound(const DensityFunction& d, EvaluationPoint x, NormKind kind);

} // namespace certquad
