#pragma once

#include <optional>

#include "certquad/integrand.hpp"
#include "certquad/interval.hpp"
#include "certquad/norms.hpp"

namespace certquad {

// Conjugate pair (alpha, beta) selecting one member of the refinement
// family; alpha > 1 and 1/alpha + 1/beta = 1 (checked to 1e-15).
struct HolderPair {
    HolderPair(double alpha, double beta);
    double alpha;
    double beta;
};

// Every bound the library knows for |companion - mean| at one evaluation
// point, in one norm of f'. `first_bound` is the segment-norm majorant the
// others coarsen; the refinement branches trade the three segment norms for
// a max, a Hoelder combination, or a whole-interval norm. `combined` exists
// only for Lp, where the alpha = q choice collapses to a single-norm bound.
struct BoundReport {
    double x = 0.0;
    NormKind kind = NormKind::linf();
    double first_bound = 0.0;
    double max_branch = 0.0;
    std::optional<double> holder_branch;
    std::optional<HolderPair> holder;
    double dual_max_branch = 0.0;
    std::optional<double> combined;
    bool certified = false;

    // Smallest available majorant.
    double best() const;
};

// One half of the two-point rule: (f(x) + f(a+b-x)) / 2.
double companion_value(const IntegrandFunction& f, EvaluationPoint x, const Interval& domain);

// (1 / (b-a)) * integral of f over the domain, computed adaptively.
double integral_mean(const IntegrandFunction& f, const Interval& domain);

// The exact error majorant: the weighted integral of |f'| with weights
// (t-a) on [a,x], |t-(a+b)/2| on [x,a+b-x], (b-t) on [a+b-x,b], divided by
// (b-a). Sits between the true gap and every bound_for value.
double m_exact(const IntegrandFunction& f, EvaluationPoint x, const Interval& domain);

// Assemble the bound family from precomputed segment norms. The Hoelder
// branch is filled only when a pair is supplied. Throws when the norms were
// taken at a different x than requested.
BoundReport bound_for(const SegmentNorms& norms, EvaluationPoint x, const Interval& domain,
                      std::optional<HolderPair> holder = std::nullopt);

// Bound for f in the Lipschitz class of order k (0 < k <= 1) with constant
// M >= 0:  [2^{k+1} (x-a)^{k+1} + (a+b-2x)^{k+1}] / [2^k (k+1) (b-a)] * M.
// At k = 1 this coincides with the L-infinity max_branch with M = ||f'||.
double lipschitz_bound(EvaluationPoint x, const Interval& domain, double k, double M);

} // namespace certquad
