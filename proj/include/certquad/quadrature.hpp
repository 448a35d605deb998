#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "certquad/integrand.hpp"
#include "certquad/interval.hpp"
#include "certquad/norms.hpp"

namespace certquad {

// Strictly increasing nodes a = x_0 < x_1 < ... < x_n = b, n >= 1.
class Partition {
  public:
    explicit Partition(std::vector<double> nodes);

    const std::vector<double>& nodes() const { return nodes_; }
    std::size_t intervals() const { return nodes_.size() - 1; }
    double h(std::size_t i) const { return nodes_[i + 1] - nodes_[i]; }
    double mesh() const;
    Interval domain() const { return Interval(nodes_.front(), nodes_.back()); }

  private:
    std::vector<double> nodes_;
};

Partition uniform_partition(const Interval& domain, std::size_t n);

// Outcome of a quadrature pass. `per_interval` pairs (estimate, bound) line
// up with the partition's intervals; `per_interval_sum` is the sum of the
// bounds, never larger than the coarser `remainder_bound` aggregate. The
// adaptive driver reports the per-interval sum as its remainder_bound and
// clears `converged` when it stopped at the interval cap instead of at tol.
struct QuadratureResult {
    double estimate = 0.0;
    double remainder_bound = 0.0;
    NormKind kind = NormKind::linf();
    Partition partition;
    std::vector<std::pair<double, double>> per_interval;
    double per_interval_sum = 0.0;
    bool certified = false;
    bool converged = true;
};

// The two-point rule summed over the partition:
//   (1/2) sum_i [f((3 x_i + x_{i+1})/4) + f((x_i + 3 x_{i+1})/4)] h_i.
double composite_rule(const IntegrandFunction& f, const Partition& partition);

// Certified remainder majorants for the composite rule. Per interval:
//   L-inf: (1/8) h_i^2 ||f'||_inf,   Lp: h_i^{1+1/q} ||f'||_p / (4 (q+1)^{1/q}),
//   L1:    (1/4) h_i ||f'||_1,
// each norm taken over [x_i, x_{i+1}]. The aggregate uses the whole-interval
// norm: (1/8)||f'||_inf sum h_i^2, ||f'||_p (sum h_i^{q+1})^{1/q} / (4(q+1)^{1/q}),
// or (1/4)||f'||_1 * mesh.
QuadratureResult remainder_bound(const IntegrandFunction& f, const Partition& partition,
                                 NormKind kind);

// Worst-first refinement keyed by per-interval bounds: bisect the interval
// with the largest bound until the bound sum is <= tol or `cap` intervals
// exist. Kink points of f seed the initial partition.
QuadratureResult adaptive_integrate(const IntegrandFunction& f, const Interval& domain,
                                    double tol, NormKind kind, std::size_t cap = 1'000'000);

} // namespace certquad
