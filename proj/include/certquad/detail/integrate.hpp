#pragma once

#include <functional>
#include <vector>

namespace certquad::detail {

// Adaptive Simpson with Richardson correction. `tol` is an absolute target
// for the whole range; throws std::runtime_error on non-finite values.
double adaptive_simpson(const std::function<double(double)>& g, double lo, double hi, double tol);

// Same, but the range is first cut at every split point that falls strictly
// inside (lo, hi) — used to keep integrands smooth on each piece. `splits`
// need not be sorted or in range.
double integrate_with_splits(const std::function<double(double)>& g, double lo, double hi,
                             const std::vector<double>& splits, double tol);

// Maximum of g over [lo, hi]: dense scan followed by golden-section polish
// around the best sample.
double scan_max(const std::function<double(double)>& g, double lo, double hi);

} // namespace certquad::detail
