#include "certquad/detail/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace certquad::detail {

namespace {

[[noreturn]] void bad_value() { throw std::runtime_error("non-finite value in integrand"); }

double checked(const std::function<double(double)>& g, double t) {
    double v = g(t);
    if (!std::isfinite(v)) bad_value();
    return v;
}

struct SimpsonState {
    const std::function<double(double)>& g;
};

double simpson(double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
}

double refine(const SimpsonState& s, double lo, double hi, double flo, double fmid, double fhi,
              double whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid);
    double rm = 0.5 * (mid + hi);
    double flm = checked(s.g, lm);
    double frm = checked(s.g, rm);
    double left = simpson(lo, mid, flo, flm, fmid);
    double right = simpson(mid, hi, fmid, frm, fhi);
    double delta = left + right - whole;
    // Richardson: the composite estimate plus delta/15 is one order better.
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return refine(s, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1) +
           refine(s, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& g, double lo, double hi,
                        double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("integration range is inverted");
    if (lo == hi) return 0.0;
    SimpsonState s{g};
    double flo = checked(g, lo);
    double fhi = checked(g, hi);
    double mid = 0.5 * (lo + hi);
    double fmid = checked(g, mid);
    double whole = simpson(lo, hi, flo, fmid, fhi);
    return refine(s, lo, hi, flo, fmid, fhi, whole, std::max(tol, 0.0), 48);
}

double integrate_with_splits(const std::function<double(double)>& g, double lo, double hi,
                             const std::vector<double>& splits, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("integration range is inverted");
    if (lo == hi) return 0.0;
    std::vector<double> cuts;
    cuts.push_back(lo);
    for (double s : splits)
        if (lo < s && s < hi) cuts.push_back(s);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    double span = hi - lo;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double piece_tol = tol * (cuts[i + 1] - cuts[i]) / span;
        total += adaptive_simpson(g, cuts[i], cuts[i + 1], piece_tol);
    }
    return total;
}

double scan_max(const std::function<double(double)>& g, double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("scan range is inverted");
    if (lo == hi) return checked(g, lo);

    constexpr int kSamples = 128;
    double best = -HUGE_VAL;
    int best_i = 0;
    for (int i = 0; i <= kSamples; ++i) {
        double t = lo + (hi - lo) * i / kSamples;
        double v = checked(g, t);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }

    // Golden-section polish on the bracket around the best sample.
    double left = lo + (hi - lo) * std::max(best_i - 1, 0) / kSamples;
    double right = lo + (hi - lo) * std::min(best_i + 1, kSamples) / kSamples;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = right - kInvPhi * (right - left);
    double x2 = left + kInvPhi * (right - left);
    double f1 = checked(g, x1);
    double f2 = checked(g, x2);
    for (int iter = 0; iter < 90; ++iter) {
        if (f1 < f2) {
            left = x1;
            x1 = x2;
            f1 = f2;
            x2 = left + kInvPhi * (right - left);
            f2 = checked(g, x2);
        } else {
            right = x2;
            x2 = x1;
            f2 = f1;
            x1 = right - kInvPhi * (right - left);
            f1 = checked(g, x1);
        }
    }
    return std::max({best, f1, f2});
}

} // namespace certquad::detail
