#include "certquad/norms.hpp"

#include <algorithm>
#include <cstdio>

#include "certquad/detail/integrate.hpp"

namespace certquad {

std::string NormKind::name() const {
    switch (tag_) {
        case Tag::LInf: return "inf";
        case Tag::L1: return "l1";
        case Tag::Lp: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "lp(%g)", p_);
            return buf;
        }
    }
    return "?";
}

namespace {

// Sup of |f'| over [lo, hi], scanning each kink-free piece separately.
double sup_abs_derivative(const IntegrandFunction& f, double lo, double hi) {
    auto g = [&f](double t) { return std::fabs(f.derivative(t)); };
    std::vector<double> cuts;
    cuts.push_back(lo);
    for (double k : f.kink_points())
        if (lo < k && k < hi) cuts.push_back(k);
    cuts.push_back(hi);
    double best = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        best = std::max(best, detail::scan_max(g, cuts[i], cuts[i + 1]));
    return best;
}

} // namespace

double estimate_norm(const IntegrandFunction& f, NormKind kind, double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("norm segment is inverted");
    if (!f.has_derivative()) throw std::logic_error("integrand carries no derivative");
    if (lo == hi) return 0.0;

    if (kind.is_linf()) return sup_abs_derivative(f, lo, hi);

    // Scale by the sup so the integrand stays in [0, 1]; keeps large
    // exponents (p in the hundreds) away from overflow.
    double s = sup_abs_derivative(f, lo, hi);
    if (s == 0.0) return 0.0;
    double tol = 1e-13 * (hi - lo);

    if (kind.is_l1()) {
        auto g = [&f, s](double t) { return std::fabs(f.derivative(t)) / s; };
        return s * detail::integrate_with_splits(g, lo, hi, f.kink_points(), tol);
    }

    double p = kind.p();
    auto g = [&f, s, p](double t) { return std::pow(std::fabs(f.derivative(t)) / s, p); };
    double integral = detail::integrate_with_splits(g, lo, hi, f.kink_points(), tol);
    return s * std::pow(integral, 1.0 / p);
}

SegmentNorms segment_norms(const IntegrandFunction& f, double x, const Interval& iv,
                           NormKind kind) {
    require_left_half(iv, x);
    double reflected = iv.reflect(x);

    SegmentNorms out;
    out.x = x;
    out.kind = kind;
    out.left = estimate_norm(f, kind, iv.a(), x);
    out.right = estimate_norm(f, kind, reflected, iv.b());
    out.whole = estimate_norm(f, kind, iv.a(), iv.b());

    if (x < reflected) {
        out.middle = estimate_norm(f, kind, x, reflected);
    } else if (kind.is_linf()) {
        // Degenerate middle segment [m, m]: the sup over a point is |f'(m)|
        // when f' is defined there, conventionally 0 when m is a kink.
        double m = iv.midpoint();
        bool at_kink = false;
        for (double k : f.kink_points())
            if (std::fabs(k - m) <= 1e-14 * (1.0 + std::fabs(m))) at_kink = true;
        out.middle = at_kink ? 0.0 : std::fabs(f.derivative(m));
    } else {
        out.middle = 0.0;
    }

    out.certified = f.exact();
    return out;
}

} // namespace certquad
