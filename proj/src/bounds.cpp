#include "certquad/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "certquad/detail/integrate.hpp"

namespace certquad {

HolderPair::HolderPair(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw std::invalid_argument("conjugate pair requires finite alpha > 1");
    if (std::fabs(1.0 / alpha + 1.0 / beta - 1.0) > 1e-15)
        throw std::invalid_argument("1/alpha + 1/beta must equal 1");
}

double BoundReport::best() const {
    double m = std::min({first_bound, max_branch, dual_max_branch});
    if (holder_branch) m = std::min(m, *holder_branch);
    if (combined) m = std::min(m, *combined);
    return m;
}

double companion_value(const IntegrandFunction& f, EvaluationPoint x, const Interval& domain) {
    require_left_half(domain, x.x);
    return 0.5 * (f.value(x.x) + f.value(domain.reflect(x.x)));
}

double integral_mean(const IntegrandFunction& f, const Interval& domain) {
    auto g = [&f](double t) { return f.value(t); };
    // Rough magnitude from a coarse sample, to set an absolute tolerance
    // that behaves like a relative one.
    double scale = 0.0;
    for (int i = 0; i <= 32; ++i) {
        double t = domain.a() + domain.length() * i / 32;
        scale = std::max(scale, std::fabs(f.value(t)));
    }
    double tol = 1e-13 * domain.length() * (1.0 + scale);
    double integral = detail::integrate_with_splits(g, domain.a(), domain.b(), f.kink_points(), tol);
    return integral / domain.length();
}

double m_exact(const IntegrandFunction& f, EvaluationPoint x, const Interval& domain) {
    require_left_half(domain, x.x);
    if (!f.has_derivative()) throw std::logic_error("integrand carries no derivative");
    double a = domain.a(), b = domain.b();
    double mid = domain.midpoint();
    double r = domain.reflect(x.x);

    std::vector<double> splits = f.kink_points();
    splits.push_back(mid);

    double scale = 1.0 + estimate_norm(f, NormKind::linf(), a, b);
    double tol = 1e-13 * domain.length() * scale;

    auto left = [&](double t) { return (t - a) * std::fabs(f.derivative(t)); };
    auto middle = [&](double t) { return std::fabs(t - mid) * std::fabs(f.derivative(t)); };
    auto right = [&](double t) { return (b - t) * std::fabs(f.derivative(t)); };

    double total = detail::integrate_with_splits(left, a, x.x, splits, tol) +
                   detail::integrate_with_splits(middle, x.x, r, splits, tol) +
                   detail::integrate_with_splits(right, r, b, splits, tol);
    return total / domain.length();
}

BoundReport bound_for(const SegmentNorms& norms, EvaluationPoint x, const Interval& domain,
                      std::optional<HolderPair> holder) {
    require_left_half(domain, x.x);
    if (std::fabs(norms.x - x.x) > 1e-12 * (1.0 + std::fabs(x.x)))
        throw std::invalid_argument("segment norms were taken at a different evaluation point");

    double len = domain.length();
    double u = (x.x - domain.a()) / len;           // (x-a)/(b-a), in [0, 1/2]
    double v = (domain.midpoint() - x.x) / len;    // ((a+b)/2 - x)/(b-a), in [0, 1/2]
    double w = (x.x - domain.quarter()) / len;     // signed offset from the quarter point
    double nl = norms.left, nm = norms.middle, nr = norms.right;

    BoundReport r;
    r.x = x.x;
    r.kind = norms.kind;
    r.certified = norms.certified;
    r.holder = holder;

    switch (norms.kind.tag()) {
        case NormKind::Tag::LInf: {
            r.first_bound = (0.5 * (u * len) * (u * len) * (nl + nr) + (v * len) * (v * len) * nm) / len;
            r.max_branch = (0.125 + 2.0 * w * w) * len * norms.whole;
            if (holder) {
                double al = holder->alpha, be = holder->beta;
                double weight = std::pow(std::pow(2.0, 1.0 - al) * std::pow(u, 2.0 * al) +
                                             std::pow(v, 2.0 * al),
                                         1.0 / al);
                double normsum = std::pow(std::pow(nl, be) + std::pow(nm, be) + std::pow(nr, be),
                                          1.0 / be);
                r.holder_branch = weight * normsum * len;
            }
            r.dual_max_branch = std::max(0.5 * u * u, v * v) * (nl + nm + nr) * len;
            break;
        }
        case NormKind::Tag::Lp: {
            double q = norms.kind.conjugate();
            double c = std::pow(q + 1.0, -1.0 / q);
            double lq = std::pow(len, 1.0 / q);
            double uq = std::pow(u, 1.0 + 1.0 / q);
            double vq = std::pow(2.0, 1.0 / q) * std::pow(v, 1.0 + 1.0 / q);
            r.first_bound = c * (uq * (nl + nr) + vq * nm) * lq;
            r.max_branch = c * (2.0 * uq + vq) * std::max({nl, nm, nr}) * lq;
            if (holder) {
                double al = holder->alpha, be = holder->beta;
                double weight = std::pow(2.0 * std::pow(u, al * (1.0 + 1.0 / q)) +
                                             std::pow(2.0, al / q) *
                                                 std::pow(v, al * (1.0 + 1.0 / q)),
                                         1.0 / al);
                double normsum = std::pow(std::pow(nl, be) + std::pow(nm, be) + std::pow(nr, be),
                                          1.0 / be);
                r.holder_branch = c * weight * normsum * lq;
            }
            r.dual_max_branch = c * std::max(uq, vq) * (nl + nm + nr) * lq;
            r.combined = std::pow(2.0, 1.0 / q) * c *
                         std::pow(std::pow(u, q + 1.0) + std::pow(v, q + 1.0), 1.0 / q) * lq *
                         norms.whole;
            break;
        }
        case NormKind::Tag::L1: {
            r.first_bound = u * (nl + nr) + v * nm;
            r.max_branch = (0.25 + std::fabs(w)) * norms.whole;
            if (holder) {
                double al = holder->alpha, be = holder->beta;
                double weight = std::pow(2.0 * std::pow(u, al) + std::pow(v, al), 1.0 / al);
                double normsum = std::pow(std::pow(nl, be) + std::pow(nm, be) + std::pow(nr, be),
                                          1.0 / be);
                r.holder_branch = weight * normsum;
            }
            r.dual_max_branch =
                ((x.x + 0.5 * (domain.b() - 3.0 * domain.a())) / len) * std::max({nl, nm, nr});
            break;
        }
    }
    return r;
}

double lipschitz_bound(EvaluationPoint x, const Interval& domain, double k, double M) {
    require_left_half(domain, x.x);
    if (!(k > 0.0) || !(k <= 1.0)) throw std::invalid_argument("order k must lie in (0, 1]");
    if (!(M >= 0.0)) throw std::invalid_argument("constant M must be nonnegative");
    double a = domain.a(), b = domain.b();
    return (std::pow(2.0, k + 1.0) * std::pow(x.x - a, k + 1.0) +
            std::pow(a + b - 2.0 * x.x, k + 1.0)) /
           (std::pow(2.0, k) * (k + 1.0) * (b - a)) * M;
}

} // namespace certquad
