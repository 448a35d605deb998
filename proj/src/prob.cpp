#include "certquad/prob.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "certquad/detail/integrate.hpp"

namespace certquad {

namespace {

double mass_of(const IntegrandFunction& pdf, const Interval& domain) {
    auto g = [&pdf](double t) { return pdf.value(t); };
    return detail::integrate_with_splits(g, domain.a(), domain.b(), pdf.kink_points(),
                                         1e-12 * domain.length());
}

// The CDF as an integrand whose derivative is the density itself. Gives the
// density's norms through the same estimator the bounds module uses.
IntegrandFunction cdf_view(const DensityFunction& d) {
    const IntegrandFunction& pdf = d.pdf();
    auto value = [d](double t) { return cdf(d, t); };
    auto deriv = [pdf](double t) { return pdf.value(t); };
    return IntegrandFunction::from_callables(value, deriv, pdf.kink_points(), pdf.exact());
}

} // namespace

DensityFunction DensityFunction::make(IntegrandFunction pdf, const Interval& domain,
                                      bool rescale) {
    constexpr int kSamples = 257;
    for (int i = 0; i <= kSamples; ++i) {
        double t = domain.a() + domain.length() * i / kSamples;
        double v = pdf.value(t);
        if (!std::isfinite(v)) throw std::invalid_argument("density is non-finite inside [a, b]");
        if (v < -1e-12)
            throw std::invalid_argument("density is negative at t = " + std::to_string(t));
    }

    double mass = mass_of(pdf, domain);
    if (std::fabs(mass - 1.0) > 1e-8) {
        if (!rescale)
            throw std::invalid_argument("density mass " + std::to_string(mass) +
                                        " differs from 1; pass rescale to normalize");
        if (!(mass > 0.0)) throw std::invalid_argument("density mass must be positive");
        IntegrandFunction original = pdf;
        std::optional<IntegrandFunction::Callable> deriv;
        if (original.has_derivative())
            deriv = [original, mass](double t) { return original.derivative(t) / mass; };
        pdf = IntegrandFunction::from_callables(
            [original, mass](double t) { return original.value(t) / mass; }, std::move(deriv),
            original.kink_points(), original.exact());
    }
    return DensityFunction(std::move(pdf), domain, mass);
}

double cdf(const DensityFunction& d, double x) {
    const Interval& domain = d.domain();
    if (!domain.contains(x)) throw std::invalid_argument("cdf argument outside [a, b]");
    auto g = [&d](double t) { return d.pdf().value(t); };
    return detail::integrate_with_splits(g, domain.a(), x, d.pdf().kink_points(),
                                         1e-11 * domain.length());
}

double expectation(const DensityFunction& d) {
    const Interval& domain = d.domain();
    auto F = [&d](double t) { return cdf(d, t); };
    double integral_of_cdf = detail::integrate_with_splits(F, domain.a(), domain.b(),
                                                           d.pdf().kink_points(),
                                                           5e-10 * domain.length());
    double via_identity = domain.b() - integral_of_cdf;

    auto moment = [&d](double t) { return t * d.pdf().value(t); };
    double scale = 1.0 + std::max(std::fabs(domain.a()), std::fabs(domain.b()));
    double via_moment = detail::integrate_with_splits(moment, domain.a(), domain.b(),
                                                      d.pdf().kink_points(),
                                                      1e-11 * scale * domain.length());

    if (std::fabs(via_identity - via_moment) > 1e-6)
        throw std::runtime_error("expectation cross-check failed; density too inaccurate");
    return via_identity;
}

CdfBoundReport cdf_companion_bound(const DensityFunction& d, EvaluationPoint x, NormKind kind) {
    const Interval& domain = d.domain();
    require_left_half(domain, x.x);

    CdfBoundReport r;
    r.x = x.x;
    r.kind = kind;
    r.functional = 0.5 * (cdf(d, x.x) + cdf(d, domain.reflect(x.x)));
    r.target = (domain.b() - expectation(d)) / domain.length();
    r.gap = std::fabs(r.functional - r.target);

    double len = domain.length();
    double u = (x.x - domain.a()) / len;
    double v = (domain.midpoint() - x.x) / len;
    double w = (x.x - domain.quarter()) / len;

    switch (kind.tag()) {
        case NormKind::Tag::LInf: {
            double norm = estimate_norm(cdf_view(d), kind, domain.a(), domain.b());
            r.bound = (0.125 + 2.0 * w * w) * len * norm;
            break;
        }
        case NormKind::Tag::Lp: {
            double norm = estimate_norm(cdf_view(d), kind, domain.a(), domain.b());
            double q = kind.conjugate();
            r.bound = std::pow(2.0, 1.0 / q) * std::pow(q + 1.0, -1.0 / q) *
                      std::pow(std::pow(u, q + 1.0) + std::pow(v, q + 1.0), 1.0 / q) *
                      std::pow(len, 1.0 / q) * norm;
            break;
        }
        case NormKind::Tag::L1:
            // The density integrates to 1, so the norm factor drops out.
            r.bound = 0.25 + std::fabs(w);
            break;
    }

    r.certified = d.pdf().exact();
    return r;
}

} // namespace certquad
