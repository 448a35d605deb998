#include "certquad/extremal.hpp"

#include <cmath>
#include <utility>

#include "certquad/detail/integrate.hpp"

namespace certquad {

WitnessFunction::WitnessFunction(IntegrandFunction f, Interval domain, std::string name,
                                 double designated_x, double companion, double mean,
                                 std::optional<double> derivative_magnitude)
    : f_(std::move(f)), domain_(domain), name_(std::move(name)), designated_x_(designated_x),
      companion_(companion), mean_(mean), slope_magnitude_(derivative_magnitude) {}

double WitnessFunction::gap_closed() const { return std::fabs(companion_ - mean_); }

std::optional<SegmentNorms> WitnessFunction::norms(double x, NormKind kind) const {
    if (!slope_magnitude_) return std::nullopt;  // derivative norms do not exist
    require_left_half(domain_, x);
    double s = *slope_magnitude_;

    // |f'| equals s almost everywhere, so every norm is a closed form of
    // the segment length alone.
    auto segment = [&](double len) {
        if (kind.is_linf()) return len > 0.0 ? s : 0.0;
        if (kind.is_l1()) return s * len;
        return s * std::pow(len, 1.0 / kind.p());
    };

    SegmentNorms out;
    out.x = x;
    out.kind = kind;
    out.left = segment(x - domain_.a());
    out.middle = segment(domain_.reflect(x) - x);
    out.right = segment(x - domain_.a());
    out.whole = segment(domain_.length());
    out.certified = true;
    return out;
}

WitnessFunction make_fstar(EvaluationPoint x, double k, const Interval& domain) {
    require_left_half(domain, x.x);
    if (!(k > 0.0) || !(k <= 1.0)) throw std::invalid_argument("order k must lie in (0, 1]");

    double a = domain.a(), b = domain.b();
    double mid = domain.midpoint();
    double xx = x.x;

    auto left_value = [xx, k, mid](double t) {
        return t <= xx ? std::pow(xx - t, k) : std::pow(t - xx, k);
    };
    auto value = [left_value, a, b, mid](double t) {
        return t <= mid ? left_value(t) : left_value(a + b - t);
    };
    // Slopes: -k(x-t)^{k-1} before x, k(t-x)^{k-1} up to the midpoint, then
    // mirrored with a sign flip. Unbounded at the kinks when k < 1.
    auto left_slope = [xx, k](double t) {
        return t < xx ? -k * std::pow(xx - t, k - 1.0) : k * std::pow(t - xx, k - 1.0);
    };
    auto slope = [left_slope, a, b, mid](double t) {
        return t <= mid ? left_slope(t) : -left_slope(a + b - t);
    };

    double mean = 2.0 *
                  (std::pow(xx - a, k + 1.0) + std::pow(mid - xx, k + 1.0)) /
                  ((k + 1.0) * (b - a));

    IntegrandFunction f = IntegrandFunction::from_callables(
        value, slope, {xx, mid, domain.reflect(xx)}, /*exact=*/true);
    return WitnessFunction(std::move(f), domain, "fstar", xx, 0.0, mean,
                           k == 1.0 ? std::optional<double>(1.0) : std::nullopt);
}

WitnessFunction make_midpoint_kink(double k, const Interval& domain) {
    if (!(k > 0.0)) throw std::invalid_argument("slope k must be positive");
    double mid = domain.midpoint();

    auto value = [k, mid](double t) { return k * std::fabs(t - mid); };
    auto slope = [k, mid](double t) { return t < mid ? -k : (t > mid ? k : 0.0); };

    IntegrandFunction f = IntegrandFunction::from_callables(value, slope, {mid}, /*exact=*/true);
    // Designated point a: the rule degenerates to the trapezoid form there.
    return WitnessFunction(std::move(f), domain, "midpoint-kink", domain.a(),
                           0.5 * k * domain.length(), 0.25 * k * domain.length(), k);
}

WitnessFunction make_quarter_kink(const Interval& domain) {
    double mid = domain.midpoint();
    double q1 = domain.quarter();
    double q2 = domain.reflect(q1);

    auto value = [mid, q1, q2](double t) {
        return t <= mid ? std::fabs(t - q1) : std::fabs(t - q2);
    };
    auto slope = [mid, q1, q2](double t) {
        if (t < q1) return -1.0;
        if (t < mid) return 1.0;
        if (t < q2) return -1.0;
        return 1.0;
    };

    IntegrandFunction f =
        IntegrandFunction::from_callables(value, slope, {q1, mid, q2}, /*exact=*/true);
    return WitnessFunction(std::move(f), domain, "quarter-kink", q1, 0.0,
                           0.125 * domain.length(), 1.0);
}

IdentityCheck verify_identity(const IntegrandFunction& f, EvaluationPoint x,
                              const Interval& domain) {
    require_left_half(domain, x.x);
    if (!f.has_derivative()) throw std::logic_error("integrand carries no derivative");

    double lhs = companion_value(f, x, domain) - integral_mean(f, domain);

    double a = domain.a(), b = domain.b();
    double mid = domain.midpoint();
    double r = domain.reflect(x.x);
    std::vector<double> splits = f.kink_points();
    splits.push_back(mid);

    double scale = 1.0 + estimate_norm(f, NormKind::linf(), a, b);
    double tol = 1e-13 * domain.length() * scale;

    auto left = [&](double t) { return (t - a) * f.derivative(t); };
    auto middle = [&](double t) { return (t - mid) * f.derivative(t); };
    auto right = [&](double t) { return (t - b) * f.derivative(t); };

    double rhs = (detail::integrate_with_splits(left, a, x.x, splits, tol) +
                  detail::integrate_with_splits(middle, x.x, r, splits, tol) +
                  detail::integrate_with_splits(right, r, b, splits, tol)) /
                 domain.length();

    return IdentityCheck{lhs, rhs, std::fabs(lhs - rhs)};
}

} // namespace certquad
