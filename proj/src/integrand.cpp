#include "certquad/integrand.hpp"

#include <algorithm>
#include <stdexcept>

namespace certquad {

namespace {

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

IntegrandFunction IntegrandFunction::from_expression(Expression f) {
    std::vector<double> kinks;
    Expression df = differentiate(f, &kinks);
    IntegrandFunction out;
    out.value_ = [f](double t) { return f.evaluate(t); };
    out.derivative_ = [df](double t) { return df.evaluate(t); };
    out.kinks_ = sorted_unique(std::move(kinks));
    out.exact_ = true;
    out.source_ = std::move(f);
    return out;
}

IntegrandFunction IntegrandFunction::from_expression(Expression f, Expression df,
                                                     std::vector<double> kinks) {
    IntegrandFunction out;
    out.value_ = [f](double t) { return f.evaluate(t); };
    out.derivative_ = [df](double t) { return df.evaluate(t); };
    out.kinks_ = sorted_unique(std::move(kinks));
    out.exact_ = true;
    out.source_ = std::move(f);
    return out;
}

IntegrandFunction IntegrandFunction::value_only(Expression f) {
    IntegrandFunction out;
    out.value_ = [f](double t) { return f.evaluate(t); };
    out.exact_ = true;
    out.source_ = std::move(f);
    return out;
}

IntegrandFunction IntegrandFunction::from_callables(Callable value,
                                                    std::optional<Callable> derivative,
                                                    std::vector<double> kinks, bool exact) {
    if (!value) throw std::invalid_argument("integrand needs a value callable");
    IntegrandFunction out;
    out.value_ = std::move(value);
    out.derivative_ = std::move(derivative);
    out.kinks_ = sorted_unique(std::move(kinks));
    out.exact_ = exact;
    return out;
}

double IntegrandFunction::derivative(double t) const {
    if (!derivative_) throw std::logic_error("integrand carries no derivative");
    return (*derivative_)(t);
}

} // namespace certquad
