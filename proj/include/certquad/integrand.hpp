#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "certquad/expr.hpp"

namespace certquad {

// A real function of one variable packaged with everything the bound
// machinery needs: point evaluation, optionally a derivative, the points
// where that derivative jumps, and whether the pairing is trustworthy.
//
// "Exact" means the derivative and kink list were produced symbolically (or
// supplied by a closed-form construction), so norm estimates built from them
// can be marked certified. Hand-supplied callables are taken at face value
// but never certified.
class IntegrandFunction {
  public:
    using Callable = std::function<double(double)>;

    // Differentiates `f` symbolically; throws NonDifferentiableError when
    // abs/sign appears over a non-affine argument.
    static IntegrandFunction from_expression(Expression f);

    // Caller supplies the derivative and its jump points explicitly. Used
    // when the symbolic route is unavailable but closed forms are known.
    static IntegrandFunction from_expression(Expression f, Expression df,
                                             std::vector<double> kinks);

    // Evaluation only; norm estimates of the derivative will be refused.
    static IntegrandFunction value_only(Expression f);

    static IntegrandFunction from_callables(Callable value,
                                            std::optional<Callable> derivative,
                                            std::vector<double> kinks, bool exact);

    double value(double t) const { return value_(t); }
    double operator()(double t) const { return value_(t); }

    bool has_derivative() const { return static_cast<bool>(derivative_); }
    double derivative(double t) const;

    // Sorted, deduplicated. Empty when the derivative is continuous.
    const std::vector<double>& kink_points() const { return kinks_; }

    bool exact() const { return exact_; }

    const std::optional<Expression>& expression() const { return source_; }

  private:
    IntegrandFunction() = default;

    Callable value_;
    std::optional<Callable> derivative_;
    std::vector<double> kinks_;
    bool exact_ = false;
    std::optional<Expression> source_;
};

} // namespace certquad
