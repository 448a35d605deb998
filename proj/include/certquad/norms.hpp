#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "certquad/integrand.hpp"
#include "certquad/interval.hpp"

namespace certquad {

// Which norm of the derivative a bound is stated in. `lp(p)` requires
// 1 < p < infinity; the endpoints have their own tags.
class NormKind {
  public:
    enum class Tag { LInf, Lp, L1 };

    static NormKind linf() { return NormKind(Tag::LInf, 0.0); }
    static NormKind l1() { return NormKind(Tag::L1, 0.0); }
    static NormKind lp(double p) {
        if (!(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("lp requires a finite exponent p > 1");
        return NormKind(Tag::Lp, p);
    }

    Tag tag() const { return tag_; }
    bool is_linf() const { return tag_ == Tag::LInf; }
    bool is_l1() const { return tag_ == Tag::L1; }
    bool is_lp() const { return tag_ == Tag::Lp; }

    double p() const {
        if (tag_ != Tag::Lp) throw std::logic_error("p() is only defined for lp norms");
        return p_;
    }

    // The Hoelder conjugate q with 1/p + 1/q = 1.
    double conjugate() const {
        if (tag_ != Tag::Lp) throw std::logic_error("conjugate() is only defined for lp norms");
        return p_ / (p_ - 1.0);
    }

    std::string name() const;

  private:
    NormKind(Tag tag, double p) : tag_(tag), p_(p) {}
    Tag tag_;
    double p_;
};

// Norm of f' over [lo, hi] in the requested sense. Degenerate ranges
// (lo == hi) give 0; lo > hi is an error; the function must carry a
// derivative. Kink points interior to the range split the integration so
// the estimate never straddles a jump.
double estimate_norm(const IntegrandFunction& f, NormKind kind, double lo, double hi);

// The three derivative norms induced by an evaluation point x in the left
// half of [a, b]: over [a, x], [x, a+b-x] and [a+b-x, b], plus the norm over
// the whole interval. `certified` is set when the values came from an exact
// derivative (symbolic or closed form), meaning downstream bounds built from
// them are mathematically valid rather than merely sampled.
struct SegmentNorms {
    double x = 0.0;
    NormKind kind = NormKind::linf();
    double left = 0.0;
    double middle = 0.0;
    double right = 0.0;
    double whole = 0.0;
    bool certified = false;
};

SegmentNorms segment_norms(const IntegrandFunction& f, double x, const Interval& iv,
                           NormKind kind);

} // namespace certquad
