#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace certquad {

// Parse failure; offset() is the byte offset of the offending character
// (equal to text.size() when input ended too early).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Evaluation domain failure: ln of a non-positive value, division by zero,
// sqrt of a negative, fractional power of a negative base.
class EvalError : public std::runtime_error {
  public:
    EvalError(const std::string& node, double at)
        : std::runtime_error("domain error in '" + node + "' at t = " + std::to_string(at)),
          node_(node), at_(at) {}
    const std::string& node() const { return node_; }
    double at() const { return at_; }

  private:
    std::string node_;
    double at_;
};

// Raised by differentiate() for abs over a non-affine argument; the caller
// must supply a derivative and kink list by hand in that case.
class NonDifferentiableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Immutable expression tree in one free variable t.
//
// Nodes: constants, the variable, unary neg/abs/sign/sin/cos/exp/ln/sqrt,
// and binary add/sub/mul/div/pow. Pow exponents are constants (the parser
// folds variable-free exponent subtrees and rejects the rest).
class Expression {
  public:
    enum class Kind { Constant, Variable, Unary, Binary };
    enum class UnaryOp { Neg, Abs, Sign, Sin, Cos, Exp, Ln, Sqrt };
    enum class BinaryOp { Add, Sub, Mul, Div, Pow };

    static Expression constant(double value);
    static Expression variable();
    static Expression unary(UnaryOp op, Expression operand);
    static Expression binary(BinaryOp op, Expression lhs, Expression rhs);

    Kind kind() const;
    double constant_value() const;  // Kind::Constant only
    UnaryOp unary_op() const;       // Kind::Unary only
    BinaryOp binary_op() const;     // Kind::Binary only
    Expression operand() const;     // unary child
    Expression lhs() const;
    Expression rhs() const;

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

    // Textual form that parse() accepts; parse(render()) is
    // evaluation-equivalent to this tree.
    std::string render() const;

    // (slope, intercept) when the subtree is exactly slope*t + intercept.
    std::optional<std::pair<double, double>> affine_coefficients() const;
    bool depends_on_variable() const;

  private:
    struct Node;
    explicit Expression(std::shared_ptr<const Node> node) : root_(std::move(node)) {}
    const Node& root() const { return *root_; }

    std::shared_ptr<const Node> root_;

    friend Expression differentiate(const Expression&, std::vector<double>*);
};

// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' factor)?
//   base   := number | 't' | name '(' expr ')' | '(' expr ')' | '-' base
// Numbers are decimal with optional fraction and exponent. Known function
// names: abs, sin, cos, exp, ln, sqrt, sign.
Expression parse(std::string_view text);

// Symbolic derivative with respect to t. abs (and sign) differentiate only
// over affine arguments; the kink each one introduces is appended to *kinks
// when the pointer is non-null.
Expression differentiate(const Expression& e, std::vector<double>* kinks = nullptr);

} // namespace certquad
