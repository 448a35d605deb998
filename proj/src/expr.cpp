#include "certquad/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace certquad {

struct Expression::Node {
    Kind kind;
    double value = 0.0;                 // Constant
    UnaryOp uop = UnaryOp::Neg;         // Unary
    BinaryOp bop = BinaryOp::Add;       // Binary
    std::shared_ptr<const Node> left;   // unary operand / binary lhs
    std::shared_ptr<const Node> right;  // binary rhs

    double eval(double t) const;
};

namespace {

const char* unary_name(Expression::UnaryOp op) {
    switch (op) {
        case Expression::UnaryOp::Neg: return "neg";
        case Expression::UnaryOp::Abs: return "abs";
        case Expression::UnaryOp::Sign: return "sign";
        case Expression::UnaryOp::Sin: return "sin";
        case Expression::UnaryOp::Cos: return "cos";
        case Expression::UnaryOp::Exp: return "exp";
        case Expression::UnaryOp::Ln: return "ln";
        case Expression::UnaryOp::Sqrt: return "sqrt";
    }
    return "?";
}

} // namespace

double Expression::Node::eval(double t) const {
    using U = UnaryOp;
    using B = BinaryOp;
    switch (kind) {
        case Kind::Constant: return value;
        case Kind::Variable: return t;
        case Kind::Unary: {
            double u = left->eval(t);
            switch (uop) {
                case U::Neg: return -u;
                case U::Abs: return std::fabs(u);
                case U::Sign: return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
                case U::Sin: return std::sin(u);
                case U::Cos: return std::cos(u);
                case U::Exp: return std::exp(u);
                case U::Ln:
                    if (!(u > 0.0)) throw EvalError("ln", t);
                    return std::log(u);
                case U::Sqrt:
                    if (u < 0.0) throw EvalError("sqrt", t);
                    return std::sqrt(u);
            }
            break;
        }
        case Kind::Binary: {
            double l = left->eval(t);
            double r = right->eval(t);
            switch (bop) {
                case B::Add: return l + r;
                case B::Sub: return l - r;
                case B::Mul: return l * r;
                case B::Div:
                    if (r == 0.0) throw EvalError("div", t);
                    return l / r;
                case B::Pow: {
                    if (l == 0.0 && r < 0.0) throw EvalError("pow", t);
                    if (l < 0.0 && r != std::floor(r)) throw EvalError("pow", t);
                    double v = std::pow(l, r);
                    if (!std::isfinite(v) && std::isfinite(l)) throw EvalError("pow", t);
                    return v;
                }
            }
            break;
        }
    }
    throw std::logic_error("corrupt expression node");
}

Expression Expression::constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = value;
    return Expression(std::move(n));
}

Expression Expression::variable() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    return Expression(std::move(n));
}

Expression Expression::unary(UnaryOp op, Expression operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unary;
    n->uop = op;
    n->left = std::move(operand.root_);
    return Expression(std::move(n));
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->bop = op;
    n->left = std::move(lhs.root_);
    n->right = std::move(rhs.root_);
    return Expression(std::move(n));
}

Expression::Kind Expression::kind() const { return root_->kind; }

double Expression::constant_value() const {
    if (root_->kind != Kind::Constant) throw std::logic_error("not a constant node");
    return root_->value;
}

Expression::UnaryOp Expression::unary_op() const {
    if (root_->kind != Kind::Unary) throw std::logic_error("not a unary node");
    return root_->uop;
}

Expression::BinaryOp Expression::binary_op() const {
    if (root_->kind != Kind::Binary) throw std::logic_error("not a binary node");
    return root_->bop;
}

Expression Expression::operand() const {
    if (root_->kind != Kind::Unary) throw std::logic_error("not a unary node");
    return Expression(root_->left);
}

Expression Expression::lhs() const {
    if (root_->kind != Kind::Binary) throw std::logic_error("not a binary node");
    return Expression(root_->left);
}

Expression Expression::rhs() const {
    if (root_->kind != Kind::Binary) throw std::logic_error("not a binary node");
    return Expression(root_->right);
}

double Expression::evaluate(double t) const { return root_->eval(t); }

bool Expression::depends_on_variable() const {
    switch (root_->kind) {
        case Kind::Constant: return false;
        case Kind::Variable: return true;
        case Kind::Unary: return Expression(root_->left).depends_on_variable();
        case Kind::Binary:
            return Expression(root_->left).depends_on_variable() ||
                   Expression(root_->right).depends_on_variable();
    }
    return false;
}

std::optional<std::pair<double, double>> Expression::affine_coefficients() const {
    using B = BinaryOp;
    switch (root_->kind) {
        case Kind::Constant: return std::pair{0.0, root_->value};
        case Kind::Variable: return std::pair{1.0, 0.0};
        case Kind::Unary:
            if (root_->uop == UnaryOp::Neg) {
                if (auto c = Expression(root_->left).affine_coefficients())
                    return std::pair{-c->first, -c->second};
            } else if (!Expression(root_->left).depends_on_variable()) {
                return std::pair{0.0, evaluate(0.0)};
            }
            return std::nullopt;
        case Kind::Binary: {
            Expression l(root_->left), r(root_->right);
            auto cl = l.affine_coefficients();
            auto cr = r.affine_coefficients();
            switch (root_->bop) {
                case B::Add:
                    if (cl && cr) return std::pair{cl->first + cr->first, cl->second + cr->second};
                    break;
                case B::Sub:
                    if (cl && cr) return std::pair{cl->first - cr->first, cl->second - cr->second};
                    break;
                case B::Mul:
                    if (cl && cr) {
                        if (cl->first == 0.0) return std::pair{cl->second * cr->first, cl->second * cr->second};
                        if (cr->first == 0.0) return std::pair{cr->second * cl->first, cr->second * cl->second};
                    }
                    break;
                case B::Div:
                    if (cl && cr && cr->first == 0.0 && cr->second != 0.0)
                        return std::pair{cl->first / cr->second, cl->second / cr->second};
                    break;
                case B::Pow:
                    if (cl && cr && cr->first == 0.0 && cr->second == 1.0) return cl;
                    if (!depends_on_variable()) return std::pair{0.0, evaluate(0.0)};
                    break;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over the grammar in the header.

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression run() {
        if (text_.empty()) throw ParseError("empty input", 0);
        Expression e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "' " + what, pos_);
        ++pos_;
    }

    Expression expr() {
        Expression e = term();
        for (;;) {
            if (accept('+'))
                e = Expression::binary(Expression::BinaryOp::Add, e, term());
            else if (accept('-'))
                e = Expression::binary(Expression::BinaryOp::Sub, e, term());
            else
                return e;
        }
    }

    Expression term() {
        Expression e = factor();
        for (;;) {
            if (accept('*'))
                e = Expression::binary(Expression::BinaryOp::Mul, e, factor());
            else if (accept('/'))
                e = Expression::binary(Expression::BinaryOp::Div, e, factor());
            else
                return e;
        }
    }

    Expression factor() {
        Expression b = base();
        skip_ws();
        std::size_t caret = pos_;
        if (accept('^')) {
            Expression exponent = factor();  // right-associative
            if (exponent.depends_on_variable())
                throw ParseError("exponent must be a constant", caret);
            return Expression::binary(Expression::BinaryOp::Pow, b,
                                      Expression::constant(exponent.evaluate(0.0)));
        }
        return b;
    }

    Expression base() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected a number, 't', a function call, '(' or '-'", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return Expression::unary(Expression::UnaryOp::Neg, base());
        }
        if (c == '(') {
            ++pos_;
            Expression e = expr();
            expect(')', "to close the group");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError("expected a number, 't', a function call, '(' or '-'", pos_);
    }

    Expression number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // 'e' starts an identifier, not an exponent
            }
        }
        std::string token(text_.substr(start, pos_ - start));
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size() || !std::isfinite(v))
            throw ParseError("malformed number", start);
        return Expression::constant(v);
    }

    Expression identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name == "t") return Expression::variable();

        Expression::UnaryOp op;
        if (name == "abs") op = Expression::UnaryOp::Abs;
        else if (name == "sin") op = Expression::UnaryOp::Sin;
        else if (name == "cos") op = Expression::UnaryOp::Cos;
        else if (name == "exp") op = Expression::UnaryOp::Exp;
        else if (name == "ln") op = Expression::UnaryOp::Ln;
        else if (name == "sqrt") op = Expression::UnaryOp::Sqrt;
        else if (name == "sign") op = Expression::UnaryOp::Sign;
        else throw ParseError("unknown identifier '" + name + "'", start);

        expect('(', ("after '" + name + "'").c_str());
        Expression arg = expr();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',')
            throw ParseError("'" + name + "' takes exactly one argument", pos_);
        expect(')', "to close the argument list");
        return Expression::unary(op, arg);
    }
};

} // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Differentiation with local constant folding.

namespace {

bool is_const(const Expression& e, double v) {
    return e.kind() == Expression::Kind::Constant && e.constant_value() == v;
}

Expression mk_neg(Expression e) {
    if (e.kind() == Expression::Kind::Constant) return Expression::constant(-e.constant_value());
    return Expression::unary(Expression::UnaryOp::Neg, std::move(e));
}

Expression mk_add(Expression l, Expression r) {
    if (is_const(l, 0.0)) return r;
    if (is_const(r, 0.0)) return l;
    if (l.kind() == Expression::Kind::Constant && r.kind() == Expression::Kind::Constant)
        return Expression::constant(l.constant_value() + r.constant_value());
    return Expression::binary(Expression::BinaryOp::Add, std::move(l), std::move(r));
}

Expression mk_sub(Expression l, Expression r) {
    if (is_const(r, 0.0)) return l;
    if (is_const(l, 0.0)) return mk_neg(std::move(r));
    if (l.kind() == Expression::Kind::Constant && r.kind() == Expression::Kind::Constant)
        return Expression::constant(l.constant_value() - r.constant_value());
    return Expression::binary(Expression::BinaryOp::Sub, std::move(l), std::move(r));
}

Expression mk_mul(Expression l, Expression r) {
    if (is_const(l, 0.0) || is_const(r, 0.0)) return Expression::constant(0.0);
    if (is_const(l, 1.0)) return r;
    if (is_const(r, 1.0)) return l;
    if (l.kind() == Expression::Kind::Constant && r.kind() == Expression::Kind::Constant)
        return Expression::constant(l.constant_value() * r.constant_value());
    return Expression::binary(Expression::BinaryOp::Mul, std::move(l), std::move(r));
}

Expression mk_div(Expression l, Expression r) {
    if (is_const(l, 0.0)) return Expression::constant(0.0);
    if (is_const(r, 1.0)) return l;
    return Expression::binary(Expression::BinaryOp::Div, std::move(l), std::move(r));
}

Expression mk_pow(Expression base, double exponent) {
    if (exponent == 0.0) return Expression::constant(1.0);
    if (exponent == 1.0) return base;
    return Expression::binary(Expression::BinaryOp::Pow, std::move(base),
                              Expression::constant(exponent));
}

Expression diff_rec(const Expression& e, std::vector<double>* kinks) {
    using K = Expression::Kind;
    using U = Expression::UnaryOp;
    using B = Expression::BinaryOp;
    switch (e.kind()) {
        case K::Constant: return Expression::constant(0.0);
        case K::Variable: return Expression::constant(1.0);
        case K::Unary: {
            Expression u = e.operand();
            switch (e.unary_op()) {
                case U::Neg: return mk_neg(diff_rec(u, kinks));
                case U::Abs:
                case U::Sign: {
                    auto affine = u.affine_coefficients();
                    if (!affine)
                        throw NonDifferentiableError(
                            "abs/sign over a non-affine argument has no expressible kink; "
                            "supply the derivative and kink list explicitly");
                    auto [slope, intercept] = *affine;
                    if (slope == 0.0) return Expression::constant(0.0);
                    if (kinks) kinks->push_back(-intercept / slope);
                    if (e.unary_op() == U::Sign) return Expression::constant(0.0);
                    return mk_mul(Expression::unary(U::Sign, u), diff_rec(u, kinks));
                }
                case U::Sin: return mk_mul(Expression::unary(U::Cos, u), diff_rec(u, kinks));
                case U::Cos: return mk_neg(mk_mul(Expression::unary(U::Sin, u), diff_rec(u, kinks)));
                case U::Exp: return mk_mul(Expression::unary(U::Exp, u), diff_rec(u, kinks));
                case U::Ln: return mk_div(diff_rec(u, kinks), u);
                case U::Sqrt:
                    return mk_div(diff_rec(u, kinks),
                                  mk_mul(Expression::constant(2.0), Expression::unary(U::Sqrt, u)));
            }
            break;
        }
        case K::Binary: {
            Expression l = e.lhs(), r = e.rhs();
            switch (e.binary_op()) {
                case B::Add: return mk_add(diff_rec(l, kinks), diff_rec(r, kinks));
                case B::Sub: return mk_sub(diff_rec(l, kinks), diff_rec(r, kinks));
                case B::Mul:
                    return mk_add(mk_mul(diff_rec(l, kinks), r), mk_mul(l, diff_rec(r, kinks)));
                case B::Div:
                    return mk_div(mk_sub(mk_mul(diff_rec(l, kinks), r), mk_mul(l, diff_rec(r, kinks))),
                                  mk_pow(r, 2.0));
                case B::Pow: {
                    double c = r.constant_value();
                    return mk_mul(mk_mul(Expression::constant(c), mk_pow(l, c - 1.0)),
                                  diff_rec(l, kinks));
                }
            }
            break;
        }
    }
    throw std::logic_error("corrupt expression node");
}

} // namespace

Expression differentiate(const Expression& e, std::vector<double>* kinks) {
    return diff_rec(e, kinks);
}

// ---------------------------------------------------------------------------
// Rendering. Parenthesization mirrors the grammar slots: operands of '+'/'-'
// may be terms, operands of '*'/'/' factors, and '^' takes a base on the left.

namespace {

enum class Slot { Expr, Term, Factor, Base };

// True when the node can stand in the given slot without parentheses.
bool fits(const Expression& e, Slot slot) {
    switch (e.kind()) {
        case Expression::Kind::Constant:  // negative constants render as '-' base, itself a base
        case Expression::Kind::Variable: return true;
        case Expression::Kind::Unary:
            // function calls are self-delimiting; neg is a base
            return true;
        case Expression::Kind::Binary:
            switch (e.binary_op()) {
                case Expression::BinaryOp::Add:
                case Expression::BinaryOp::Sub: return slot == Slot::Expr;
                case Expression::BinaryOp::Mul:
                case Expression::BinaryOp::Div: return slot == Slot::Expr || slot == Slot::Term;
                case Expression::BinaryOp::Pow: return slot != Slot::Base;
            }
    }
    return false;
}

std::string render_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s(buf);
    if (s == "inf" || s == "-inf" || s == "nan") throw std::invalid_argument("non-finite constant");
    return s;
}

std::string render_rec(const Expression& e, Slot slot) {
    std::string body;
    switch (e.kind()) {
        case Expression::Kind::Constant:
            body = render_number(e.constant_value());
            break;
        case Expression::Kind::Variable:
            body = "t";
            break;
        case Expression::Kind::Unary:
            if (e.unary_op() == Expression::UnaryOp::Neg)
                body = "-" + render_rec(e.operand(), Slot::Base);
            else
                body = std::string(unary_name(e.unary_op())) + "(" +
                       render_rec(e.operand(), Slot::Expr) + ")";
            break;
        case Expression::Kind::Binary: {
            const char* op = nullptr;
            Slot ls = Slot::Expr, rs = Slot::Expr;
            switch (e.binary_op()) {
                case Expression::BinaryOp::Add: op = " + "; ls = Slot::Expr; rs = Slot::Term; break;
                case Expression::BinaryOp::Sub: op = " - "; ls = Slot::Expr; rs = Slot::Term; break;
                case Expression::BinaryOp::Mul: op = "*"; ls = Slot::Term; rs = Slot::Factor; break;
                case Expression::BinaryOp::Div: op = "/"; ls = Slot::Term; rs = Slot::Factor; break;
                case Expression::BinaryOp::Pow: op = "^"; ls = Slot::Base; rs = Slot::Factor; break;
            }
            body = render_rec(e.lhs(), ls) + op + render_rec(e.rhs(), rs);
            break;
        }
    }
    if (!fits(e, slot)) return "(" + body + ")";
    return body;
}

} // namespace

std::string Expression::render() const { return render_rec(*this, Slot::Expr); }

} // namespace certquad
