#include "cxdyn/funcspace.hpp"

#include "cxdyn/error.hpp"

#include <array>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace cxdyn {

namespace {

template<class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template<class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::string_view builtin_name(Builtin fn) {
    switch (fn) {
    case Builtin::Log: return "log";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Exp: return "exp";
    case Builtin::Fact: return "fact";
    }
    return "?";
}

constexpr char op_symbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return '+';
    case BinaryOp::Sub: return '-';
    case BinaryOp::Mul: return '*';
    case BinaryOp::Div: return '/';
    case BinaryOp::Pow: return '^';
    }
    return '?';
}

std::string format_number(double value) {
    std::array<char, 512> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
    return std::string(buf.data(), res.ptr);
}

bool is_integral(double x) {
    return std::isfinite(x) && std::floor(x) == x;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        skip_space();
        if (at_end()) {
            throw SyntaxError(pos_, "empty expression");
        }
        auto e = expr();
        skip_space();
        if (!at_end()) {
            throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (at_end()) {
                throw SyntaxError(pos_, std::string("expected '") + c + "' before end of input");
            }
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
    }

    ExprPtr expr() {
        auto lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::binary(BinaryOp::Add, lhs, term());
            } else if (accept('-')) {
                lhs = Expr::binary(BinaryOp::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        auto lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::binary(BinaryOp::Mul, lhs, unary());
            } else if (accept('/')) {
                lhs = Expr::binary(BinaryOp::Div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (accept('-')) {
            return Expr::negate(unary());
        }
        return power();
    }

    ExprPtr power() {
        auto base = postfix();
        if (accept('^')) {
            return Expr::binary(BinaryOp::Pow, base, unary());
        }
        return base;
    }

    ExprPtr postfix() {
        auto e = primary();
        while (accept('!')) {
            e = Expr::call(Builtin::Fact, e);
        }
        return e;
    }

    ExprPtr primary() {
        skip_space();
        if (at_end()) {
            throw SyntaxError(pos_, "unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return identifier();
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            expect(')');
            return e;
        }
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprPtr number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (!at_end() && text_[pos_] == '.') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw SyntaxError(pos_, "expected digits after decimal point");
            }
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
        }
        double value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value,
                                   std::chars_format::fixed);
        if (res.ec == std::errc::result_out_of_range) {
            value = std::numeric_limits<double>::infinity();
        } else if (res.ec != std::errc{}) {
            throw SyntaxError(start, "malformed number");
        }
        return Expr::number(value);
    }

    ExprPtr identifier() {
        const std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "n") {
            return Expr::variable();
        }
        for (auto fn : {Builtin::Log, Builtin::Sqrt, Builtin::Exp, Builtin::Fact}) {
            if (name == builtin_name(fn)) {
                expect('(');
                auto arg = expr();
                expect(')');
                return Expr::call(fn, arg);
            }
        }
        throw UnknownIdentifier(start, std::string(name));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Direct evaluation

[[noreturn]] void domain_fail(double x, const std::string& what) {
    throw DomainError(what + " at n=" + format_number(x));
}

double factorial(double v, double x) {
    if (!is_integral(v) || v < 0) {
        domain_fail(x, "fact of a non-natural argument");
    }
    if (v > 170) {
        return std::numeric_limits<double>::infinity();
    }
    double out = 1;
    for (int i = 2; i <= static_cast<int>(v); ++i) {
        out *= i;
    }
    return out;
}

double eval_node(const Expr& e, double x) {
    const double v = std::visit(overloaded{
        [](const ast::Number& num) { return num.value; },
        [x](const ast::Variable&) { return x; },
        [x](const ast::Negate& neg) { return -eval_node(*neg.operand, x); },
        [x](const ast::Binary& bin) {
            const double a = eval_node(*bin.lhs, x);
            const double b = eval_node(*bin.rhs, x);
            switch (bin.op) {
            case BinaryOp::Add: return a + b;
            case BinaryOp::Sub: return a - b;
            case BinaryOp::Mul: return a * b;
            case BinaryOp::Div:
                if (b == 0) {
                    domain_fail(x, "division by zero");
                }
                return a / b;
            case BinaryOp::Pow:
                if (a < 0 && !is_integral(b)) {
                    domain_fail(x, "negative base with non-integer exponent");
                }
                if (a == 0 && b < 0) {
                    domain_fail(x, "zero raised to a negative power");
                }
                // Integral exponents (including negative bases such as (-1)^(n+1)) are exact in pow.
                return std::pow(a, b);
            }
            return 0.0;
        },
        [x](const ast::Call& call) {
            const double a = eval_node(*call.arg, x);
            switch (call.fn) {
            case Builtin::Log:
                if (!(a > 0)) {
                    domain_fail(x, "log of a non-positive value");
                }
                return std::log(a);
            case Builtin::Sqrt:
                if (a < 0) {
                    domain_fail(x, "sqrt of a negative value");
                }
                return std::sqrt(a);
            case Builtin::Exp: return std::exp(a);
            case Builtin::Fact: return factorial(a, x);
            }
            return 0.0;
        },
    }, e.node());
    if (std::isnan(v)) {
        domain_fail(x, "undefined value");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Log-space evaluation. A value is sign * exp(log_abs); sign 0 is exact zero.

struct SignedLog {
    int sign;
    double log_abs;

    static SignedLog of(double v) {
        if (v == 0) {
            return {0, 0};
        }
        return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
    }

    double to_double() const {
        return sign == 0 ? 0.0 : sign * std::exp(log_abs);
    }
};

SignedLog add_signed(SignedLog a, SignedLog b) {
    if (a.sign == 0) {
        return b;
    }
    if (b.sign == 0) {
        return a;
    }
    const bool a_larger = a.log_abs >= b.log_abs;
    const SignedLog& hi = a_larger ? a : b;
    const SignedLog& lo = a_larger ? b : a;
    const double gap = lo.log_abs - hi.log_abs;
    if (hi.sign == lo.sign) {
        return {hi.sign, hi.log_abs + std::log1p(std::exp(gap))};
    }
    if (gap == 0) {
        return {0, 0};
    }
    return {hi.sign, hi.log_abs + std::log1p(-std::exp(gap))};
}

// Integers rebuilt from log space carry rounding noise: exp(log 3) != 3.
double snap_integral(double v) {
    const double r = std::nearbyint(v);
    return std::fabs(v - r) <= 1e-9 * std::max(1.0, std::fabs(r)) ? r : v;
}

SignedLog log_node(const Expr& e, double x) {
    const SignedLog out = std::visit(overloaded{
        [](const ast::Number& num) { return SignedLog::of(num.value); },
        [x](const ast::Variable&) { return SignedLog{1, std::log(x)}; },
        [x](const ast::Negate& neg) {
            auto v = log_node(*neg.operand, x);
            return SignedLog{-v.sign, v.log_abs};
        },
        [x](const ast::Binary& bin) {
            const SignedLog a = log_node(*bin.lhs, x);
            SignedLog b = log_node(*bin.rhs, x);
            switch (bin.op) {
            case BinaryOp::Add: return add_signed(a, b);
            case BinaryOp::Sub:
                b.sign = -b.sign;
                return add_signed(a, b);
            case BinaryOp::Mul:
                if (a.sign == 0 || b.sign == 0) {
                    return SignedLog{0, 0};
                }
                return SignedLog{a.sign * b.sign, a.log_abs + b.log_abs};
            case BinaryOp::Div:
                if (b.sign == 0) {
                    domain_fail(x, "division by zero");
                }
                if (a.sign == 0) {
                    return SignedLog{0, 0};
                }
                return SignedLog{a.sign * b.sign, a.log_abs - b.log_abs};
            case BinaryOp::Pow: {
                const double exponent = a.sign < 0 ? snap_integral(b.to_double()) : b.to_double();
                if (a.sign == 0) {
                    if (exponent > 0) {
                        return SignedLog{0, 0};
                    }
                    domain_fail(x, "zero raised to a non-positive power");
                }
                int sign = 1;
                if (a.sign < 0) {
                    if (!is_integral(exponent)) {
                        domain_fail(x, "negative base with non-integer exponent");
                    }
                    sign = std::fmod(exponent, 2.0) == 0 ? 1 : -1;
                }
                if (exponent == 0) {
                    return SignedLog{1, 0};
                }
                return SignedLog{sign, exponent * a.log_abs};
            }
            }
            return SignedLog{0, 0};
        },
        [x](const ast::Call& call) {
            const SignedLog a = log_node(*call.arg, x);
            switch (call.fn) {
            case Builtin::Log:
                if (a.sign <= 0) {
                    domain_fail(x, "log of a non-positive value");
                }
                return SignedLog::of(a.log_abs);
            case Builtin::Sqrt:
                if (a.sign < 0) {
                    domain_fail(x, "sqrt of a negative value");
                }
                return SignedLog{a.sign, a.log_abs / 2};
            case Builtin::Exp: return SignedLog{1, a.to_double()};
            case Builtin::Fact: {
                const double v = snap_integral(a.to_double());
                if (!is_integral(v) || v < 0) {
                    domain_fail(x, "fact of a non-natural argument");
                }
                return SignedLog{1, std::lgamma(v + 1)};
            }
            }
            return SignedLog{0, 0};
        },
    }, e.node());
    if (std::isnan(out.log_abs)) {
        domain_fail(x, "undefined value");
    }
    return out;
}

} // namespace

ExprPtr Expr::number(double value) {
    return std::make_shared<const Expr>(ast::Number{value});
}

ExprPtr Expr::variable() {
    return std::make_shared<const Expr>(ast::Variable{});
}

ExprPtr Expr::negate(ExprPtr operand) {
    return std::make_shared<const Expr>(ast::Negate{std::move(operand)});
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<const Expr>(ast::Binary{op, std::move(lhs), std::move(rhs)});
}

ExprPtr Expr::call(Builtin fn, ExprPtr arg) {
    return std::make_shared<const Expr>(ast::Call{fn, std::move(arg)});
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node().index() != b.node().index()) {
        return false;
    }
    return std::visit(overloaded{
        [&](const ast::Number& x) {
            return std::bit_cast<std::uint64_t>(x.value) ==
                   std::bit_cast<std::uint64_t>(std::get<ast::Number>(b.node()).value);
        },
        [](const ast::Variable&) { return true; },
        [&](const ast::Negate& x) {
            return structurally_equal(*x.operand, *std::get<ast::Negate>(b.node()).operand);
        },
        [&](const ast::Binary& x) {
            const auto& y = std::get<ast::Binary>(b.node());
            return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                   structurally_equal(*x.rhs, *y.rhs);
        },
        [&](const ast::Call& x) {
            const auto& y = std::get<ast::Call>(b.node());
            return x.fn == y.fn && structurally_equal(*x.arg, *y.arg);
        },
    }, a.node());
}

std::string serialise(const Expr& e) {
    return std::visit(overloaded{
        [](const ast::Number& x) { return format_number(x.value); },
        [](const ast::Variable&) { return std::string("n"); },
        [](const ast::Negate& x) { return "(-" + serialise(*x.operand) + ")"; },
        [](const ast::Binary& x) {
            return "(" + serialise(*x.lhs) + " " + op_symbol(x.op) + " " + serialise(*x.rhs) + ")";
        },
        [](const ast::Call& x) {
            return std::string(builtin_name(x.fn)) + "(" + serialise(*x.arg) + ")";
        },
    }, e.node());
}

ComplexityFunction::ComplexityFunction(ExprPtr ast) : source_(serialise(*ast)), ast_(std::move(ast)) {}

ComplexityFunction parse_function(std::string_view expr) {
    return ComplexityFunction(std::string(expr), Parser(expr).parse());
}

double evaluate(const ComplexityFunction& f, long long n) {
    if (n < 1) {
        throw InvalidParameter("evaluation point must be >= 1, got " + std::to_string(n));
    }
    const double x = static_cast<double>(n);
    const double v = eval_node(f.ast(), x);
    if (!(v > 0)) {
        throw DomainError("'" + f.source() + "' is " + format_number(v) + " at n=" +
                          std::to_string(n) + ", outside (0, inf)");
    }
    return v;
}

double reciprocal(const ComplexityFunction& f, long long n) {
    const double v = evaluate(f, n);
    return std::isinf(v) ? 0.0 : 1.0 / v;
}

double log_value(const ComplexityFunction& f, double x) {
    if (!(x >= 1)) {
        throw InvalidParameter("evaluation point must be >= 1");
    }
    const SignedLog v = log_node(f.ast(), x);
    if (v.sign <= 0) {
        throw DomainError("'" + f.source() + "' is not positive at n=" + format_number(x));
    }
    return v.log_abs;
}

DominanceVerdict dominates(const ComplexityFunction& f, const ComplexityFunction& g, long long horizon) {
    if (horizon < 1) {
        throw InvalidParameter("horizon must be >= 1");
    }
    for (long long n = 1; n <= horizon; ++n) {
        if (evaluate(f, n) > evaluate(g, n)) {
            return {false, n, horizon};
        }
    }
    return {true, std::nullopt, horizon};
}

} // namespace cxdyn
