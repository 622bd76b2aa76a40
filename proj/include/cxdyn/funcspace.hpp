#ifndef CXDYN_FUNCSPACE_HPP
#define CXDYN_FUNCSPACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

/**
 * @file funcspace.hpp
 *
 * Running-time profiles f: N -> (0, inf) as parsed expressions over the variable `n`.
 *
 * Grammar, highest precedence first: postfix `!`, right-associative `^`, unary minus,
 * `*` and `/`, `+` and `-`. Named functions are `log` (natural), `sqrt`, `exp`, `fact`.
 */

namespace cxdyn {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Builtin { Log, Sqrt, Exp, Fact };

namespace ast {

struct Number {
    double value;
};

struct Variable {};

struct Negate {
    ExprPtr operand;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Call {
    Builtin fn;
    ExprPtr arg;
};

} // namespace ast

/// Immutable expression tree node.
class Expr {
public:
    using Node = std::variant<ast::Number, ast::Variable, ast::Negate, ast::Binary, ast::Call>;

    explicit Expr(Node node) : node_(std::move(node)) {}

    const Node& node() const { return node_; }

    static ExprPtr number(double value);
    static ExprPtr variable();
    static ExprPtr negate(ExprPtr operand);
    static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr call(Builtin fn, ExprPtr arg);

private:
    Node node_;
};

/// Structural equality: same node kinds, same operators, bit-identical literals.
bool structurally_equal(const Expr& a, const Expr& b);

/// Canonical, fully parenthesised text that parses back to a structurally equal tree.
std::string serialise(const Expr& e);

/**
 * A member of the complexity space: the source text and its parsed tree.
 * Functions derived by the library (scalings, translations) carry their
 * serialised tree as `source`.
 */
class ComplexityFunction {
public:
    ComplexityFunction(std::string source, ExprPtr ast)
        : source_(std::move(source)), ast_(std::move(ast)) {}

    /// Wraps a tree, using its canonical serialisation as the source text.
    explicit ComplexityFunction(ExprPtr ast);

    const std::string& source() const { return source_; }
    const Expr& ast() const { return *ast_; }
    const ExprPtr& ast_ptr() const { return ast_; }

private:
    std::string source_;
    ExprPtr ast_;
};

/// Throws SyntaxError or UnknownIdentifier.
ComplexityFunction parse_function(std::string_view expr);

/**
 * Value at n >= 1. Intermediate values may be negative; the final value must be
 * strictly positive. Overflow saturates to +infinity, which callers only ever
 * consume through `reciprocal`. Throws DomainError otherwise.
 */
double evaluate(const ComplexityFunction& f, long long n);

/// 1 / f(n); exactly 0 when f(n) saturated.
double reciprocal(const ComplexityFunction& f, long long n);

/**
 * Natural logarithm of f at a real point x >= 1, computed without ever forming
 * f(x) itself, so profiles like 2^n stay finite at x = 2^200.
 * Throws DomainError when f(x) <= 0 or is undefined.
 */
double log_value(const ComplexityFunction& f, double x);

struct DominanceVerdict {
    bool dominates_over_horizon;
    std::optional<long long> first_violation;
    long long horizon;
};

/// Checks f(n) <= g(n) for n = 1..horizon with no tolerance; ties count as dominance.
DominanceVerdict dominates(const ComplexityFunction& f, const ComplexityFunction& g, long long horizon);

} // namespace cxdyn

#endif
