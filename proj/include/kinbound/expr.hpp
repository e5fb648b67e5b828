#ifndef KINBOUND_EXPR_HPP
#define KINBOUND_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace kinbound::expr {

enum class Kind { constant, variable, add, sub, mul, div, pow, exp, ln, sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Immutable tree node. `value` is meaningful for constants only; unary
// functions use child `a`; binary operators use `a` and `b`.
struct Node {
  Kind kind;
  double value = 0.0;
  NodePtr a;
  NodePtr b;
};

// One-variable symbolic expression. Named constants are folded into the
// tree at parse time, so evaluation needs only the variable's value.
class Expr {
 public:
  // Grammar: + - * / ^ (right-associative, binds tightest), unary minus,
  // parentheses, exp/ln/sqrt, decimal and scientific literals.
  // Throws SyntaxError with the offending byte position.
  static Expr parse(std::string_view source, std::string_view variable,
                    const std::map<std::string, double>& constants = {});

  // Evaluate at x. Signals DomainError on ln/sqrt/pow domain violations,
  // division by zero, and non-finite intermediates; never yields NaN.
  double operator()(double x) const;

  // Exact symbolic derivative with respect to the variable.
  Expr derivative() const;

  // Parseable rendering; parse(str()) evaluates identically.
  std::string str() const;

  const Node& root() const { return *root_; }
  const std::string& variable() const { return var_; }

 private:
  Expr(NodePtr root, std::string var) : root_(std::move(root)), var_(std::move(var)) {}
  NodePtr root_;
  std::string var_;
};

}  // namespace kinbound::expr

#endif
