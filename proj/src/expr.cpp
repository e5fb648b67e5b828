#include "kinbound/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kinbound/errors.hpp"

namespace kinbound::expr {

namespace {

NodePtr node(Kind k, double v, NodePtr a = nullptr, NodePtr b = nullptr) {
  return std::make_shared<Node>(Node{k, v, std::move(a), std::move(b)});
}

NodePtr make_const(double v) { return node(Kind::constant, v); }

bool is_const(const NodePtr& n, double v) {
  return n->kind == Kind::constant && n->value == v;
}

double eval_node(const Node& n, double x);

// Folding constructors: collapse constant subtrees and drop arithmetic
// identities so derivative trees stay small.
NodePtr make_add(NodePtr a, NodePtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_const(a->value + b->value);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return node(Kind::add, 0, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_const(a->value - b->value);
  if (is_const(b, 0.0)) return a;
  return node(Kind::sub, 0, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
  if (a->kind == Kind::constant && b->kind == Kind::constant)
    return make_const(a->value * b->value);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return node(Kind::mul, 0, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
  if (is_const(a, 0.0) && !is_const(b, 0.0)) return make_const(0.0);
  if (is_const(b, 1.0)) return a;
  if (a->kind == Kind::constant && b->kind == Kind::constant && b->value != 0.0)
    return make_const(a->value / b->value);
  return node(Kind::div, 0, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, NodePtr b) {
  if (is_const(b, 1.0)) return a;
  if (is_const(b, 0.0)) return make_const(1.0);
  if (a->kind == Kind::constant && b->kind == Kind::constant) {
    const Node tmp{Kind::pow, 0, a, b};
    return make_const(eval_node(tmp, 0.0));
  }
  return node(Kind::pow, 0, std::move(a), std::move(b));
}

NodePtr make_fn(Kind k, NodePtr a) {
  if (a->kind == Kind::constant) {
    const Node tmp{k, 0, a, nullptr};
    return make_const(eval_node(tmp, 0.0));
  }
  return node(k, 0, std::move(a));
}

NodePtr make_neg(NodePtr a) { return make_sub(make_const(0.0), std::move(a)); }

double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite result in ") + what);
  return v;
}

double eval_node(const Node& n, double x) {
  switch (n.kind) {
    case Kind::constant:
      return n.value;
    case Kind::variable:
      return x;
    case Kind::add:
      return finite(eval_node(*n.a, x) + eval_node(*n.b, x), "addition");
    case Kind::sub:
      return finite(eval_node(*n.a, x) - eval_node(*n.b, x), "subtraction");
    case Kind::mul:
      return finite(eval_node(*n.a, x) * eval_node(*n.b, x), "multiplication");
    case Kind::div: {
      const double den = eval_node(*n.b, x);
      if (den == 0.0) throw DomainError("division by zero");
      return finite(eval_node(*n.a, x) / den, "division");
    }
    case Kind::pow: {
      const double base = eval_node(*n.a, x);
      const double e = eval_node(*n.b, x);
      if (base == 0.0) {
        if (e > 0.0) return 0.0;
        if (e == 0.0) return 1.0;
        throw DomainError("zero raised to a negative power");
      }
      if (base < 0.0 && e != std::rint(e))
        throw DomainError("negative base raised to a non-integer power");
      return finite(std::pow(base, e), "pow");
    }
    case Kind::exp:
      return finite(std::exp(eval_node(*n.a, x)), "exp");
    case Kind::ln: {
      const double v = eval_node(*n.a, x);
      if (v <= 0.0) throw DomainError("ln of a non-positive number");
      return std::log(v);
    }
    case Kind::sqrt: {
      const double v = eval_node(*n.a, x);
      if (v < 0.0) throw DomainError("sqrt of a negative number");
      return std::sqrt(v);
    }
  }
  throw Error("corrupt expression node");
}

NodePtr diff_node(const NodePtr& n) {
  switch (n->kind) {
    case Kind::constant:
      return make_const(0.0);
    case Kind::variable:
      return make_const(1.0);
    case Kind::add:
      return make_add(diff_node(n->a), diff_node(n->b));
    case Kind::sub:
      return make_sub(diff_node(n->a), diff_node(n->b));
    case Kind::mul:
      return make_add(make_mul(diff_node(n->a), n->b), make_mul(n->a, diff_node(n->b)));
    case Kind::div:
      // (u/v)' = (u'v - uv')/v^2
      return make_div(
          make_sub(make_mul(diff_node(n->a), n->b), make_mul(n->a, diff_node(n->b))),
          make_mul(n->b, n->b));
    case Kind::pow: {
      if (n->b->kind == Kind::constant) {
        // (u^c)' = c u^(c-1) u'
        const double c = n->b->value;
        return make_mul(make_mul(make_const(c), make_pow(n->a, make_const(c - 1.0))),
                        diff_node(n->a));
      }
      // General case via u^v = exp(v ln u):
      // (u^v)' = u^v (v' ln u + v u'/u)
      return make_mul(node(Kind::pow, 0, n->a, n->b),
                      make_add(make_mul(diff_node(n->b), make_fn(Kind::ln, n->a)),
                               make_div(make_mul(n->b, diff_node(n->a)), n->a)));
    }
    case Kind::exp:
      return make_mul(node(Kind::exp, 0, n->a), diff_node(n->a));
    case Kind::ln:
      return make_div(diff_node(n->a), n->a);
    case Kind::sqrt:
      // (sqrt u)' = u' / (2 sqrt u)
      return make_div(diff_node(n->a),
                      make_mul(make_const(2.0), node(Kind::sqrt, 0, n->a)));
  }
  throw Error("corrupt expression node");
}

// Operator precedence for printing; higher binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::add:
    case Kind::sub:
      return 1;
    case Kind::mul:
    case Kind::div:
      return 2;
    case Kind::pow:
      return 3;
    default:
      return 4;
  }
}

void print_node(const Node& n, const std::string& var, std::ostringstream& out) {
  const auto child = [&](const Node& c, bool parens) {
    if (parens) out << '(';
    print_node(c, var, out);
    if (parens) out << ')';
  };
  switch (n.kind) {
    case Kind::constant: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      if (n.value < 0)
        out << '(' << buf << ')';
      else
        out << buf;
      return;
    }
    case Kind::variable:
      out << var;
      return;
    case Kind::add:
    case Kind::sub: {
      child(*n.a, precedence(n.a->kind) < 1);
      out << (n.kind == Kind::add ? "+" : "-");
      // Right child needs parens at equal precedence: a-(b-c) != a-b-c.
      child(*n.b, precedence(n.b->kind) <= 1);
      return;
    }
    case Kind::mul:
    case Kind::div: {
      child(*n.a, precedence(n.a->kind) < 2);
      out << (n.kind == Kind::mul ? "*" : "/");
      child(*n.b, precedence(n.b->kind) <= 2);
      return;
    }
    case Kind::pow: {
      child(*n.a, precedence(n.a->kind) <= 3);
      out << '^';
      child(*n.b, precedence(n.b->kind) < 3);
      return;
    }
    case Kind::exp:
      out << "exp(";
      print_node(*n.a, var, out);
      out << ')';
      return;
    case Kind::ln:
      out << "ln(";
      print_node(*n.a, var, out);
      out << ')';
      return;
    case Kind::sqrt:
      out << "sqrt(";
      print_node(*n.a, var, out);
      out << ')';
      return;
  }
}

class Parser {
 public:
  Parser(std::string_view src, std::string_view var,
         const std::map<std::string, double>& constants)
      : src_(src), var_(var), constants_(constants) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    NodePtr e = parse_product();
    for (;;) {
      if (eat('+'))
        e = make_add(e, parse_product());
      else if (eat('-'))
        e = make_sub(e, parse_product());
      else
        return e;
    }
  }

  NodePtr parse_product() {
    NodePtr e = parse_unary();
    for (;;) {
      if (eat('*'))
        e = make_mul(e, parse_unary());
      else if (eat('/'))
        e = make_div(e, parse_unary());
      else
        return e;
    }
  }

  // '^' binds tighter than unary minus: -x^2 parses as -(x^2).
  NodePtr parse_unary() {
    if (eat('-')) return make_neg(parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (eat('^')) return make_pow(base, parse_unary());  // right-associative
    return base;
  }

  NodePtr parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    skip_ws();
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    double v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("invalid number");
    pos_ = static_cast<std::size_t>(p - src_.data());
    return make_const(v);
  }

  NodePtr parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "exp" || name == "ln" || name == "sqrt") {
      if (!eat('(')) fail("expected '(' after function name");
      NodePtr arg = parse_sum();
      if (!eat(')')) fail("expected ')'");
      const Kind k = name == "exp" ? Kind::exp : name == "ln" ? Kind::ln : Kind::sqrt;
      return make_fn(k, std::move(arg));
    }
    if (name == var_) return node(Kind::variable, 0);
    if (auto it = constants_.find(name); it != constants_.end())
      return make_const(it->second);
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view src_;
  std::string var_;
  const std::map<std::string, double>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view source, std::string_view variable,
                 const std::map<std::string, double>& constants) {
  Parser p(source, variable, constants);
  return Expr(p.run(), std::string(variable));
}

double Expr::operator()(double x) const { return eval_node(*root_, x); }

Expr Expr::derivative() const { return Expr(diff_node(root_), var_); }

std::string Expr::str() const {
  std::ostringstream out;
  print_node(*root_, var_, out);
  return out.str();
}

}  // namespace kinbound::expr
