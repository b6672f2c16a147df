#include "lwsurf/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "lwsurf/errors.hpp"

namespace lwsurf {

namespace detail {

enum class NodeKind { Number, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };

enum class Function { Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt, Asinh, Abs, Pow };

struct ExprNode {
  NodeKind kind;
  double value = 0;                  // Number
  Function function = Function::Sin;  // Call
  std::vector<std::shared_ptr<const ExprNode>> args;
  bool constant = true;  // subtree does not reference u
};

}  // namespace detail

namespace {

using detail::ExprNode;
using detail::Function;
using detail::NodeKind;
using NodePtr = std::shared_ptr<const ExprNode>;

struct FunctionInfo {
  std::string_view name;
  Function function;
  int arity;
};

constexpr std::array<FunctionInfo, 10> kFunctions{{
    {"sin", Function::Sin, 1},
    {"cos", Function::Cos, 1},
    {"sinh", Function::Sinh, 1},
    {"cosh", Function::Cosh, 1},
    {"exp", Function::Exp, 1},
    {"log", Function::Log, 1},
    {"sqrt", Function::Sqrt, 1},
    {"asinh", Function::Asinh, 1},
    {"abs", Function::Abs, 1},
    {"pow", Function::Pow, 2},
}};

std::string_view function_name(Function f) {
  for (const auto& info : kFunctions)
    if (info.function == f) return info.name;
  return "?";
}

NodePtr make_number(double value) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Number;
  n->value = value;
  return n;
}

NodePtr make_node(NodeKind kind, std::vector<NodePtr> args, Function f = Function::Sin) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->function = f;
  n->constant = kind != NodeKind::Variable;
  for (const auto& a : args) n->constant = n->constant && a->constant;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    auto root = parse_sum();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ParseError(pos_, "unbalanced ')'");
      throw ParseError(pos_, "unexpected trailing input");
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (accept('+'))
        lhs = make_node(NodeKind::Add, {lhs, parse_product()});
      else if (accept('-'))
        lhs = make_node(NodeKind::Subtract, {lhs, parse_product()});
      else
        return lhs;
    }
  }

  NodePtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      if (accept('*'))
        lhs = make_node(NodeKind::Multiply, {lhs, parse_unary()});
      else if (accept('/'))
        lhs = make_node(NodeKind::Divide, {lhs, parse_unary()});
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make_node(NodeKind::Negate, {parse_unary()});
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_exponent() {
    if (accept('-')) return make_node(NodeKind::Negate, {parse_exponent()});
    if (accept('+')) return parse_exponent();
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (accept('^')) return make_node(NodeKind::Power, {base, parse_exponent()});
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "expected expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      auto inner = parse_sum();
      if (!accept(')')) {
        skip_space();
        throw ParseError(pos_, "unbalanced '(' opened at offset " + std::to_string(open));
      }
      return inner;
    }
    if (c == ')') throw ParseError(pos_, "unbalanced ')'");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0;
    const auto text = src_.substr(start, pos_ - start);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ParseError(start, "malformed number '" + std::string(text) + "'");
    return make_number(value);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const auto name = src_.substr(start, pos_ - start);
    if (name == "u") return make_node(NodeKind::Variable, {});
    if (name == "pi") return make_number(std::numbers::pi);
    const FunctionInfo* info = nullptr;
    for (const auto& f : kFunctions)
      if (f.name == name) info = &f;
    if (info == nullptr) throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
    if (!accept('(')) {
      skip_space();
      throw ParseError(pos_, "expected '(' after '" + std::string(name) + "'");
    }
    std::vector<NodePtr> args;
    args.push_back(parse_sum());
    while (accept(',')) args.push_back(parse_sum());
    if (!accept(')')) {
      skip_space();
      throw ParseError(pos_, "unbalanced '(' in call to '" + std::string(name) + "'");
    }
    if (static_cast<int>(args.size()) != info->arity)
      throw ParseError(start, std::string(name) + " expects " + std::to_string(info->arity) +
                                  " argument(s), got " + std::to_string(args.size()));
    return make_node(NodeKind::Call, std::move(args), info->function);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_node(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Number:
      if (std::signbit(n.value)) {
        out += "(" + format_real(n.value) + ")";
      } else {
        out += format_real(n.value);
      }
      return;
    case NodeKind::Variable:
      out += "u";
      return;
    case NodeKind::Negate:
      out += "(-";
      print_node(*n.args[0], out);
      out += ")";
      return;
    case NodeKind::Call:
      out += function_name(n.function);
      out += "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) out += ", ";
        print_node(*n.args[i], out);
      }
      out += ")";
      return;
    default:
      break;
  }
  const char* op = n.kind == NodeKind::Add        ? " + "
                    : n.kind == NodeKind::Subtract ? " - "
                    : n.kind == NodeKind::Multiply ? " * "
                    : n.kind == NodeKind::Divide   ? " / "
                                                   : " ^ ";
  out += "(";
  print_node(*n.args[0], out);
  out += op;
  print_node(*n.args[1], out);
  out += ")";
}

std::string print_tree(const ExprNode& n) {
  std::string s;
  print_node(n, s);
  return s;
}

[[noreturn]] void domain_failure(const ExprNode& n, const std::string& why) {
  throw DomainError(why + " in '" + print_tree(n) + "'");
}

bool is_integer(double k) { return std::isfinite(k) && std::floor(k) == k; }

/// Shared domain rules so eval() and eval_jet() reject exactly the same inputs.
void check_power_domain(const ExprNode& n, double base, double exponent, bool constant_exponent) {
  if (constant_exponent && is_integer(exponent)) {
    if (base == 0 && exponent < 0) domain_failure(n, "zero raised to a negative power");
    return;
  }
  if (!(base > 0)) domain_failure(n, "non-integer or variable exponent needs a positive base");
}

void check_call_domain(const ExprNode& n, double x) {
  switch (n.function) {
    case Function::Log:
      if (!(x > 0)) domain_failure(n, "log of non-positive value " + format_real(x));
      break;
    case Function::Sqrt:
      if (!(x >= 0)) domain_failure(n, "sqrt of negative value " + format_real(x));
      break;
    default:
      break;
  }
}

double eval_value(const ExprNode& n, double u) {
  double r = 0;
  switch (n.kind) {
    case NodeKind::Number:
      return n.value;
    case NodeKind::Variable:
      return u;
    case NodeKind::Negate:
      return -eval_value(*n.args[0], u);
    case NodeKind::Add:
      r = eval_value(*n.args[0], u) + eval_value(*n.args[1], u);
      break;
    case NodeKind::Subtract:
      r = eval_value(*n.args[0], u) - eval_value(*n.args[1], u);
      break;
    case NodeKind::Multiply:
      r = eval_value(*n.args[0], u) * eval_value(*n.args[1], u);
      break;
    case NodeKind::Divide: {
      const double a = eval_value(*n.args[0], u), b = eval_value(*n.args[1], u);
      if (b == 0) domain_failure(n, "division by zero");
      r = a / b;
      break;
    }
    case NodeKind::Power: {
      const double a = eval_value(*n.args[0], u), b = eval_value(*n.args[1], u);
      check_power_domain(n, a, b, n.args[1]->constant);
      r = std::pow(a, b);
      break;
    }
    case NodeKind::Call: {
      const double x = eval_value(*n.args[0], u);
      if (n.function == Function::Pow) {
        const double b = eval_value(*n.args[1], u);
        check_power_domain(n, x, b, n.args[1]->constant);
        r = std::pow(x, b);
        break;
      }
      check_call_domain(n, x);
      switch (n.function) {
        case Function::Sin: r = std::sin(x); break;
        case Function::Cos: r = std::cos(x); break;
        case Function::Sinh: r = std::sinh(x); break;
        case Function::Cosh: r = std::cosh(x); break;
        case Function::Exp: r = std::exp(x); break;
        case Function::Log: r = std::log(x); break;
        case Function::Sqrt: r = std::sqrt(x); break;
        case Function::Asinh: r = std::asinh(x); break;
        case Function::Abs: r = std::abs(x); break;
        case Function::Pow: break;
      }
      break;
    }
  }
  if (!std::isfinite(r)) domain_failure(n, "non-finite result");
  return r;
}

Jet2 power_jet(const ExprNode& n, const Jet2& base, const Jet2& exponent) {
  const bool constant_exponent = n.args[1]->constant;
  check_power_domain(n, base.v0, exponent.v0, constant_exponent);
  if (constant_exponent) return pow(base, exponent.v0);
  return pow(base, exponent);
}

Jet2 eval_jet_node(const ExprNode& n, double u) {
  Jet2 r;
  switch (n.kind) {
    case NodeKind::Number:
      return Jet2::constant(n.value);
    case NodeKind::Variable:
      return Jet2::variable(u);
    case NodeKind::Negate:
      return -eval_jet_node(*n.args[0], u);
    case NodeKind::Add:
      r = eval_jet_node(*n.args[0], u) + eval_jet_node(*n.args[1], u);
      break;
    case NodeKind::Subtract:
      r = eval_jet_node(*n.args[0], u) - eval_jet_node(*n.args[1], u);
      break;
    case NodeKind::Multiply:
      r = eval_jet_node(*n.args[0], u) * eval_jet_node(*n.args[1], u);
      break;
    case NodeKind::Divide: {
      const Jet2 a = eval_jet_node(*n.args[0], u), b = eval_jet_node(*n.args[1], u);
      if (b.v0 == 0) domain_failure(n, "division by zero");
      r = a / b;
      break;
    }
    case NodeKind::Power:
      r = power_jet(n, eval_jet_node(*n.args[0], u), eval_jet_node(*n.args[1], u));
      break;
    case NodeKind::Call: {
      const Jet2 x = eval_jet_node(*n.args[0], u);
      if (n.function == Function::Pow) {
        r = power_jet(n, x, eval_jet_node(*n.args[1], u));
        break;
      }
      check_call_domain(n, x.v0);
      switch (n.function) {
        case Function::Sin: r = sin(x); break;
        case Function::Cos: r = cos(x); break;
        case Function::Sinh: r = sinh(x); break;
        case Function::Cosh: r = cosh(x); break;
        case Function::Exp: r = exp(x); break;
        case Function::Log: r = log(x); break;
        case Function::Sqrt: r = sqrt(x); break;
        case Function::Asinh: r = asinh(x); break;
        case Function::Abs: r = abs(x); break;
        case Function::Pow: break;
      }
      break;
    }
  }
  if (!std::isfinite(r.v0) || !std::isfinite(r.v1) || !std::isfinite(r.v2))
    domain_failure(n, "non-finite value or derivative");
  return r;
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

Expr Expr::parse(std::string_view source) { return Expr(Parser(source).parse_all()); }

Expr Expr::constant(double value) { return Expr(make_number(value)); }

Jet2 Expr::eval_jet(double u) const { return eval_jet_node(*root_, u); }

double Expr::eval(double u) const { return eval_value(*root_, u); }

std::string Expr::print() const { return print_tree(*root_); }

bool Expr::is_constant() const { return root_->constant; }

}  // namespace lwsurf
