#pragma once

// One-variable arithmetic expressions in `u`, evaluated with order-2 jets.
//
// Grammar (lowest to highest precedence):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' exponent)?       right associative
//   exponent:= ('-' | '+') exponent | power
//   primary := number | 'u' | 'pi' | name '(' args ')' | '(' sum ')'
// Functions: sin cos sinh cosh exp log sqrt asinh abs (one argument), pow (two).

#include <memory>
#include <string>
#include <string_view>

#include "lwsurf/jet.hpp"

namespace lwsurf {

namespace detail {
struct ExprNode;
}

/// Immutable expression tree. Copies share structure and are thread safe.
class Expr {
 public:
  /// Throws ParseError (with byte offset) on malformed input.
  static Expr parse(std::string_view source);

  /// Literal constant, handy for building families programmatically.
  static Expr constant(double value);

  /// (f(u), f'(u), f''(u)). Throws DomainError naming the failing sub-expression.
  Jet2 eval_jet(double u) const;

  /// f(u) only.
  double eval(double u) const;

  /// Canonical, fully parenthesised text that parses back to an equivalent tree.
  std::string print() const;

  /// True when the tree does not reference `u`.
  bool is_constant() const;

 private:
  explicit Expr(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}
  std::shared_ptr<const detail::ExprNode> root_;
};

inline Expr parse(std::string_view source) { return Expr::parse(source); }
inline Jet2 eval_jet(const Expr& e, double u) { return e.eval_jet(u); }
inline double eval(const Expr& e, double u) { return e.eval(u); }

/// `x` with 17 significant digits ("%.17g"); parses back to the same double.
std::string format_real(double x);

}  // namespace lwsurf
