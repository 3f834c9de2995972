#pragma once

#include <memory>
#include <string>

#include "acg/errors.hpp"
#include "acg/jet.hpp"

namespace acg {

enum class UnaryFunc { Exp, Sin, Cos, Re, Im, Conj, Abs2 };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// AST node of the expression language. Coordinate convention, fixed for
/// the whole library: z_k = x_{2k-1} + I x_{2k}, zbar_k its conjugate.
struct ExprNode {
  enum class Kind {
    Number,    // decimal literal
    ImagUnit,  // I
    Coord,     // x_k, 1-based
    Z,         // z_k
    Zbar,      // zbar_k
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,   // a^exponent, integer exponent
    Call,  // func(a)
  };

  Kind kind;
  double number = 0.0;
  int index = 0;     // Coord/Z/Zbar
  int exponent = 0;  // Pow
  UnaryFunc func = UnaryFunc::Exp;
  ExprPtr a, b;
  std::size_t offset = 0;  // byte offset in the source, for diagnostics
};

/// Parsed expression bound to an ambient dimension 2n. Immutable; safe to
/// share across threads.
struct Expr {
  ExprPtr root;
  int dim = 0;  // 2n
};

/// Parse expression text against ambient dimension 2n (even, >= 2).
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' integer)? | '-' factor
///   atom   := number | 'I' | ident | func '(' expr ')' | '(' expr ')'
///   ident  := 'x'digits | 'z'digits | 'zbar'digits
///   func   := exp|sin|cos|re|im|conj|abs2
/// Throws ParseError with byte offset and expected-token set.
Expr parse(const std::string& source, int ambient_dim);

/// Minimal-parentheses pretty printer; print . parse is the identity on
/// printed output (the regression suite pins this).
std::string to_string(const Expr& e);
std::string to_string(const ExprPtr& node);

/// Evaluate value + gradient + Hessian at a point of R^{2n}.
/// Throws EvalError (division by zero, 0^negative) naming the offending
/// subexpression.
Jet eval_jet(const Expr& e, const Eigen::VectorXd& p);

}  // namespace acg
