#ifndef PARASOL_PARSE_HPP
#define PARASOL_PARSE_HPP

#include <memory>
#include <string>
#include <vector>

#include "parasol/hypexpr.hpp"

namespace parasol {

struct ParseError : InputError {
  using InputError::InputError;
};

/// Raw expression tree as produced by the grammar (or built programmatically):
/// constants, symbols, negation, sums, products, and division by constants.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Op { Constant, Leaf, Neg, Add, Sub, Mul, Div };

  Op op = Op::Constant;
  Rational value;       // Op::Constant
  Symbol symbol;        // Op::Leaf
  std::vector<ExprPtr> children;

  static ExprPtr constant(Rational q);
  static ExprPtr leaf(Symbol s);
  static ExprPtr unary(Op op, ExprPtr a);
  static ExprPtr binary(Op op, ExprPtr a, ExprPtr b);
};

/// Grammar: integers, rationals p/q, symbols x1..xm and declared parameters,
/// sinh(xi), cosh(xi), operators + - * /, parentheses. Division is accepted
/// only where the divisor folds to a nonzero rational constant.
ExprPtr parse_expression(const std::string& text, const SymbolTable& table);

/// Folds a raw tree into its unique ring normal form. Idempotent in the sense
/// that re-normalizing a tree rebuilt from the result is the identity.
/// Throws InputError naming the symbol when the tree uses an undeclared one.
HypExpr normalize(const ExprPtr& tree, const SymbolTable& table);

/// parse + normalize in one step.
HypExpr parse_hypexpr(const std::string& text, const SymbolTable& table);

/// Expands a normal form back into a raw tree (sum of monomial products).
ExprPtr to_tree(const HypExpr& e);

}  // namespace parasol

#endif
