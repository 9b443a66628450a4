#include "parasol/parse.hpp"

#include <cctype>

namespace parasol {

ExprPtr ExprNode::constant(Rational q) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Constant;
  n->value = std::move(q);
  return n;
}

ExprPtr ExprNode::leaf(Symbol s) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Leaf;
  n->symbol = s;
  return n;
}

ExprPtr ExprNode::unary(Op op, ExprPtr a) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->children = {std::move(a)};
  return n;
}

ExprPtr ExprNode::binary(Op op, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->children = {std::move(a), std::move(b)};
  return n;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const SymbolTable& table) : text_(text), table_(table) {}

  ExprPtr run() {
    ExprPtr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + " in '" + text_ +
                     "': " + message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr sum() {
    ExprPtr acc = product();
    for (;;) {
      if (consume('+'))
        acc = ExprNode::binary(ExprNode::Op::Add, acc, product());
      else if (consume('-'))
        acc = ExprNode::binary(ExprNode::Op::Sub, acc, product());
      else
        return acc;
    }
  }

  ExprPtr product() {
    ExprPtr acc = factor();
    for (;;) {
      if (consume('*'))
        acc = ExprNode::binary(ExprNode::Op::Mul, acc, factor());
      else if (consume('/'))
        acc = ExprNode::binary(ExprNode::Op::Div, acc, factor());
      else
        return acc;
    }
  }

  ExprPtr factor() {
    skip_ws();
    if (consume('-')) return ExprNode::unary(ExprNode::Op::Neg, factor());
    if (consume('+')) return factor();
    if (consume('(')) {
      ExprPtr inner = sum();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return identifier();
    fail("expected a number, symbol, or '('");
  }

  ExprPtr number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    // p/q is handled by the Div node so that "1/2*x1" parses as (1/2)*x1.
    return ExprNode::constant(Rational(Int(text_.substr(start, pos_ - start))));
  }

  ExprPtr identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (name == "sinh" || name == "cosh") {
      if (!consume('(')) fail("expected '(' after " + name);
      skip_ws();
      std::size_t astart = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string arg = text_.substr(astart, pos_ - astart);
      if (!consume(')')) fail("expected ')' after " + name + " argument");
      auto sym = table_.find(arg);
      if (!sym || sym->kind != Symbol::Kind::Coord)
        fail(name + " argument must be a declared coordinate, got '" + arg + "'");
      return ExprNode::leaf(name == "sinh" ? Symbol::sinh(sym->index) : Symbol::cosh(sym->index));
    }
    auto sym = table_.find(name);
    if (!sym) fail("undeclared symbol '" + name + "'");
    return ExprNode::leaf(*sym);
  }

  const std::string& text_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text, const SymbolTable& table) {
  return Parser(text, table).run();
}

HypExpr normalize(const ExprPtr& tree, const SymbolTable& table) {
  if (!tree) throw InputError("null expression tree");
  switch (tree->op) {
    case ExprNode::Op::Constant:
      return HypExpr::constant(tree->value);
    case ExprNode::Op::Leaf:
      if (!table.declared(tree->symbol))
        throw InputError("undeclared symbol '" + table.name_of(tree->symbol) + "'");
      return HypExpr::symbol(tree->symbol);
    case ExprNode::Op::Neg:
      return -normalize(tree->children.at(0), table);
    case ExprNode::Op::Add:
      return normalize(tree->children.at(0), table) + normalize(tree->children.at(1), table);
    case ExprNode::Op::Sub:
      return normalize(tree->children.at(0), table) - normalize(tree->children.at(1), table);
    case ExprNode::Op::Mul:
      return normalize(tree->children.at(0), table) * normalize(tree->children.at(1), table);
    case ExprNode::Op::Div: {
      HypExpr den = normalize(tree->children.at(1), table);
      auto q = den.as_constant();
      if (!q) throw InputError("division by a non-constant expression");
      if (*q == 0) throw InputError("division by zero");
      return normalize(tree->children.at(0), table).scaled(Rational(denominator(*q), numerator(*q)));
    }
  }
  throw InputError("corrupt expression tree");
}

HypExpr parse_hypexpr(const std::string& text, const SymbolTable& table) {
  return normalize(parse_expression(text, table), table);
}

ExprPtr to_tree(const HypExpr& e) {
  ExprPtr acc;
  for (const auto& [mono, coeff] : e.terms()) {
    ExprPtr term = ExprNode::constant(coeff);
    for (const auto& [sym, exp] : mono.factors())
      for (int k = 0; k < exp; ++k)
        term = ExprNode::binary(ExprNode::Op::Mul, term, ExprNode::leaf(sym));
    acc = acc ? ExprNode::binary(ExprNode::Op::Add, acc, term) : term;
  }
  return acc ? acc : ExprNode::constant(Rational(0));
}

}  // namespace parasol
