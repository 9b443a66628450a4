#ifndef PARASOL_HYPEXPR_HPP
#define PARASOL_HYPEXPR_HPP

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parasol/rational.hpp"

namespace parasol {

/// Ring symbols. Parameters differentiate to zero; each coordinate x_i carries
/// a hyperbolic pair (sinh x_i, cosh x_i) subject to cosh^2 = 1 + sinh^2.
/// Kind order fixes the monomial order: parameters, coordinates, s, c.
struct Symbol {
  enum class Kind { Param = 0, Coord = 1, Sinh = 2, Cosh = 3 };
  Kind kind = Kind::Param;
  int index = 0;  // parameter slot (0-based) or coordinate number (1-based)

  auto operator<=>(const Symbol&) const = default;

  static Symbol param(int slot) { return {Kind::Param, slot}; }
  static Symbol coord(int i) { return {Kind::Coord, i}; }
  static Symbol sinh(int i) { return {Kind::Sinh, i}; }
  static Symbol cosh(int i) { return {Kind::Cosh, i}; }
};

/// Declares the symbols a manifest (or test) may use: coordinates x1..xm and
/// named parameters. Hyperbolic symbols exist implicitly per coordinate.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(int coord_count, std::vector<std::string> parameters);

  int coord_count() const { return coord_count_; }
  const std::vector<std::string>& parameters() const { return parameters_; }

  /// "x3" -> coordinate, declared parameter name -> parameter; nullopt otherwise.
  std::optional<Symbol> find(std::string_view name) const;
  std::string name_of(Symbol s) const;
  bool declared(Symbol s) const;

 private:
  int coord_count_ = 0;
  std::vector<std::string> parameters_;
};

/// Product of symbol powers; cosh-degree <= 1 per coordinate in normal form.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return {}; }
  static Monomial of(Symbol s, int exponent = 1);

  Monomial times(const Monomial& other) const;
  int exponent(Symbol s) const;
  bool is_unit() const { return factors_.empty(); }
  const std::vector<std::pair<Symbol, int>>& factors() const { return factors_; }

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<Symbol, int>> factors_;  // sorted by Symbol, exponents > 0
};

/// Normal-form element of the differential ring
///   Q[params][x_i, sinh x_i, cosh x_i] / (cosh^2 x_i - sinh^2 x_i - 1).
/// Two expressions are equal iff their term maps are identical; zero is the
/// empty map.
class HypExpr {
 public:
  HypExpr() = default;

  static HypExpr zero() { return {}; }
  static HypExpr constant(const Rational& q);
  static HypExpr symbol(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when the expression is a constant, nullopt otherwise.
  std::optional<Rational> as_constant() const;
  /// True when no coordinate or hyperbolic symbol occurs (parameter polynomial).
  bool parameters_only() const;
  bool uses(Symbol s) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  HypExpr operator-() const;
  HypExpr operator+(const HypExpr& rhs) const;
  HypExpr operator-(const HypExpr& rhs) const;
  HypExpr operator*(const HypExpr& rhs) const;
  HypExpr& operator+=(const HypExpr& rhs);
  HypExpr& operator-=(const HypExpr& rhs);
  HypExpr scaled(const Rational& q) const;

  bool operator==(const HypExpr&) const = default;

  /// Every symbol declared in `table`? Returns the first offender otherwise.
  std::optional<Symbol> first_undeclared(const SymbolTable& table) const;

 private:
  friend HypExpr partial_derivative(const HypExpr&, int);
  static void add_term(std::map<Monomial, Rational>& acc, const Monomial& m, const Rational& coeff);

  std::map<Monomial, Rational> terms_;
};

inline HypExpr operator*(const Rational& q, const HypExpr& e) { return e.scaled(q); }

/// d/dx_i in the ring: coordinates are the only differentiable symbols
/// (ds_i = c_i dx_i, dc_i = s_i dx_i, parameters are constants).
/// Throws InputError unless `s` is a coordinate symbol.
HypExpr partial_derivative(const HypExpr& e, Symbol s);
HypExpr partial_derivative(const HypExpr& e, int coord_index);

/// Debug-only numeric evaluation (never used in verification verdicts).
using Real = boost::multiprecision::cpp_dec_float_50;
using Assignment = std::map<Symbol, Rational>;  // keys: Coord and Param symbols

Real evaluate_real(const HypExpr& e, const Assignment& assignment);
double evaluate(const HypExpr& e, const Assignment& assignment);
std::string evaluate_decimal(const HypExpr& e, const Assignment& assignment, int digits);

std::string to_string(const HypExpr& e, const SymbolTable& table);

}  // namespace parasol

#endif
