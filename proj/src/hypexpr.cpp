#include "parasol/hypexpr.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace parasol {

namespace {

bool valid_parameter_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  if (name == "sinh" || name == "cosh") return false;
  // "x<digits>" is reserved for coordinates
  if (name[0] == 'x' && name.size() > 1 &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    return false;
  return true;
}

}  // namespace

SymbolTable::SymbolTable(int coord_count, std::vector<std::string> parameters)
    : coord_count_(coord_count), parameters_(std::move(parameters)) {
  if (coord_count_ < 0) throw InputError("negative coordinate count");
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (!valid_parameter_name(parameters_[i]))
      throw InputError("invalid parameter name '" + parameters_[i] + "'");
    for (std::size_t j = i + 1; j < parameters_.size(); ++j)
      if (parameters_[i] == parameters_[j])
        throw InputError("duplicate parameter name '" + parameters_[i] + "'");
  }
}

std::optional<Symbol> SymbolTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < parameters_.size(); ++i)
    if (parameters_[i] == name) return Symbol::param(static_cast<int>(i));
  if (name.size() > 1 && name[0] == 'x') {
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      idx = idx * 10 + (name[i] - '0');
    }
    if (idx >= 1 && idx <= coord_count_) return Symbol::coord(idx);
  }
  return std::nullopt;
}

std::string SymbolTable::name_of(Symbol s) const {
  switch (s.kind) {
    case Symbol::Kind::Param:
      if (s.index >= 0 && s.index < static_cast<int>(parameters_.size()))
        return parameters_[s.index];
      return "<param#" + std::to_string(s.index) + ">";
    case Symbol::Kind::Coord:
      return "x" + std::to_string(s.index);
    case Symbol::Kind::Sinh:
      return "sinh(x" + std::to_string(s.index) + ")";
    case Symbol::Kind::Cosh:
      return "cosh(x" + std::to_string(s.index) + ")";
  }
  return "<?>";
}

bool SymbolTable::declared(Symbol s) const {
  if (s.kind == Symbol::Kind::Param)
    return s.index >= 0 && s.index < static_cast<int>(parameters_.size());
  return s.index >= 1 && s.index <= coord_count_;
}

Monomial Monomial::of(Symbol s, int exponent) {
  Monomial m;
  if (exponent < 0) throw InputError("negative exponent");
  if (exponent > 0) m.factors_.push_back({s, exponent});
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

int Monomial::exponent(Symbol s) const {
  for (const auto& [sym, exp] : factors_)
    if (sym == s) return exp;
  return 0;
}

HypExpr HypExpr::constant(const Rational& q) {
  HypExpr e;
  if (q != 0) e.terms_[Monomial::unit()] = q;
  return e;
}

HypExpr HypExpr::symbol(Symbol s) {
  HypExpr e;
  e.terms_[Monomial::of(s)] = 1;
  return e;
}

bool HypExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<Rational> HypExpr::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

bool HypExpr::parameters_only() const {
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [sym, exp] : mono.factors())
      if (sym.kind != Symbol::Kind::Param) return false;
  return true;
}

bool HypExpr::uses(Symbol s) const {
  for (const auto& [mono, coeff] : terms_)
    if (mono.exponent(s) > 0) return true;
  return false;
}

// Inserts coeff * m, rewriting cosh^2 x_i -> 1 + sinh^2 x_i until every
// cosh-exponent is <= 1. Recursion depth is bounded by the cosh degree.
void HypExpr::add_term(std::map<Monomial, Rational>& acc, const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  for (const auto& [sym, exp] : m.factors()) {
    if (sym.kind == Symbol::Kind::Cosh && exp >= 2) {
      // m = rest * c^exp; c^2 = 1 + s^2
      Monomial rest;
      for (const auto& f : m.factors())
        if (!(f.first == sym)) rest = rest.times(Monomial::of(f.first, f.second));
      rest = rest.times(Monomial::of(sym, exp - 2));
      add_term(acc, rest, coeff);
      add_term(acc, rest.times(Monomial::of(Symbol::sinh(sym.index), 2)), coeff);
      return;
    }
  }
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) acc.erase(it);
  }
}

HypExpr HypExpr::operator-() const {
  HypExpr out;
  for (const auto& [mono, coeff] : terms_) out.terms_[mono] = -coeff;
  return out;
}

HypExpr HypExpr::operator+(const HypExpr& rhs) const {
  HypExpr out = *this;
  out += rhs;
  return out;
}

HypExpr HypExpr::operator-(const HypExpr& rhs) const {
  HypExpr out = *this;
  out -= rhs;
  return out;
}

HypExpr& HypExpr::operator+=(const HypExpr& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(terms_, mono, coeff);
  return *this;
}

HypExpr& HypExpr::operator-=(const HypExpr& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(terms_, mono, -coeff);
  return *this;
}

HypExpr HypExpr::operator*(const HypExpr& rhs) const {
  HypExpr out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) add_term(out.terms_, ma.times(mb), ca * cb);
  return out;
}

HypExpr HypExpr::scaled(const Rational& q) const {
  HypExpr out;
  if (q == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_[mono] = coeff * q;
  return out;
}

std::optional<Symbol> HypExpr::first_undeclared(const SymbolTable& table) const {
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [sym, exp] : mono.factors())
      if (!table.declared(sym)) return sym;
  return std::nullopt;
}

HypExpr partial_derivative(const HypExpr& e, Symbol s) {
  if (s.kind != Symbol::Kind::Coord)
    throw InputError("partial derivative requires a coordinate symbol, got kind " +
                     std::to_string(static_cast<int>(s.kind)));
  return partial_derivative(e, s.index);
}

HypExpr partial_derivative(const HypExpr& e, int coord_index) {
  const Symbol x = Symbol::coord(coord_index);
  const Symbol sh = Symbol::sinh(coord_index);
  const Symbol ch = Symbol::cosh(coord_index);

  HypExpr out;
  for (const auto& [mono, coeff] : e.terms()) {
    for (const auto& [sym, exp] : mono.factors()) {
      HypExpr dsym;  // derivative of the symbol itself
      if (sym == x)
        dsym = HypExpr::constant(1);
      else if (sym == sh)
        dsym = HypExpr::symbol(ch);
      else if (sym == ch)
        dsym = HypExpr::symbol(sh);
      else
        continue;
      // coeff * exp * sym^(exp-1) * dsym * (other factors)
      Monomial rest;
      for (const auto& f : mono.factors())
        if (!(f.first == sym)) rest = rest.times(Monomial::of(f.first, f.second));
      rest = rest.times(Monomial::of(sym, exp - 1));
      HypExpr piece;
      HypExpr::add_term(piece.terms_, rest, coeff * exp);
      out += piece * dsym;
    }
  }
  return out;
}

Real evaluate_real(const HypExpr& e, const Assignment& assignment) {
  auto lookup = [&](Symbol s) -> Real {
    Symbol key = s;
    if (s.kind == Symbol::Kind::Sinh || s.kind == Symbol::Kind::Cosh)
      key = Symbol::coord(s.index);
    auto it = assignment.find(key);
    if (it == assignment.end())
      throw InputError("missing assignment for symbol index " + std::to_string(key.index) +
                       (key.kind == Symbol::Kind::Coord ? " (coordinate)" : " (parameter)"));
    Real v = Real(it->second.str());
    if (s.kind == Symbol::Kind::Sinh) return sinh(v);
    if (s.kind == Symbol::Kind::Cosh) return cosh(v);
    return v;
  };
  Real total = 0;
  for (const auto& [mono, coeff] : e.terms()) {
    Real term = Real(coeff.str());
    for (const auto& [sym, exp] : mono.factors()) {
      Real base = lookup(sym);
      for (int k = 0; k < exp; ++k) term *= base;
    }
    total += term;
  }
  return total;
}

double evaluate(const HypExpr& e, const Assignment& assignment) {
  return static_cast<double>(evaluate_real(e, assignment));
}

std::string evaluate_decimal(const HypExpr& e, const Assignment& assignment, int digits) {
  if (digits < 1 || digits > 50) throw InputError("requested precision must be in [1, 50] digits");
  std::ostringstream os;
  os << std::setprecision(digits) << evaluate_real(e, assignment);
  return os.str();
}

std::string to_string(const HypExpr& e, const SymbolTable& table) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : e.terms()) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || mono.is_unit()) {
      os << c.str();
      printed = true;
    }
    for (const auto& [sym, exp] : mono.factors()) {
      if (printed) os << "*";
      os << table.name_of(sym);
      if (exp > 1) os << "^" << exp;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace parasol
