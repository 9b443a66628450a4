#include "parasol/lie_frame.hpp"

#include <sstream>

namespace parasol {

LieAlgebraReport validate_lie_algebra(const StructureConstants& sc) {
  LieAlgebraReport report;
  const int n = sc.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (sc.at(i, j, k) + sc.at(j, i, k) != 0) {
          std::ostringstream os;
          os << "c(" << i + 1 << "," << j + 1 << ")^" << k + 1 << " = " << sc.at(i, j, k).str()
             << " but c(" << j + 1 << "," << i + 1 << ")^" << k + 1 << " = "
             << sc.at(j, i, k).str();
          report.issues.push_back({"antisymmetry", {i + 1, j + 1, k + 1}, os.str()});
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int m = 0; m < n; ++m)
            acc += sc.at(i, j, m) * sc.at(m, k, l) + sc.at(j, k, m) * sc.at(m, i, l) +
                   sc.at(k, i, m) * sc.at(m, j, l);
          if (acc != 0) {
            std::ostringstream os;
            os << "jacobiator component " << acc.str();
            report.issues.push_back({"jacobi", {i + 1, j + 1, k + 1, l + 1}, os.str()});
          }
        }
  return report;
}

HypExpr frame_determinant(const ChartFrame& cf) { return det(cf.vectors); }

HypExpr directional_derivative(const ChartFrame& cf, int i, const HypExpr& f) {
  const int n = cf.dim();
  if (i < 0 || i >= n)
    throw InputError("frame index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(n));
  if (auto bad = f.first_undeclared(cf.symbols))
    throw InputError("undeclared symbol '" + cf.symbols.name_of(*bad) + "'");
  HypExpr out;
  for (int a = 0; a < n; ++a) out += cf.vectors.at(i, a) * partial_derivative(f, a + 1);
  return out;
}

namespace {

// Leading (smallest-monomial) coefficient in the fixed term order.
Rational leading_coefficient(const HypExpr& e) { return e.terms().begin()->second; }

}  // namespace

CommutatorResult frame_commutators(const ChartFrame& cf) {
  CommutatorResult result;
  const int n = cf.dim();
  result.constants = StructureConstants(n);

  HypExpr d = frame_determinant(cf);
  if (d.is_zero()) {
    result.issues.push_back("frame matrix is singular (determinant is identically zero)");
    return result;
  }

  // Cramer columns on M alpha = b with M(a,k) = E_k^a. A coefficient alpha_k
  // is admissible only when det_k is a rational multiple of det (the bracket
  // must be a constant combination of the frame).
  const Rational lead_d = leading_coefficient(d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<HypExpr> bracket(n);
      for (int a = 0; a < n; ++a)
        bracket[a] = directional_derivative(cf, i, cf.vectors.at(j, a)) -
                     directional_derivative(cf, j, cf.vectors.at(i, a));
      for (int k = 0; k < n; ++k) {
        ExprMatrix replaced(n, n);
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            replaced.at(a, c) = (c == k) ? bracket[a] : cf.vectors.at(c, a);
        HypExpr dk = det(replaced);
        Rational coeff = 0;
        if (!dk.is_zero()) {
          Rational candidate = leading_coefficient(dk) / lead_d;
          if (!(dk - d.scaled(candidate)).is_zero()) {
            std::ostringstream os;
            os << "commutator [e" << i + 1 << ",e" << j + 1 << "] has a non-constant coefficient"
               << " on e" << k + 1 << " (frame is not left-invariant)";
            result.issues.push_back(os.str());
            continue;
          }
          coeff = candidate;
        }
        result.constants.set_bracket(i, j, k, coeff);
      }
    }
  result.ok = result.issues.empty();
  return result;
}

}  // namespace parasol
