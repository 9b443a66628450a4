#ifndef PARASOL_LIE_FRAME_HPP
#define PARASOL_LIE_FRAME_HPP

#include <string>
#include <vector>

#include "parasol/linalg.hpp"

namespace parasol {

/// Bracket coefficients [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based.
struct StructureConstants {
  int dim = 0;
  Tensor3<Rational> c;

  explicit StructureConstants(int d) : dim(d), c(d) {}
  Rational& at(int i, int j, int k) { return c.at(i, j, k); }
  const Rational& at(int i, int j, int k) const { return c.at(i, j, k); }
  /// Sets c(i,j,k) = v and c(j,i,k) = -v.
  void set_bracket(int i, int j, int k, const Rational& v) {
    c.at(i, j, k) = v;
    c.at(j, i, k) = -v;
  }
};

struct LieAlgebraIssue {
  std::string rule;            // "antisymmetry" or "jacobi"
  std::vector<int> indices;    // offending (i,j,k) or (i,j,k,l), 1-based
  std::string detail;
};

struct LieAlgebraReport {
  std::vector<LieAlgebraIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Exact antisymmetry + Jacobi validation; the report lists every violation.
LieAlgebraReport validate_lie_algebra(const StructureConstants& sc);

/// Frame e_i = sum_a vectors(i,a) d/dx^a on a coordinate chart; vectors is
/// dim x dim (the frame spans the tangent space).
struct ChartFrame {
  SymbolTable symbols;
  ExprMatrix vectors;

  int dim() const { return vectors.rows(); }
};

/// det of the frame matrix; identically zero means the frame is degenerate.
HypExpr frame_determinant(const ChartFrame& cf);

/// e_i(f) = sum_a E_i^a df/dx^a. Throws InputError for an out-of-range index
/// or undeclared symbols in f.
HypExpr directional_derivative(const ChartFrame& cf, int i, const HypExpr& f);

struct CommutatorResult {
  bool ok = false;
  StructureConstants constants{0};
  std::vector<std::string> issues;
};

/// Computes all [e_i, e_j], re-expresses them in the frame and returns the
/// constants. Fails when the frame is singular or any coefficient is not a
/// rational constant (the frame is then not left-invariant).
CommutatorResult frame_commutators(const ChartFrame& cf);

}  // namespace parasol

#endif
