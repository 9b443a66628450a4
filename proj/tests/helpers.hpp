#ifndef PARASOL_TESTS_HELPERS_HPP
#define PARASOL_TESTS_HELPERS_HPP

#include "parasol/analyze.hpp"
#include "parasol/golden.hpp"
#include "parasol/parse.hpp"
#include "parasol/rng.hpp"

namespace parasol::testing {

inline RatMatrix identity3() { return RatMatrix::identity(3); }

/// phi swapping e1 <-> e2, killing e3.
inline RatMatrix phi_swap() {
  RatMatrix phi(3, 3);
  phi.at(0, 1) = 1;
  phi.at(1, 0) = 1;
  return phi;
}

inline PiStructure golden_structure() {
  return PiStructure{3, identity3(), phi_swap(), {0, 0, 1}, {0, 0, 1}};
}

/// [e3,e1] = -t e2, [e3,e2] = -t e1, [e1,e2] = 0; t = 1 is the reference
/// instance.
inline StructureConstants scaled_family(const Rational& t) {
  StructureConstants sc(3);
  sc.set_bracket(2, 0, 1, -t);
  sc.set_bracket(2, 1, 0, -t);
  return sc;
}

inline StructureConstants golden_constants() { return scaled_family(1); }

inline StructureConstants abelian_constants() { return StructureConstants(3); }

/// [e1,e2] = e3.
inline StructureConstants heisenberg_constants() {
  StructureConstants sc(3);
  sc.set_bracket(0, 1, 2, 1);
  return sc;
}

/// Chart frame of the reference instance:
///   e1 = cosh(x3) d1 - sinh(x3) d2, e2 = -sinh(x3) d1 + cosh(x3) d2, e3 = d3.
inline ChartFrame golden_chart() {
  SymbolTable table(3, {"c1", "c2", "c3"});
  ExprMatrix e(3, 3);
  const char* rows[3][3] = {{"cosh(x3)", "-sinh(x3)", "0"},
                            {"-sinh(x3)", "cosh(x3)", "0"},
                            {"0", "0", "1"}};
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) e.at(i, a) = parse_hypexpr(rows[i][a], table);
  return ChartFrame{table, e};
}

/// Potential of the reference instance, parsed over the chart symbols.
inline VectorField golden_potential(const SymbolTable& table) {
  VectorField v;
  v.coeffs.push_back(parse_hypexpr(
      "-(c1*cosh(x3) - c2*sinh(x3))*x1 + (c2*cosh(x3) - c1*sinh(x3))*x2 + sinh(x3)", table));
  v.coeffs.push_back(parse_hypexpr(
      "(c2*cosh(x3) - c1*sinh(x3))*x1 - (c1*cosh(x3) - c2*sinh(x3))*x2 + cosh(x3)", table));
  v.coeffs.push_back(parse_hypexpr("c3", table));
  return v;
}

/// Independent Koszul-formula oracle: solves g(nabla_i e_j, .) = K row by row
/// with Cramer instead of the inverse-metric contraction used by the engine.
inline Tensor3<Rational> oracle_koszul(const StructureConstants& sc, const RatMatrix& g) {
  const int n = sc.dim;
  auto low = [&](int i, int j, int k) {
    Rational acc = 0;
    for (int m = 0; m < n; ++m) acc += sc.at(i, j, m) * g.at(m, k);
    return acc;
  };
  Rational dg = det(g);
  Tensor3<Rational> gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> rhs(n);
      for (int k = 0; k < n; ++k)
        rhs[k] = (low(i, j, k) - low(j, k, i) + low(k, i, j)) / 2;
      for (int l = 0; l < n; ++l) {
        RatMatrix cramer = g;
        for (int k = 0; k < n; ++k) cramer.at(k, l) = rhs[k];
        gamma.at(i, j, l) = det(cramer) / dg;
      }
    }
  return gamma;
}

/// Independent curvature oracle: evaluates nabla_x nabla_y z - nabla_y nabla_x z
/// - nabla_[x,y] z on basis vectors represented as explicit coefficient vectors.
inline Tensor4<Rational> oracle_riemann(const Tensor3<Rational>& gamma,
                                        const StructureConstants& sc, const RatMatrix& g) {
  const int n = sc.dim;
  auto nabla = [&](int i, const std::vector<Rational>& z) {
    std::vector<Rational> out(n, 0);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out[k] += z[j] * gamma.at(i, j, k);
    return out;
  };
  Tensor4<Rational> low(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> ek(n, 0);
        ek[k] = 1;
        auto first = nabla(i, nabla(j, ek));
        auto second = nabla(j, nabla(i, ek));
        std::vector<Rational> third(n, 0);
        for (int m = 0; m < n; ++m) {
          if (sc.at(i, j, m) == 0) continue;
          auto piece = nabla(m, ek);
          for (int l = 0; l < n; ++l) third[l] += sc.at(i, j, m) * piece[l];
        }
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int m = 0; m < n; ++m)
            acc += (first[m] - second[m] - third[m]) * g.at(m, l);
          low.at(i, j, k, l) = acc;
        }
      }
  return low;
}

struct AnalyzedInstance {
  PiStructure ps;
  RatMatrix g_assoc;
  Connection conn{3};
  CurvatureData cd;
};

inline AnalyzedInstance analyze_constants(const StructureConstants& sc, const PiStructure& ps) {
  AnalyzedInstance out{ps, ps.associated_metric_matrix(), levi_civita(sc, ps.g), {}};
  out.cd = ricci_and_scalars(riemann(out.conn, sc, ps.g), ps.g, out.g_assoc, ps.phi);
  return out;
}

}  // namespace parasol::testing

#endif
