#ifndef PARASOL_SOLITON_HPP
#define PARASOL_SOLITON_HPP

#include <cstdint>

#include "parasol/classification.hpp"

namespace parasol {

/// Potential vector field v = sum_i coeffs[i] e_i. Coefficients may involve
/// coordinates and hyperbolic symbols, in which case a chart frame is needed
/// to differentiate them.
struct VectorField {
  std::vector<HypExpr> coeffs;

  static VectorField constants(const std::vector<Rational>& values);
  /// The collinear potential k * xi (xi assumed to be the frame expression of
  /// the Reeb field); k may be any ring element.
  static VectorField collinear(const HypExpr& k, const std::vector<Rational>& xi);

  bool is_constant() const;
  int dim() const { return static_cast<int>(coeffs.size()); }
};

/// (nabla_{e_i} v)^k = e_i(v^k) + sum_j v^j Gamma_{ij}^k; result at(i,k).
/// chart may be null only for constant coefficients.
ExprMatrix nabla_vector_field(const Connection& conn, const ChartFrame* chart,
                              const VectorField& v);

/// (L_v g)_{ij} = g(nabla_{e_i} v, e_j) + g(e_i, nabla_{e_j} v).
ExprMatrix lie_derivative_metric(const Connection& conn, const ChartFrame* chart,
                                 const VectorField& v, const RatMatrix& g);

/// [v, e_i] = nabla_v e_i - nabla_{e_i} v.
std::vector<HypExpr> lie_bracket_with_frame(const Connection& conn, const ChartFrame* chart,
                                            const VectorField& v, int i);

/// L_v w for a frame-constant vector field w: sum_i w^i [v, e_i].
std::vector<HypExpr> lie_derivative_constant_vector(const Connection& conn,
                                                    const ChartFrame* chart,
                                                    const VectorField& v,
                                                    const std::vector<Rational>& w);

/// L_v T for a frame-constant (0,2) tensor: (L_v T)_{ij} = -T([v,e_i],e_j) - T(e_i,[v,e_j]).
ExprMatrix lie_derivative_constant_bilinear(const Connection& conn, const ChartFrame* chart,
                                            const VectorField& v, const RatMatrix& t);

struct SolitonColumns {
  bool lambda = true;
  bool mu = true;
  bool nu = true;
};

/// rho + 1/2 L_v g + lambda g + mu g_assoc + nu eta (x) eta = 0 solved exactly
/// for the enabled unknowns. `consistent` means the residual vanishes in the
/// ring; `parameter_only` means the solution is free of coordinate symbols
/// (otherwise there is no constant soliton).
struct SolitonFit {
  HypExpr lambda, mu, nu;
  bool consistent = false;
  bool parameter_only = false;
  ExprMatrix residual;
};

SolitonFit solve_soliton_constants(const RatMatrix& rho, const ExprMatrix& lie_g,
                                   const RatMatrix& g, const RatMatrix& g_assoc,
                                   const std::vector<Rational>& eta,
                                   const SolitonColumns& columns = {});

/// lambda + mu + nu = 2n as a ring identity, nabla_xi v = phi v componentwise,
/// and L_v xi = 0.
CheckReport verify_thm31(const SolitonFit& fit, const PiStructure& ps, const Connection& conn,
                         const ChartFrame* chart, const VectorField& v, bool gate);

/// (L_v rho)(e_i, xi) = 0 for every frame index, as ring identities.
CheckReport verify_prop33(const Connection& conn, const ChartFrame* chart, const VectorField& v,
                          const RatMatrix& rho, const std::vector<Rational>& xi, bool gate);

/// rho = -2n eta (x) eta, tau = tau_assoc = -2n, and (dim 3) seeded sweeps of
/// sectional curvatures: phi-invariant planes (phi x, phi^2 x) equal 1 and
/// planes through xi equal -1. Degenerate draws are skipped and counted.
CheckReport verify_thm32_thm34(const PiStructure& ps, const CurvatureData& cd,
                               std::uint64_t seed, int sweep_count, bool gate);

}  // namespace parasol

#endif
