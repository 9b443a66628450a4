#ifndef PARASOL_CLASSIFICATION_HPP
#define PARASOL_CLASSIFICATION_HPP

#include "parasol/curvature.hpp"

namespace parasol {

/// Exact fit of rho against {g, g_assoc, eta (x) eta}.
struct EinsteinLikeFit {
  enum class Kind { Einstein, EtaEinstein, ParaEinsteinLike, None };

  Rational a, b, c;
  Kind kind = Kind::None;
  RatMatrix residual;  // rho - (a g + b g_assoc + c eta (x) eta); rho itself when Kind::None

  bool exists() const { return kind != Kind::None; }
};

std::string to_string(EinsteinLikeFit::Kind kind);

/// Solves the stacked dim^2 x 3 system exactly. When inconsistent, reports
/// Kind::None with (a,b,c) = 0 and the zero-fit residual (rho itself).
/// Throws std::logic_error if {g, g_assoc, eta (x) eta} are linearly dependent.
EinsteinLikeFit fit_einstein_like(const RatMatrix& rho, const RatMatrix& g,
                                  const RatMatrix& g_assoc, const std::vector<Rational>& eta);

/// Defining identity (nabla_x phi) y = -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi,
/// checked entrywise; on a pass the report also carries the derived curvature
/// identities (nabla xi = phi ..., R(x,y)xi, R(xi,y)xi, rho(.,xi)).
CheckReport is_para_sasaki_like(const PiStructure& ps, const Connection& conn,
                                const CurvatureData& cd);

/// R(x,y,phi z,w) - R(x,y,z,phi w) four-term identity, all dim^4 combinations.
CheckReport check_curvature_phi_identity(const PiStructure& ps, const CurvatureData& cd,
                                         bool para_sasaki_like);

/// rho*(y,z) = rho(y, phi z) - (2n-1) g(y, phi z) entrywise. The sign of the
/// (2n-1) term follows from tracing the four-term identity above; see README.
CheckReport check_ricci_star_relation(const PiStructure& ps, const CurvatureData& cd,
                                      bool para_sasaki_like);

/// Ricci-operator identities:
///   (nabla_x Q)xi = -Q phi x - 2n phi x,
///   (nabla_xi Q)y = -2 Q phi y,
///   eta((nabla_x Q)xi) = 0 and eta((nabla_xi Q)y) = 0.
CheckReport check_prop21(const PiStructure& ps, const Connection& conn, const CurvatureData& cd,
                         bool para_sasaki_like);

/// eta-Einstein constants: b = 0, a = tau/2n + 1, c = -2n - 1 - tau/2n, and
/// tau_assoc = -2n.
CheckReport check_prop22(const EinsteinLikeFit& fit, const Rational& tau,
                         const Rational& tau_assoc, int n, bool para_sasaki_like);

}  // namespace parasol

#endif
