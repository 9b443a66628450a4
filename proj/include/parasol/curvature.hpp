#ifndef PARASOL_CURVATURE_HPP
#define PARASOL_CURVATURE_HPP

#include "parasol/lie_frame.hpp"
#include "parasol/pi_structure.hpp"

namespace parasol {

struct DegeneratePlaneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Levi-Civita coefficients: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
struct Connection {
  int dim = 0;
  Tensor3<Rational> gamma;

  explicit Connection(int d) : dim(d), gamma(d) {}
};

/// Koszul formula specialized to left-invariant fields:
///   2 g(nabla_{e_i} e_j, e_k) = c(i,j,k) - c(j,k,i) + c(k,i,j),
/// indices lowered with g. Throws InputError when g is singular.
Connection levi_civita(const StructureConstants& sc, const RatMatrix& g);

/// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z,
/// returned lowered: R(i,j,k,l) = g(R(e_i,e_j)e_k, e_l).
Tensor4<Rational> riemann(const Connection& conn, const StructureConstants& sc,
                          const RatMatrix& g);

struct CurvatureData {
  int dim = 0;
  Tensor4<Rational> riem;
  RatMatrix ricci;           // rho(y,z) = g^{ij} R(e_i, y, z, e_j)
  RatMatrix ricci_star;      // rho*(y,z) = g^{ij} R(e_i, y, z, phi e_j)
  RatMatrix ricci_operator;  // Q = g^{-1} rho
  Rational tau;              // g-trace of rho
  Rational tau_assoc;        // g_assoc-trace of rho (adopted definition)
  Rational tau_assoc_full;   // g_assoc^{il} g_assoc^{jk} R_{ijkl} (alternative, reported)
};

CurvatureData ricci_and_scalars(const Tensor4<Rational>& riem, const RatMatrix& g,
                                const RatMatrix& g_assoc, const RatMatrix& phi);

/// k = R(x,y,y,x) / (g(x,x) g(y,y) - g(x,y)^2); throws DegeneratePlaneError
/// when the denominator vanishes.
Rational sectional(const Tensor4<Rational>& riem, const RatMatrix& g,
                   const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Curvature of a 3-dimensional manifold from rho, tau and g:
///   R(x,y,z,w) = g(y,z) rho(x,w) - g(x,z) rho(y,w) + rho(y,z) g(x,w)
///              - rho(x,z) g(y,w) - tau/2 {g(y,z) g(x,w) - g(x,z) g(y,w)}.
Tensor4<Rational> curvature_3dim_reconstruct(const RatMatrix& rho, const Rational& tau,
                                             const RatMatrix& g);

/// Covariant derivative of a frame-constant tensor. Supported valences:
/// (1,1) -> out(i,k,j) = (nabla_i T)^k_j and (0,2) -> out(i,j,k) = (nabla_i T)_{jk}.
/// Throws InputError for any other valence.
Tensor3<Rational> nabla_tensor(const Connection& conn, const RatMatrix& t, int contravariant,
                               int covariant);

/// (0,4) extension used for the second Bianchi identity:
/// result[i](j,k,l,m) = (nabla_{e_i} R)(e_j,e_k,e_l,e_m).
std::vector<Tensor4<Rational>> nabla_riemann(const Connection& conn,
                                             const Tensor4<Rational>& riem);

/// (nabla_i v)^k for a frame-constant vector field.
RatMatrix nabla_constant_vector(const Connection& conn, const std::vector<Rational>& v);

/// (nabla_i w)_j for a frame-constant covector field.
RatMatrix nabla_constant_covector(const Connection& conn, const std::vector<Rational>& w);

/// Structural checks used by every instance: torsion, metric compatibility,
/// the four R symmetries, first and second Bianchi.
CheckReport connection_checks(const Connection& conn, const StructureConstants& sc,
                              const RatMatrix& g);
CheckReport curvature_checks(const Connection& conn, const Tensor4<Rational>& riem);

}  // namespace parasol

#endif
