#include "parasol/soliton.hpp"

#include <sstream>

#include "parasol/rng.hpp"

namespace parasol {

VectorField VectorField::constants(const std::vector<Rational>& values) {
  VectorField v;
  for (const auto& q : values) v.coeffs.push_back(HypExpr::constant(q));
  return v;
}

VectorField VectorField::collinear(const HypExpr& k, const std::vector<Rational>& xi) {
  VectorField v;
  for (const auto& component : xi) v.coeffs.push_back(k.scaled(component));
  return v;
}

bool VectorField::is_constant() const {
  for (const auto& c : coeffs)
    if (!c.is_constant()) return false;
  return true;
}

namespace {

HypExpr frame_apply(const ChartFrame* chart, int i, const HypExpr& f) {
  if (f.is_constant()) return HypExpr::zero();
  if (!chart)
    throw InputError("potential has non-constant coefficients but no chart frame is declared");
  return directional_derivative(*chart, i, f);
}

}  // namespace

ExprMatrix nabla_vector_field(const Connection& conn, const ChartFrame* chart,
                              const VectorField& v) {
  const int n = conn.dim;
  if (v.dim() != n) throw InputError("potential dimension mismatch");
  ExprMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      HypExpr acc = frame_apply(chart, i, v.coeffs[k]);
      for (int j = 0; j < n; ++j) acc += v.coeffs[j].scaled(conn.gamma.at(i, j, k));
      out.at(i, k) = acc;
    }
  return out;
}

ExprMatrix lie_derivative_metric(const Connection& conn, const ChartFrame* chart,
                                 const VectorField& v, const RatMatrix& g) {
  const int n = conn.dim;
  ExprMatrix nv = nabla_vector_field(conn, chart, v);
  ExprMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HypExpr acc;
      for (int k = 0; k < n; ++k)
        acc += nv.at(i, k).scaled(g.at(k, j)) + nv.at(j, k).scaled(g.at(i, k));
      out.at(i, j) = acc;
    }
  return out;
}

std::vector<HypExpr> lie_bracket_with_frame(const Connection& conn, const ChartFrame* chart,
                                            const VectorField& v, int i) {
  const int n = conn.dim;
  if (i < 0 || i >= n)
    throw InputError("frame index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(n));
  ExprMatrix nv = nabla_vector_field(conn, chart, v);
  std::vector<HypExpr> out(n);
  for (int k = 0; k < n; ++k) {
    HypExpr acc;
    for (int j = 0; j < n; ++j) acc += v.coeffs[j].scaled(conn.gamma.at(j, i, k));
    out[k] = acc - nv.at(i, k);
  }
  return out;
}

std::vector<HypExpr> lie_derivative_constant_vector(const Connection& conn,
                                                    const ChartFrame* chart,
                                                    const VectorField& v,
                                                    const std::vector<Rational>& w) {
  const int n = conn.dim;
  std::vector<HypExpr> out(n);
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0) continue;
    auto bracket = lie_bracket_with_frame(conn, chart, v, i);
    for (int k = 0; k < n; ++k) out[k] += bracket[k].scaled(w[i]);
  }
  return out;
}

ExprMatrix lie_derivative_constant_bilinear(const Connection& conn, const ChartFrame* chart,
                                            const VectorField& v, const RatMatrix& t) {
  const int n = conn.dim;
  std::vector<std::vector<HypExpr>> brackets(n);
  for (int i = 0; i < n; ++i) brackets[i] = lie_bracket_with_frame(conn, chart, v, i);
  ExprMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HypExpr acc;
      for (int a = 0; a < n; ++a)
        acc -= brackets[i][a].scaled(t.at(a, j)) + brackets[j][a].scaled(t.at(i, a));
      out.at(i, j) = acc;
    }
  return out;
}

SolitonFit solve_soliton_constants(const RatMatrix& rho, const ExprMatrix& lie_g,
                                   const RatMatrix& g, const RatMatrix& g_assoc,
                                   const std::vector<Rational>& eta,
                                   const SolitonColumns& columns) {
  const int n = g.rows();
  std::vector<int> enabled;  // 0 = lambda, 1 = mu, 2 = nu
  if (columns.lambda) enabled.push_back(0);
  if (columns.mu) enabled.push_back(1);
  if (columns.nu) enabled.push_back(2);
  if (enabled.empty()) throw InputError("soliton solve needs at least one unknown");

  RatMatrix a(n * n, static_cast<int>(enabled.size()));
  std::vector<HypExpr> rhs(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (std::size_t col = 0; col < enabled.size(); ++col) {
        switch (enabled[col]) {
          case 0: a.at(row, col) = g.at(i, j); break;
          case 1: a.at(row, col) = g_assoc.at(i, j); break;
          case 2: a.at(row, col) = eta[i] * eta[j]; break;
        }
      }
      rhs[row] = -(HypExpr::constant(rho.at(i, j)) + lie_g.at(i, j).scaled(Rational(1, 2)));
    }

  auto solved = solve_overdetermined(a, rhs);

  SolitonFit fit;
  HypExpr* slots[3] = {&fit.lambda, &fit.mu, &fit.nu};
  for (std::size_t col = 0; col < enabled.size(); ++col)
    *slots[enabled[col]] = solved.solution[col];
  fit.consistent = solved.consistent;
  fit.parameter_only =
      fit.lambda.parameters_only() && fit.mu.parameters_only() && fit.nu.parameters_only();
  fit.residual = ExprMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fit.residual.at(i, j) = solved.residual[i * n + j];
  return fit;
}

CheckReport verify_thm31(const SolitonFit& fit, const PiStructure& ps, const Connection& conn,
                         const ChartFrame* chart, const VectorField& v, bool gate) {
  CheckReport report;
  if (!gate) {
    report.skipped = true;
    report.skip_reason = "requires a para-Sasaki-like instance with a consistent soliton fit";
    return report;
  }
  const int n = ps.dim;

  {
    HypExpr sum = fit.lambda + fit.mu + fit.nu - HypExpr::constant(Rational(2 * ps.n()));
    CheckItem item{"sum_identity", sum.is_zero(), ""};
    if (!item.passed) item.detail = "lambda + mu + nu - 2n != 0";
    report.items.push_back(std::move(item));
  }

  {
    ExprMatrix nv = nabla_vector_field(conn, chart, v);
    CheckItem item{"nabla_xi_potential", true, ""};
    for (int k = 0; k < n && item.passed; ++k) {
      HypExpr lhs;
      for (int i = 0; i < n; ++i) lhs += nv.at(i, k).scaled(ps.xi[i]);
      HypExpr rhs;
      for (int j = 0; j < n; ++j) rhs += v.coeffs[j].scaled(ps.phi.at(k, j));
      if (!(lhs - rhs).is_zero()) {
        item.passed = false;
        item.detail = "(nabla_xi v - phi v)^" + std::to_string(k + 1) + " != 0";
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    auto lie_xi = lie_derivative_constant_vector(conn, chart, v, ps.xi);
    CheckItem item{"lie_v_xi", true, ""};
    for (int k = 0; k < n && item.passed; ++k)
      if (!lie_xi[k].is_zero()) {
        item.passed = false;
        item.detail = "(L_v xi)^" + std::to_string(k + 1) + " != 0";
      }
    report.items.push_back(std::move(item));
  }

  return report;
}

CheckReport verify_prop33(const Connection& conn, const ChartFrame* chart, const VectorField& v,
                          const RatMatrix& rho, const std::vector<Rational>& xi, bool gate) {
  CheckReport report;
  if (!gate) {
    report.skipped = true;
    report.skip_reason = "requires a para-Sasaki-like instance with a consistent soliton fit";
    return report;
  }
  const int n = conn.dim;
  ExprMatrix lie_rho = lie_derivative_constant_bilinear(conn, chart, v, rho);
  CheckItem item{"lie_rho_on_xi", true, ""};
  for (int i = 0; i < n && item.passed; ++i) {
    HypExpr acc;
    for (int j = 0; j < n; ++j) acc += lie_rho.at(i, j).scaled(xi[j]);
    if (!acc.is_zero()) {
      item.passed = false;
      item.detail = "(L_v rho)(e_" + std::to_string(i + 1) + ", xi) != 0";
    }
  }
  report.items.push_back(std::move(item));
  return report;
}

CheckReport verify_thm32_thm34(const PiStructure& ps, const CurvatureData& cd,
                               std::uint64_t seed, int sweep_count, bool gate) {
  CheckReport report;
  if (!gate) {
    report.skipped = true;
    report.skip_reason =
        "requires para-Sasaki-like + Einstein-like fit + consistent soliton fit";
    return report;
  }
  const int n = ps.dim;
  const Rational minus_two_n = Rational(-2 * ps.n());

  {
    CheckItem item{"ricci_form", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j) {
        Rational expected = minus_two_n * ps.eta[i] * ps.eta[j];
        if (cd.ricci.at(i, j) != expected) {
          item.passed = false;
          item.detail = "rho(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                        cd.ricci.at(i, j).str() + ", expected " + expected.str();
        }
      }
    report.items.push_back(std::move(item));
  }

  {
    bool ok = cd.tau == minus_two_n && cd.tau_assoc == minus_two_n;
    report.items.push_back({"scalar_curvatures", ok,
                            "tau = " + cd.tau.str() + ", tau_assoc = " + cd.tau_assoc.str() +
                                ", expected both " + minus_two_n.str()});
  }

  if (n == 3) {
    SeededRng rng(seed);
    {
      CheckItem item{"phi_sections", true, ""};
      int accepted = 0, skipped = 0;
      while (accepted < sweep_count) {
        auto x = rng.rational_vector(n);
        std::vector<Rational> phi_x(n), phi2_x(n);
        for (int k = 0; k < n; ++k) {
          Rational a1 = 0;
          for (int j = 0; j < n; ++j) a1 += ps.phi.at(k, j) * x[j];
          phi_x[k] = a1;
        }
        for (int k = 0; k < n; ++k) {
          Rational a2 = 0;
          for (int j = 0; j < n; ++j) a2 += ps.phi.at(k, j) * phi_x[j];
          phi2_x[k] = a2;
        }
        try {
          Rational k_val = sectional(cd.riem, ps.g, phi_x, phi2_x);
          ++accepted;
          if (k_val != 1) {
            item.passed = false;
            item.detail = "phi-section curvature " + k_val.str() + " != 1";
            break;
          }
        } catch (const DegeneratePlaneError&) {
          ++skipped;
          if (skipped > 1000) {
            item.passed = false;
            item.detail = "could not draw enough nondegenerate phi-sections";
            break;
          }
        }
      }
      if (item.passed)
        item.detail = std::to_string(accepted) + " sections = 1, " + std::to_string(skipped) +
                      " degenerate draws skipped";
      report.items.push_back(std::move(item));
    }

    {
      CheckItem item{"xi_sections", true, ""};
      int accepted = 0, skipped = 0;
      std::vector<Rational> xi = ps.xi;
      while (accepted < sweep_count) {
        auto x = rng.rational_vector(n);
        try {
          Rational k_val = sectional(cd.riem, ps.g, x, xi);
          ++accepted;
          if (k_val != -1) {
            item.passed = false;
            item.detail = "xi-section curvature " + k_val.str() + " != -1";
            break;
          }
        } catch (const DegeneratePlaneError&) {
          ++skipped;
          if (skipped > 1000) {
            item.passed = false;
            item.detail = "could not draw enough nondegenerate xi-sections";
            break;
          }
        }
      }
      if (item.passed)
        item.detail = std::to_string(accepted) + " sections = -1, " + std::to_string(skipped) +
                      " degenerate draws skipped";
      report.items.push_back(std::move(item));
    }
  }

  return report;
}

}  // namespace parasol
