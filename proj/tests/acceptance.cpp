// Acceptance suite: one criterion per section, one verdict line each, exact
// arithmetic throughout. Exit status 0 iff every criterion holds.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "helpers.hpp"

using namespace parasol;
using namespace parasol::testing;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }

  void require_runtime_below(double seconds) {
    runtime_limit_ = seconds;
  }

  ~Criterion() {
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    if (runtime_limit_ > 0 && elapsed.count() > runtime_limit_) {
      ok_ = false;
      if (first_failure_.empty()) {
        std::ostringstream os;
        os << "runtime " << elapsed.count() << "s exceeds " << runtime_limit_ << "s";
        first_failure_ = os.str();
      }
    }
    std::ostringstream line;
    line << (ok_ ? "[PASS] " : "[FAIL] ") << "criterion " << number_ << ": " << title_;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << " (" << elapsed.count() << "s)";
    if (!ok_) {
      line << " — " << first_failure_;
      ++failures;
    }
    std::cout << line.str() << "\n";
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  double runtime_limit_ = 0;
  std::string first_failure_;
};

bool row(const Report& report, const std::string& name, CheckStatus status) {
  for (const auto& r : report.checks)
    if (r.name == name && r.status == status) return true;
  return false;
}

struct GoldenSetup {
  ChartFrame chart = golden_chart();
  PiStructure ps = golden_structure();
  StructureConstants sc{3};
  Connection conn{3};
  RatMatrix g_assoc;
  CurvatureData cd;
  VectorField v;
  ExprMatrix lie_g;
  SolitonFit fit;

  GoldenSetup() {
    auto commutators = frame_commutators(chart);
    sc = commutators.constants;
    conn = levi_civita(sc, ps.g);
    g_assoc = ps.associated_metric_matrix();
    cd = ricci_and_scalars(riemann(conn, sc, ps.g), ps.g, g_assoc, ps.phi);
    v = golden_potential(chart.symbols);
    lie_g = lie_derivative_metric(conn, &chart, v, ps.g);
    fit = solve_soliton_constants(cd.ricci, lie_g, ps.g, g_assoc, ps.eta);
  }

  HypExpr expr(const std::string& text) const { return parse_hypexpr(text, chart.symbols); }
};

void criterion_1_golden_reproduction() {
  Criterion c(1, "reference instance reproduced bit-exactly (paper-check)");
  c.require_runtime_below(1.0);
  Report report = cmd_paper_check();
  c.require(report.all_passed(), "paper-check reported a failing row");
  for (const char* name :
       {"golden.commutators", "golden.connection", "golden.riemann", "golden.ricci",
        "golden.tau", "golden.tau_assoc", "golden.sectional", "golden.einstein_fit"})
    c.require(row(report, name, CheckStatus::Pass), std::string(name) + " missing or failing");
  c.require(report.exit_code() == 0, "exit code nonzero");
}

void criterion_2_soliton_solve() {
  Criterion c(2, "soliton constants solved as exact polynomial identities");
  c.require_runtime_below(1.0);
  GoldenSetup s;
  c.require(s.fit.consistent, "residual not identically zero");
  c.require(s.fit.parameter_only, "solution not a parameter polynomial");
  c.require(s.fit.lambda == s.expr("c1"), "lambda != c1");
  c.require(s.fit.mu == s.expr("-(c2+c3)"), "mu != -(c2+c3)");
  c.require(s.fit.nu == s.expr("-(c1-c2-c3-2)"), "nu != -(c1-c2-c3-2)");
  const char* expected[3][3] = {
      {"-2*c1", "2*(c2+c3)", "0"}, {"2*(c2+c3)", "-2*c1", "0"}, {"0", "0", "0"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c.require(s.lie_g.at(i, j) == s.expr(expected[i][j]),
                "L_v g entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    ") differs");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c.require(s.fit.residual.at(i, j).is_zero(), "nonzero residual entry");
}

void criterion_3_theorem_31() {
  Criterion c(3, "soliton constants sum to 2n; nabla_xi v = phi v; L_v xi = 0");
  GoldenSetup s;
  c.require((s.fit.lambda + s.fit.mu + s.fit.nu - HypExpr::constant(2)).is_zero(),
            "lambda + mu + nu - 2 != 0 in the parameter ring");
  auto report = verify_thm31(s.fit, s.ps, s.conn, &s.chart, s.v, true);
  c.require(report.ok(), "theorem checker reported a failure");
  auto nv = nabla_vector_field(s.conn, &s.chart, s.v);
  for (int k = 0; k < 3; ++k) {
    HypExpr lhs;
    for (int i = 0; i < 3; ++i) lhs += nv.at(i, k).scaled(s.ps.xi[i]);
    HypExpr rhs;
    for (int j = 0; j < 3; ++j) rhs += s.v.coeffs[j].scaled(s.ps.phi.at(k, j));
    c.require((lhs - rhs).is_zero(), "nabla_xi v - phi v has a nonzero component");
  }
  auto lie_xi = lie_derivative_constant_vector(s.conn, &s.chart, s.v, s.ps.xi);
  for (const auto& component : lie_xi)
    c.require(component.is_zero(), "L_v xi has a nonzero component");
}

void criterion_4_prop_33_endpoint() {
  Criterion c(4, "(L_v rho)(e_i, xi) = 0 as ring identities");
  GoldenSetup s;
  auto lie_rho = lie_derivative_constant_bilinear(s.conn, &s.chart, s.v, s.cd.ricci);
  for (int i = 0; i < 3; ++i) {
    HypExpr acc;
    for (int j = 0; j < 3; ++j) acc += lie_rho.at(i, j).scaled(s.ps.xi[j]);
    c.require(acc.is_zero(),
              "(L_v rho)(e_" + std::to_string(i + 1) + ", xi) != 0");
  }
  c.require(verify_prop33(s.conn, &s.chart, s.v, s.cd.ricci, s.ps.xi, true).ok(),
            "endpoint checker reported a failure");
}

void criterion_5_theorems_32_34() {
  Criterion c(5, "rho = -2 eta x eta, tau = tau_assoc = -2, sectional sweeps");
  GoldenSetup s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c.require(s.cd.ricci.at(i, j) == -2 * s.ps.eta[i] * s.ps.eta[j],
                "rho differs from -2 eta x eta");
  c.require(s.cd.tau == -2 && s.cd.tau_assoc == -2, "scalar curvatures differ from -2");
  auto report = verify_thm32_thm34(s.ps, s.cd, 0, 20, true);
  c.require(report.ok(), "sweep checker reported a failure");
  for (const auto& item : report.items)
    if (item.name == "phi_sections" || item.name == "xi_sections")
      std::cout << "    " << item.name << ": " << item.detail << "\n";
}

void criterion_6_para_sasaki_like_suite() {
  Criterion c(6, "para-Sasaki-like identity suite, all entrywise and exact");
  GoldenSetup s;
  auto psl = is_para_sasaki_like(s.ps, s.conn, s.cd);
  c.require(psl.ok(), "defining identity or a curvature consequence failed");
  c.require(psl.items.size() == 6, "expected six identity groups");
  c.require(check_curvature_phi_identity(s.ps, s.cd, true).ok(),
            "four-term curvature identity failed");
  c.require(check_ricci_star_relation(s.ps, s.cd, true).ok(), "rho* relation failed");
  auto prop21 = check_prop21(s.ps, s.conn, s.cd, true);
  c.require(prop21.ok() && prop21.items.size() == 3, "Ricci-operator identities failed");
  auto fit = fit_einstein_like(s.cd.ricci, s.ps.g, s.g_assoc, s.ps.eta);
  c.require(check_prop22(fit, s.cd.tau, s.cd.tau_assoc, 1, true).ok(),
            "eta-Einstein constants check failed");
}

void criterion_7_structural_suite() {
  Criterion c(7, "structural suite on the reference, abelian, and scaled instances");
  c.require_runtime_below(10.0);
  std::vector<std::pair<std::string, StructureConstants>> instances;
  instances.emplace_back("reference", golden_constants());
  instances.emplace_back("abelian", abelian_constants());
  for (const Rational& t : {Rational(1, 2), Rational(2), Rational(3)})
    instances.emplace_back("scaled t=" + t.str(), scaled_family(t));

  SeededRng rng(2024);
  for (const auto& [label, sc] : instances) {
    PiStructure ps = golden_structure();
    auto conn = levi_civita(sc, ps.g);
    c.require(connection_checks(conn, sc, ps.g).ok(),
              label + ": torsion or metric compatibility failed");
    auto riem = riemann(conn, sc, ps.g);
    c.require(curvature_checks(conn, riem).ok(),
              label + ": R symmetries or Bianchi identities failed");
    auto g_assoc = ps.associated_metric_matrix();
    auto cd = ricci_and_scalars(riem, ps.g, g_assoc, ps.phi);
    c.require(curvature_3dim_reconstruct(cd.ricci, cd.tau, ps.g) == riem,
              label + ": 3-dimensional reconstruction differs from R");
    for (int trial = 0; trial < 50; ++trial) {
      Rational a = rng.small_rational(), b = rng.small_rational(), cc = rng.small_rational();
      RatMatrix rho(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          rho.at(i, j) =
              a * ps.g.at(i, j) + b * g_assoc.at(i, j) + cc * ps.eta[i] * ps.eta[j];
      auto fit = fit_einstein_like(rho, ps.g, g_assoc, ps.eta);
      c.require(fit.exists() && fit.a == a && fit.b == b && fit.c == cc,
                label + ": fit round-trip failed");
    }
  }
}

void criterion_8_ring_correctness() {
  Criterion c(8, "ring normalization, derivative commutation, finite differences");
  SymbolTable table(2, {"p", "q"});
  SeededRng rng(99);

  auto random_expr = [&](int terms) {
    HypExpr acc;
    for (int t = 0; t < terms; ++t) {
      HypExpr term = HypExpr::constant(rng.small_rational());
      for (int f = 0; f < rng.uniform_int(0, 3); ++f) {
        switch (rng.uniform_int(0, 4)) {
          case 0: term = term * HypExpr::symbol(Symbol::coord(1)); break;
          case 1: term = term * HypExpr::symbol(Symbol::coord(2)); break;
          case 2: term = term * HypExpr::symbol(Symbol::sinh(1)); break;
          case 3: term = term * HypExpr::symbol(Symbol::cosh(1)); break;
          default: term = term * HypExpr::symbol(Symbol::param(0)); break;
        }
      }
      acc += term;
    }
    return acc;
  };

  const Rational h(1, 10000);
  for (int trial = 0; trial < 200; ++trial) {
    HypExpr e = random_expr(3);
    c.require(normalize(to_tree(e), table) == e, "normalization not idempotent");

    HypExpr d12 = partial_derivative(partial_derivative(e, 1), 2);
    HypExpr d21 = partial_derivative(partial_derivative(e, 2), 1);
    c.require(d12 == d21, "mixed partials differ");

    int coord = rng.uniform_int(1, 2);
    Assignment at;
    at[Symbol::coord(1)] = Rational(rng.uniform_int(-3, 3), rng.uniform_int(3, 6));
    at[Symbol::coord(2)] = Rational(rng.uniform_int(-3, 3), rng.uniform_int(3, 6));
    at[Symbol::param(0)] = rng.small_rational();
    at[Symbol::param(1)] = rng.small_rational();
    Assignment plus = at, minus = at;
    plus[Symbol::coord(coord)] += h;
    minus[Symbol::coord(coord)] -= h;
    double fd = (evaluate(e, plus) - evaluate(e, minus)) / 2e-4;
    double exact = evaluate(partial_derivative(e, coord), at);
    c.require(std::abs(fd - exact) <= 1e-6, "finite-difference mismatch above 1e-6");
  }
}

}  // namespace

int main() {
  criterion_1_golden_reproduction();
  criterion_2_soliton_solve();
  criterion_3_theorem_31();
  criterion_4_prop_33_endpoint();
  criterion_5_theorems_32_34();
  criterion_6_para_sasaki_like_suite();
  criterion_7_structural_suite();
  criterion_8_ring_correctness();
  if (failures == 0)
    std::cout << "all acceptance criteria satisfied\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
