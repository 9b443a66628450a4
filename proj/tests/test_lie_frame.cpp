#include <doctest.h>

#include "helpers.hpp"

using namespace parasol;
using namespace parasol::testing;

namespace {

// Brute-force Jacobi oracle, independent of validate_lie_algebra.
bool jacobi_holds(const StructureConstants& sc) {
  const int n = sc.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational acc = 0;
          for (int m = 0; m < n; ++m)
            acc += sc.at(i, j, m) * sc.at(m, k, l) + sc.at(j, k, m) * sc.at(m, i, l) +
                   sc.at(k, i, m) * sc.at(m, j, l);
          if (acc != 0) return false;
        }
  return true;
}

ChartFrame frame_from(int coords, std::initializer_list<const char*> entries,
                      std::vector<std::string> params = {}) {
  SymbolTable table(coords, std::move(params));
  ExprMatrix e(coords, coords);
  auto it = entries.begin();
  for (int i = 0; i < coords; ++i)
    for (int a = 0; a < coords; ++a) e.at(i, a) = parse_hypexpr(*it++, table);
  return ChartFrame{table, e};
}

}  // namespace

TEST_CASE("reference constants validate; oracle agrees") {
  auto sc = golden_constants();
  CHECK(validate_lie_algebra(sc).ok());
  CHECK(jacobi_holds(sc));
}

TEST_CASE("abelian constants validate") {
  CHECK(validate_lie_algebra(abelian_constants()).ok());
}

TEST_CASE("antisymmetry violation is located") {
  StructureConstants sc(3);
  sc.at(0, 1, 2) = 1;
  sc.at(1, 0, 2) = 1;  // should be -1
  auto report = validate_lie_algebra(sc);
  CHECK(!report.ok());
  bool found = false;
  for (const auto& issue : report.issues)
    if (issue.rule == "antisymmetry" && issue.indices == std::vector<int>{1, 2, 3}) found = true;
  CHECK(found);
}

TEST_CASE("jacobi violation is reported") {
  StructureConstants sc(3);
  // [e1,e2] = e1, [e1,e3] = e3, [e2,e3] = 0: jacobiator of (1,2,3) has an e3 term.
  sc.set_bracket(0, 1, 0, 1);
  sc.set_bracket(0, 2, 2, 1);
  CHECK(!jacobi_holds(sc));
  auto report = validate_lie_algebra(sc);
  bool found = false;
  for (const auto& issue : report.issues)
    if (issue.rule == "jacobi") found = true;
  CHECK(found);
}

TEST_CASE("reference chart frame reproduces the bracket table") {
  auto chart = golden_chart();
  auto result = frame_commutators(chart);
  REQUIRE(result.ok);
  auto expected = golden_constants();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(result.constants.at(i, j, k) == expected.at(i, j, k));
  CHECK(validate_lie_algebra(result.constants).ok());
}

TEST_CASE("identity frame commutes") {
  auto chart = frame_from(3, {"1", "0", "0", "0", "1", "0", "0", "0", "1"});
  auto result = frame_commutators(chart);
  REQUIRE(result.ok);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(result.constants.at(i, j, k) == 0);
}

TEST_CASE("scaling frame e1 = x1 d1, e2 = d2 has zero bracket") {
  auto chart = frame_from(2, {"x1", "0", "0", "1"});
  CHECK(frame_determinant(chart) == parse_hypexpr("x1", chart.symbols));
  auto result = frame_commutators(chart);
  REQUIRE(result.ok);
  for (int k = 0; k < 2; ++k) CHECK(result.constants.at(0, 1, k) == 0);
}

TEST_CASE("heisenberg chart frame") {
  // e1 = d1 - x2 d3, e2 = d2, e3 = d3 gives [e1,e2] = e3.
  auto chart = frame_from(3, {"1", "0", "-x2", "0", "1", "0", "0", "0", "1"});
  auto result = frame_commutators(chart);
  REQUIRE(result.ok);
  auto expected = heisenberg_constants();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(result.constants.at(i, j, k) == expected.at(i, j, k));
  CHECK(validate_lie_algebra(result.constants).ok());
}

TEST_CASE("singular frame is rejected") {
  auto chart = frame_from(2, {"x1", "x1", "x1", "x1"});
  auto result = frame_commutators(chart);
  CHECK(!result.ok);
  REQUIRE(!result.issues.empty());
  CHECK(result.issues[0].find("singular") != std::string::npos);
}

TEST_CASE("non-left-invariant frame is rejected") {
  // [e1, e2] = d2 = (1/x1) e2: not a constant combination.
  auto chart = frame_from(2, {"1", "0", "0", "x1"});
  auto result = frame_commutators(chart);
  CHECK(!result.ok);
  REQUIRE(!result.issues.empty());
  CHECK(result.issues[0].find("non-constant") != std::string::npos);
}

TEST_CASE("directional derivative on the reference frame") {
  auto chart = golden_chart();
  // e3 = d3 applied to sinh(x3).
  CHECK(directional_derivative(chart, 2, parse_hypexpr("sinh(x3)", chart.symbols)) ==
        parse_hypexpr("cosh(x3)", chart.symbols));
  // e1 applied to x1 picks the first frame component.
  CHECK(directional_derivative(chart, 0, parse_hypexpr("x1", chart.symbols)) ==
        parse_hypexpr("cosh(x3)", chart.symbols));
  // parameters are constants for every frame vector.
  for (int i = 0; i < 3; ++i)
    CHECK(directional_derivative(chart, i, parse_hypexpr("c1", chart.symbols)).is_zero());
}

TEST_CASE("directional derivative is linear and Leibniz") {
  auto chart = golden_chart();
  SeededRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    // random polynomials in x1, x3, sinh/cosh(x3), c1
    auto rand_expr = [&]() {
      HypExpr acc;
      for (int t = 0; t < 3; ++t) {
        HypExpr term = HypExpr::constant(rng.small_rational());
        if (rng.uniform_int(0, 1)) term = term * HypExpr::symbol(Symbol::coord(1));
        if (rng.uniform_int(0, 1)) term = term * HypExpr::symbol(Symbol::sinh(3));
        if (rng.uniform_int(0, 1)) term = term * HypExpr::symbol(Symbol::cosh(3));
        if (rng.uniform_int(0, 1)) term = term * HypExpr::symbol(Symbol::param(0));
        acc += term;
      }
      return acc;
    };
    HypExpr f = rand_expr(), g = rand_expr();
    Rational alpha = rng.small_rational();
    for (int i = 0; i < 3; ++i) {
      REQUIRE(directional_derivative(chart, i, f + g.scaled(alpha)) ==
              directional_derivative(chart, i, f) +
                  directional_derivative(chart, i, g).scaled(alpha));
      REQUIRE(directional_derivative(chart, i, f * g) ==
              directional_derivative(chart, i, f) * g +
                  f * directional_derivative(chart, i, g));
    }
  }
}

TEST_CASE("directional derivative rejects bad input") {
  auto chart = golden_chart();
  CHECK_THROWS_AS(directional_derivative(chart, 5, HypExpr::constant(1)), InputError);
  CHECK_THROWS_AS(directional_derivative(chart, -1, HypExpr::constant(1)), InputError);
  CHECK_THROWS_AS(directional_derivative(chart, 0, HypExpr::symbol(Symbol::coord(7))),
                  InputError);
}

TEST_CASE("derived constants are antisymmetric and satisfy Jacobi on hand-built frames") {
  std::vector<ChartFrame> frames;
  frames.push_back(golden_chart());
  frames.push_back(frame_from(3, {"1", "0", "0", "0", "1", "0", "0", "0", "1"}));
  frames.push_back(frame_from(3, {"1", "0", "-x2", "0", "1", "0", "0", "0", "1"}));
  for (const auto& chart : frames) {
    auto result = frame_commutators(chart);
    REQUIRE(result.ok);
    const auto& sc = result.constants;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(sc.at(i, j, k) == -sc.at(j, i, k));
    CHECK(jacobi_holds(sc));
  }
}
