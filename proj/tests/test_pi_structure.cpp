#include <doctest.h>

#include "helpers.hpp"

using namespace parasol;
using namespace parasol::testing;

namespace {

bool row_passed(const CheckReport& report, const std::string& name) {
  for (const auto& item : report.items)
    if (item.name == name) return item.passed;
  return false;
}

// Rational orthogonal rotations in the e1-e2 plane (Pythagorean triples),
// extended by the identity on xi.
RatMatrix rotation3(const Rational& c, const Rational& s) {
  RatMatrix p = RatMatrix::identity(3);
  p.at(0, 0) = c;
  p.at(0, 1) = -s;
  p.at(1, 0) = s;
  p.at(1, 1) = c;
  return p;
}

PiStructure rebased_golden(const RatMatrix& p) {
  auto pinv = inverse(p);
  REQUIRE(pinv.has_value());
  PiStructure base = golden_structure();
  PiStructure out;
  out.dim = 3;
  RatMatrix pt(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) pt.at(i, j) = p.at(j, i);
  out.g = matmul(pt, matmul(base.g, p));
  out.phi = matmul(*pinv, matmul(base.phi, p));
  out.xi.assign(3, 0);
  out.eta.assign(3, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.xi[i] += pinv->at(i, j) * base.xi[j];
      out.eta[i] += base.eta[j] * p.at(j, i);
    }
  return out;
}

}  // namespace

TEST_CASE("reference structure satisfies every axiom") {
  auto report = verify_axioms(golden_structure());
  CHECK(report.ok());
  CHECK(report.items.size() == 10);
}

TEST_CASE("scaling phi breaks the squared-identity and metric compatibility") {
  PiStructure ps = golden_structure();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ps.phi.at(i, j) *= 2;
  auto report = verify_axioms(ps);
  CHECK(!report.ok());
  CHECK(!row_passed(report, "phi_squared"));
  CHECK(!row_passed(report, "metric_phi_compat"));
  CHECK(row_passed(report, "phi_xi_zero"));
}

TEST_CASE("rank-deficient phi fails the squared-identity") {
  PiStructure ps = golden_structure();
  ps.phi = RatMatrix(3, 3);  // phi = 0 off the xi direction
  auto report = verify_axioms(ps);
  CHECK(!report.ok());
  CHECK(!row_passed(report, "phi_squared"));
  CHECK(row_passed(report, "trace_phi_zero"));
}

TEST_CASE("dimension mismatch is a hard error") {
  PiStructure ps = golden_structure();
  ps.xi.pop_back();
  CHECK_THROWS_AS(verify_axioms(ps), InputError);
}

TEST_CASE("non-positive-definite metric is reported") {
  PiStructure ps = golden_structure();
  ps.g.at(0, 0) = -1;
  auto report = verify_axioms(ps);
  CHECK(!row_passed(report, "g_positive_definite"));
}

TEST_CASE("associated metric of the reference structure") {
  auto result = associated_metric(golden_structure());
  RatMatrix expected(3, 3);
  expected.at(0, 1) = 1;
  expected.at(1, 0) = 1;
  expected.at(2, 2) = 1;
  CHECK(result.g_assoc == expected);
  CHECK(result.signature == Signature{2, 1, 0});
  CHECK(result.signature_ok);
}

TEST_CASE("g_assoc pairs xi with eta") {
  PiStructure ps = golden_structure();
  auto gt = ps.associated_metric_matrix();
  for (int i = 0; i < 3; ++i) {
    Rational acc = 0;
    for (int j = 0; j < 3; ++j) acc += gt.at(i, j) * ps.xi[j];
    CHECK(acc == ps.eta[i]);
  }
}

TEST_CASE("g_assoc compatibility on random vectors") {
  PiStructure ps = golden_structure();
  auto gt = ps.associated_metric_matrix();
  SeededRng rng(29);
  auto pair_with = [&](const RatMatrix& m, const std::vector<Rational>& x,
                       const std::vector<Rational>& y) {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc += x[i] * m.at(i, j) * y[j];
    return acc;
  };
  for (int trial = 0; trial < 30; ++trial) {
    auto x = rng.rational_vector(3);
    auto y = rng.rational_vector(3);
    std::vector<Rational> phi_x(3, 0), phi_y(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        phi_x[i] += ps.phi.at(i, j) * x[j];
        phi_y[i] += ps.phi.at(i, j) * y[j];
      }
    Rational eta_x = 0, eta_y = 0;
    for (int i = 0; i < 3; ++i) {
      eta_x += ps.eta[i] * x[i];
      eta_y += ps.eta[i] * y[i];
    }
    REQUIRE(pair_with(gt, phi_x, phi_y) == pair_with(gt, x, y) - eta_x * eta_y);
  }
}

TEST_CASE("g_assoc squares to the identity in orthonormal frames, including rebases") {
  std::vector<std::pair<Rational, Rational>> rotations = {
      {1, 0},
      {-1, 0},
      {Rational(3, 5), Rational(4, 5)},
      {Rational(5, 13), Rational(-12, 13)},
      {Rational(-8, 17), Rational(15, 17)},
      {Rational(20, 29), Rational(21, 29)}};
  for (const auto& [c, s] : rotations) {
    RatMatrix p = rotation3(c, s);
    PiStructure ps = rebased_golden(p);
    auto axioms = verify_axioms(ps);
    REQUIRE(axioms.ok());  // derived identities never fail when the axioms hold
    auto gt = ps.associated_metric_matrix();
    CHECK(matmul(gt, gt) == RatMatrix::identity(3));
    CHECK(signature_of(gt) == Signature{2, 1, 0});
  }
}
