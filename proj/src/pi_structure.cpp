#include "parasol/pi_structure.hpp"

#include <sstream>

namespace parasol {

namespace {

std::string located(int i, int j, const Rational& got, const Rational& expected) {
  std::ostringstream os;
  os << "entry (" << i + 1 << "," << j + 1 << "): got " << got.str() << ", expected "
     << expected.str();
  return os.str();
}

// Appends a named entrywise matrix comparison.
void check_matrix(CheckReport& report, const std::string& name, const RatMatrix& got,
                  const RatMatrix& expected) {
  CheckItem item{name, true, ""};
  for (int i = 0; i < got.rows() && item.passed; ++i)
    for (int j = 0; j < got.cols() && item.passed; ++j)
      if (got.at(i, j) != expected.at(i, j)) {
        item.passed = false;
        item.detail = located(i, j, got.at(i, j), expected.at(i, j));
      }
  report.items.push_back(std::move(item));
}

}  // namespace

RatMatrix PiStructure::associated_metric_matrix() const {
  RatMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational acc = eta[i] * eta[j];
      for (int k = 0; k < dim; ++k) acc += g.at(i, k) * phi.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

CheckReport verify_axioms(const PiStructure& ps) {
  const int n = ps.dim;
  if (ps.g.rows() != n || ps.g.cols() != n || ps.phi.rows() != n || ps.phi.cols() != n ||
      static_cast<int>(ps.xi.size()) != n || static_cast<int>(ps.eta.size()) != n)
    throw InputError("structure field dimensions do not match dim = " + std::to_string(n));

  CheckReport report;

  {
    CheckItem item{"phi_xi_zero", true, ""};
    for (int i = 0; i < n && item.passed; ++i) {
      Rational acc = 0;
      for (int j = 0; j < n; ++j) acc += ps.phi.at(i, j) * ps.xi[j];
      if (acc != 0) {
        item.passed = false;
        item.detail = "(phi xi)^" + std::to_string(i + 1) + " = " + acc.str();
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    RatMatrix expected = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) expected.at(i, j) -= ps.xi[i] * ps.eta[j];
    check_matrix(report, "phi_squared", matmul(ps.phi, ps.phi), expected);
  }

  {
    CheckItem item{"eta_phi_zero", true, ""};
    for (int j = 0; j < n && item.passed; ++j) {
      Rational acc = 0;
      for (int i = 0; i < n; ++i) acc += ps.eta[i] * ps.phi.at(i, j);
      if (acc != 0) {
        item.passed = false;
        item.detail = "(eta o phi)_" + std::to_string(j + 1) + " = " + acc.str();
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    Rational acc = 0;
    for (int i = 0; i < n; ++i) acc += ps.eta[i] * ps.xi[i];
    report.items.push_back(
        {"eta_xi_one", acc == 1, acc == 1 ? "" : "eta(xi) = " + acc.str()});
  }

  {
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += ps.phi.at(i, i);
    report.items.push_back(
        {"trace_phi_zero", tr == 0, tr == 0 ? "" : "tr(phi) = " + tr.str()});
  }

  {
    // g(phi x, phi y) = g(x, y) - eta(x) eta(y): phi^T g phi = g - eta (x) eta
    RatMatrix phiT(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) phiT.at(i, j) = ps.phi.at(j, i);
    RatMatrix lhs = matmul(phiT, matmul(ps.g, ps.phi));
    RatMatrix rhs = ps.g;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rhs.at(i, j) -= ps.eta[i] * ps.eta[j];
    check_matrix(report, "metric_phi_compat", lhs, rhs);
  }

  // Derived identities (must follow from the axioms above; never fail alone).
  {
    RatMatrix gphi = matmul(ps.g, ps.phi);
    CheckItem item{"derived_g_phi_symmetric", true, ""};
    for (int i = 0; i < n && item.passed; ++i)
      for (int j = 0; j < n && item.passed; ++j)
        if (gphi.at(i, j) != gphi.at(j, i)) {
          item.passed = false;
          item.detail = located(i, j, gphi.at(i, j), gphi.at(j, i));
        }
    report.items.push_back(std::move(item));
  }

  {
    CheckItem item{"derived_g_xi_eta", true, ""};
    for (int i = 0; i < n && item.passed; ++i) {
      Rational acc = 0;
      for (int j = 0; j < n; ++j) acc += ps.g.at(i, j) * ps.xi[j];
      if (acc != ps.eta[i]) {
        item.passed = false;
        item.detail = "g(e_" + std::to_string(i + 1) + ", xi) = " + acc.str() + ", eta_" +
                      std::to_string(i + 1) + " = " + ps.eta[i].str();
      }
    }
    report.items.push_back(std::move(item));
  }

  {
    Rational acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += ps.xi[i] * ps.g.at(i, j) * ps.xi[j];
    report.items.push_back(
        {"derived_g_xi_xi_one", acc == 1, acc == 1 ? "" : "g(xi,xi) = " + acc.str()});
  }

  report.items.push_back({"g_positive_definite", positive_definite(ps.g), ""});

  return report;
}

AssociatedMetricResult associated_metric(const PiStructure& ps) {
  AssociatedMetricResult out;
  out.g_assoc = ps.associated_metric_matrix();
  out.signature = signature_of(out.g_assoc);
  out.signature_ok =
      out.signature == Signature{ps.n() + 1, ps.n(), 0};
  return out;
}

}  // namespace parasol
