#ifndef PARASOL_PI_STRUCTURE_HPP
#define PARASOL_PI_STRUCTURE_HPP

#include <string>
#include <vector>

#include "parasol/linalg.hpp"

namespace parasol {

/// One named exact check with an optional located counterexample.
struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool skipped = false;  // precondition not met, items empty
  std::string skip_reason;

  bool ok() const {
    if (skipped) return false;
    for (const auto& item : items)
      if (!item.passed) return false;
    return true;
  }
};

/// Frame components of the structure tensors. All entries are constant
/// rationals (left-invariance); phi.at(i,j) is the e_i-coefficient of phi(e_j).
struct PiStructure {
  int dim = 0;
  RatMatrix g;
  RatMatrix phi;
  std::vector<Rational> xi;
  std::vector<Rational> eta;

  int n() const { return (dim - 1) / 2; }

  /// g_assoc(i,j) = g(e_i, phi e_j) + eta_i eta_j.
  RatMatrix associated_metric_matrix() const;
};

/// Exact verification of the structure axioms plus the derived identities
/// (g phi symmetric, g xi = eta, g(xi,xi) = 1) and positive definiteness of g.
/// Throws InputError on inconsistent field dimensions.
CheckReport verify_axioms(const PiStructure& ps);

struct AssociatedMetricResult {
  RatMatrix g_assoc;
  Signature signature;
  bool signature_ok = false;  // must be (n+1, n)
};

AssociatedMetricResult associated_metric(const PiStructure& ps);

}  // namespace parasol

#endif
