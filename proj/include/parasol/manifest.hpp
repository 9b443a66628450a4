#ifndef PARASOL_MANIFEST_HPP
#define PARASOL_MANIFEST_HPP

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "parasol/linalg.hpp"

namespace parasol {

struct ExpectedValues {
  std::optional<std::string> tau;
  std::optional<std::string> tau_assoc;
  std::optional<std::array<std::string, 3>> einstein_fit;       // a, b, c
  std::optional<std::array<std::string, 3>> soliton_constants;  // lambda, mu, nu
};

/// Parsed instance description. Exactly one of structure_constants /
/// chart_frame is present; eta defaults to g*xi and g to the identity.
struct Manifest {
  int dim = 0;
  std::vector<std::string> parameters;
  std::optional<std::vector<std::tuple<int, int, int, Rational>>> structure_constants;
  std::optional<std::vector<std::vector<std::string>>> chart_frame;
  RatMatrix g;
  RatMatrix phi;
  std::vector<Rational> xi;
  std::vector<Rational> eta;
  std::optional<std::vector<std::string>> potential;
  std::optional<ExpectedValues> expected;

  static Manifest from_json(const nlohmann::json& j);
  static Manifest from_file(const std::string& path);
  static Manifest from_string(const std::string& text);
};

}  // namespace parasol

#endif
