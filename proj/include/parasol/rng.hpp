#ifndef PARASOL_RNG_HPP
#define PARASOL_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "parasol/rational.hpp"

namespace parasol {

/// Deterministic generator for the seeded sweeps; mt19937_64 has a fixed
/// cross-platform sequence, so reports stay byte-identical for a given seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi) {
    return static_cast<int>(lo + engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Numerator in [-9, 9], denominator in [1, 9].
  Rational small_rational() {
    return Rational(uniform_int(-9, 9), uniform_int(1, 9));
  }

  Rational nonzero_small_rational() {
    for (;;) {
      Rational q = small_rational();
      if (q != 0) return q;
    }
  }

  std::vector<Rational> rational_vector(int dim) {
    std::vector<Rational> v(dim);
    for (auto& q : v) q = small_rational();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace parasol

#endif
