#include "parasol/golden.hpp"

namespace parasol {

const char kGoldenManifestJson[] = R"json({
  "dim": 3,
  "parameters": ["c1", "c2", "c3"],
  "chart_frame": [
    ["cosh(x3)", "-sinh(x3)", "0"],
    ["-sinh(x3)", "cosh(x3)", "0"],
    ["0", "0", "1"]
  ],
  "g": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "phi": [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
  "xi": [0, 0, 1],
  "eta": [0, 0, 1],
  "potential": [
    "-(c1*cosh(x3) - c2*sinh(x3))*x1 + (c2*cosh(x3) - c1*sinh(x3))*x2 + sinh(x3)",
    "(c2*cosh(x3) - c1*sinh(x3))*x1 - (c1*cosh(x3) - c2*sinh(x3))*x2 + cosh(x3)",
    "c3"
  ],
  "expected": {
    "tau": "-2",
    "tau_assoc": "-2",
    "einstein_fit": ["0", "0", "-2"],
    "soliton_constants": ["c1", "-(c2+c3)", "-(c1-c2-c3-2)"]
  }
}
)json";

Manifest golden_manifest() { return Manifest::from_string(kGoldenManifestJson); }

}  // namespace parasol
