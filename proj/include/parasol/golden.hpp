#ifndef PARASOL_GOLDEN_HPP
#define PARASOL_GOLDEN_HPP

#include "parasol/manifest.hpp"

namespace parasol {

/// Built-in reference instance: the 3-dimensional solvable Lie group with the
/// hyperbolic chart frame, identity frame metric, phi swapping e1/e2, xi = e3,
/// and the three-parameter potential. Shipped verbatim as
/// manifests/paper_example.json.
extern const char kGoldenManifestJson[];

Manifest golden_manifest();

}  // namespace parasol

#endif
