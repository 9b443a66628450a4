#ifndef PARASOL_ANALYZE_HPP
#define PARASOL_ANALYZE_HPP

#include <optional>

#include "parasol/manifest.hpp"
#include "parasol/report.hpp"
#include "parasol/soliton.hpp"

namespace parasol {

struct AnalyzeOptions {
  std::uint64_t seed = 0;
  bool debug_eval = false;
};

/// Frame-level view of a manifest after expression parsing and (when a chart
/// is given) commutator derivation.
struct Instance {
  SymbolTable symbols;
  StructureConstants sc{0};
  std::optional<ChartFrame> chart;
  PiStructure ps;
  std::optional<VectorField> potential;
};

/// Structural validation only: frame derivation, Lie algebra axioms,
/// structure axioms, associated-metric signature.
Report cmd_validate(const Manifest& manifest);

/// Full pipeline: connection, curvature, classification, and (when a
/// potential is present) the soliton solve and theorem checks.
Report cmd_analyze(const Manifest& manifest, const AnalyzeOptions& options = {});

/// Analyze the built-in reference instance and compare every computed value
/// against the frozen reference table. Exit code 0 iff everything matches.
Report cmd_paper_check(const AnalyzeOptions& options = {});

/// Reference-table comparison, exposed so tests can feed tampered inputs.
struct GoldenInputs {
  const SymbolTable& symbols;
  const PiStructure& ps;
  const StructureConstants& sc;
  const Connection& conn;
  const CurvatureData& cd;
  const EinsteinLikeFit& fit;
  const ExprMatrix& lie_g;
  const SolitonFit& soliton;
};

std::vector<CheckRow> golden_comparison(const GoldenInputs& in);

}  // namespace parasol

#endif
