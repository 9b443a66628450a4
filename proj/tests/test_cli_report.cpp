#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace parasol;
using namespace parasol::testing;

namespace {

std::string golden_text() { return kGoldenManifestJson; }

nlohmann::json golden_json() { return nlohmann::json::parse(golden_text()); }

bool has_row(const Report& report, const std::string& name, CheckStatus status) {
  for (const auto& row : report.checks)
    if (row.name == name && row.status == status) return true;
  return false;
}

}  // namespace

TEST_CASE("manifest schema: exactly one source of structure constants") {
  auto j = golden_json();
  j["structure_constants"] = nlohmann::json::array();
  CHECK_THROWS_WITH_AS(Manifest::from_json(j), doctest::Contains("exactly one"), InputError);
  j.erase("structure_constants");
  j.erase("chart_frame");
  CHECK_THROWS_WITH_AS(Manifest::from_json(j), doctest::Contains("exactly one"), InputError);
}

TEST_CASE("manifest schema: dimension and field validation") {
  auto j = golden_json();
  j["dim"] = 4;
  CHECK_THROWS_AS(Manifest::from_json(j), InputError);
  j = golden_json();
  j["xi"] = {0, 0};
  CHECK_THROWS_AS(Manifest::from_json(j), InputError);
  j = golden_json();
  j["phi"][0][0] = "not-a-number";
  CHECK_THROWS_AS(Manifest::from_json(j), InputError);
  j = golden_json();
  j.erase("phi");
  CHECK_THROWS_WITH_AS(Manifest::from_json(j), doctest::Contains("phi"), InputError);
}

TEST_CASE("manifest defaults: g identity, eta = g xi") {
  auto j = golden_json();
  j.erase("g");
  j.erase("eta");
  Manifest m = Manifest::from_json(j);
  CHECK(m.g == RatMatrix::identity(3));
  CHECK(m.eta == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("undeclared symbols in expressions are named in the error") {
  auto j = golden_json();
  j["potential"][2] = "c9";
  CHECK_THROWS_WITH_AS(cmd_analyze(Manifest::from_json(j)), doctest::Contains("c9"),
                       InputError);
}

TEST_CASE("duplicate structure-constant triples are rejected") {
  auto j = golden_json();
  j.erase("chart_frame");
  j.erase("potential");
  j.erase("expected");
  j["structure_constants"] = {{1, 2, 3, "1"}, {1, 2, 3, "1"}};
  CHECK_THROWS_WITH_AS(cmd_analyze(Manifest::from_json(j)), doctest::Contains("duplicate"),
                       InputError);
}

TEST_CASE("antisymmetric partners are filled in, explicit violations kept") {
  auto j = golden_json();
  j.erase("chart_frame");
  j.erase("potential");
  j.erase("expected");
  j["structure_constants"] = {{1, 2, 3, "1"}};
  Report auto_completed = cmd_analyze(Manifest::from_json(j));
  CHECK(has_row(auto_completed, "lie.antisymmetry", CheckStatus::Pass));

  j["structure_constants"] = {{1, 2, 3, "1"}, {2, 1, 3, "1"}};
  Report violating = cmd_analyze(Manifest::from_json(j));
  CHECK(has_row(violating, "lie.antisymmetry", CheckStatus::Fail));
}

TEST_CASE("validate runs the structural stages only") {
  Report report = cmd_validate(golden_manifest());
  CHECK(report.all_passed());
  CHECK(has_row(report, "structure.assoc_signature", CheckStatus::Pass));
  for (const auto& row : report.checks) {
    CHECK(row.name.rfind("connection", 0) != 0);
    CHECK(row.name.rfind("soliton", 0) != 0);
  }
}

TEST_CASE("broken axiom is reported by name through the CLI path") {
  auto j = golden_json();
  j["phi"] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};  // trace 2
  j.erase("potential");
  j.erase("expected");
  Report report = cmd_validate(Manifest::from_json(j));
  CHECK(!report.all_passed());
  CHECK(has_row(report, "structure.trace_phi_zero", CheckStatus::Fail));
}

TEST_CASE("analyze on the reference manifest passes everything") {
  Report report = cmd_analyze(golden_manifest());
  CHECK(report.all_passed());
  CHECK(has_row(report, "para_sasaki_like.defining_identity", CheckStatus::Pass));
  CHECK(has_row(report, "thm31.sum_identity", CheckStatus::Pass));
  CHECK(has_row(report, "expected.soliton_constants", CheckStatus::Pass));
  CHECK(report.data.at("tau").get<std::string>() == "-2");
  CHECK(report.data.at("einstein_fit").at("kind").get<std::string>() == "eta-Einstein");
  CHECK(report.data.at("soliton_fit").at("lambda").get<std::string>() == "c1");
}

TEST_CASE("analyze on an abelian manifest: not para-Sasaki-like, Einstein fit") {
  auto j = golden_json();
  j.erase("chart_frame");
  j.erase("potential");
  j.erase("expected");
  j["structure_constants"] = nlohmann::json::array();
  Report report = cmd_analyze(Manifest::from_json(j));
  CHECK(has_row(report, "para_sasaki_like.defining_identity", CheckStatus::Fail));
  CHECK(has_row(report, "identity.curvature_phi", CheckStatus::Skipped));
  CHECK(report.data.at("einstein_fit").at("kind").get<std::string>() == "Einstein");
  CHECK(report.data.at("einstein_fit").at("a").get<std::string>() == "0");
}

TEST_CASE("reports are deterministic for a fixed seed and stable across seeds") {
  Report a = cmd_analyze(golden_manifest(), {0, false});
  Report b = cmd_analyze(golden_manifest(), {0, false});
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));

  Report c = cmd_analyze(golden_manifest(), {12345, false});
  CHECK(c.seed == 12345);
  CHECK(c.all_passed());
  CHECK(c.to_json().at("seed").get<std::uint64_t>() == 12345);
}

TEST_CASE("report JSON round-trips") {
  Report report = cmd_analyze(golden_manifest());
  Report back = Report::from_json(report.to_json());
  CHECK(back == report);
  CHECK(back.to_json().dump() == report.to_json().dump());
}

TEST_CASE("paper-check passes and carries the reference notes") {
  Report report = cmd_paper_check();
  CHECK(report.all_passed());
  CHECK(report.exit_code() == 0);
  CHECK(has_row(report, "golden.commutators", CheckStatus::Pass));
  CHECK(has_row(report, "golden.riemann", CheckStatus::Pass));
  CHECK(has_row(report, "golden.soliton_constants", CheckStatus::Pass));
  bool e0_note = false;
  for (const auto& note : report.notes)
    if (note.find("e0") != std::string::npos) e0_note = true;
  CHECK(e0_note);
}

TEST_CASE("golden comparison flags a flipped curvature sign") {
  auto chart = golden_chart();
  auto ps = golden_structure();
  auto sc = golden_constants();
  auto conn = levi_civita(sc, ps.g);
  auto g_assoc = ps.associated_metric_matrix();
  auto cd = ricci_and_scalars(riemann(conn, sc, ps.g), ps.g, g_assoc, ps.phi);
  auto fit = fit_einstein_like(cd.ricci, ps.g, g_assoc, ps.eta);
  auto v = golden_potential(chart.symbols);
  auto lie_g = lie_derivative_metric(conn, &chart, v, ps.g);
  auto soliton = solve_soliton_constants(cd.ricci, lie_g, ps.g, g_assoc, ps.eta);

  CurvatureData flipped = cd;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) flipped.riem.at(i, j, k, l) = -cd.riem.at(i, j, k, l);

  GoldenInputs tampered{chart.symbols, ps, sc, conn, flipped, fit, lie_g, soliton};
  auto rows = golden_comparison(tampered);
  bool mismatch = false;
  for (const auto& row : rows)
    if (row.name == "golden.riemann" && row.status == CheckStatus::Fail &&
        row.detail.find("R(") != std::string::npos)
      mismatch = true;
  CHECK(mismatch);

  GoldenInputs clean{chart.symbols, ps, sc, conn, cd, fit, lie_g, soliton};
  for (const auto& row : golden_comparison(clean)) CHECK(row.status == CheckStatus::Pass);
}

TEST_CASE("shipped manifest file matches the embedded reference instance") {
  std::ifstream in(std::string(PARASOL_SOURCE_DIR) + "/manifests/paper_example.json");
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == golden_text());
}

TEST_CASE("debug evaluation appears only under the flag and never changes verdicts") {
  Report plain = cmd_analyze(golden_manifest(), {0, false});
  CHECK(!plain.data.contains("debug_eval"));
  Report dbg = cmd_analyze(golden_manifest(), {0, true});
  REQUIRE(dbg.data.contains("debug_eval"));
  // potential at x = 0, c = 1: v = (0, 1, 1); lambda = c1 = 1.
  CHECK(dbg.data.at("debug_eval").at("lambda_at_sample").get<std::string>() == "1");
  CHECK(dbg.all_passed() == plain.all_passed());
}
