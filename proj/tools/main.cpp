#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parasol/analyze.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 at least one check failed, 2 input error.
int emit(const parasol::Report& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parasol — exact-arithmetic analyzer for left-invariant almost paracontact "
               "almost paracomplex Riemannian structures and their Ricci-like solitons"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 0;
  bool debug_eval = false;
  std::string path;

  auto* validate = app.add_subcommand("validate", "structural validation of a manifest");
  validate->add_option("file", path, "manifest JSON file")->required();
  validate->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "full pipeline on a manifest");
  analyze->add_option("file", path, "manifest JSON file")->required();
  analyze->add_option("--seed", seed, "seed for the random sweeps (echoed in the report)");
  analyze->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--debug-eval", debug_eval,
                    "add approximate numeric evaluations (never affects verdicts)");

  auto* paper_check =
      app.add_subcommand("paper-check", "verify the built-in reference instance bit-exactly");
  paper_check->add_option("--seed", seed, "seed for the random sweeps");
  paper_check->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed())
      return emit(parasol::cmd_validate(parasol::Manifest::from_file(path)), format);
    if (analyze->parsed())
      return emit(parasol::cmd_analyze(parasol::Manifest::from_file(path),
                                       {seed, debug_eval}),
                  format);
    return emit(parasol::cmd_paper_check({seed, false}), format);
  } catch (const parasol::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
