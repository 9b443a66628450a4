#ifndef PARASOL_REPORT_HPP
#define PARASOL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "parasol/pi_structure.hpp"

namespace parasol {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);
CheckStatus check_status_from_string(const std::string& text);

struct CheckRow {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  bool operator==(const CheckRow&) const = default;
};

/// Deterministic machine-readable result: same manifest + seed gives a
/// byte-identical JSON serialization.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckRow> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  bool all_passed() const;
  int exit_code() const { return all_passed() ? 0 : 1; }

  void add(const std::string& name, CheckStatus status, const std::string& detail = "");
  /// Appends every item of a module-level report under `prefix.`.
  void absorb(const std::string& prefix, const CheckReport& module_report);

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
  std::string to_text() const;

  bool operator==(const Report& other) const;
};

}  // namespace parasol

#endif
