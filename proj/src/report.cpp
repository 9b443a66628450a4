#include "parasol/report.hpp"

#include <sstream>

namespace parasol {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

CheckStatus check_status_from_string(const std::string& text) {
  if (text == "pass") return CheckStatus::Pass;
  if (text == "fail") return CheckStatus::Fail;
  if (text == "skipped") return CheckStatus::Skipped;
  throw InputError("unknown check status '" + text + "'");
}

bool Report::all_passed() const {
  for (const auto& row : checks)
    if (row.status == CheckStatus::Fail) return false;
  return true;
}

void Report::add(const std::string& name, CheckStatus status, const std::string& detail) {
  checks.push_back({name, status, detail});
}

void Report::absorb(const std::string& prefix, const CheckReport& module_report) {
  if (module_report.skipped) {
    add(prefix, CheckStatus::Skipped, module_report.skip_reason);
    return;
  }
  for (const auto& item : module_report.items)
    add(prefix + "." + item.name, item.passed ? CheckStatus::Pass : CheckStatus::Fail,
        item.detail);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "parasol-report/1";
  j["command"] = command;
  j["seed"] = seed;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : checks) {
    nlohmann::ordered_json r;
    r["name"] = row.name;
    r["status"] = to_string(row.status);
    if (!row.detail.empty()) r["detail"] = row.detail;
    rows.push_back(std::move(r));
  }
  j["checks"] = std::move(rows);
  j["data"] = data;
  j["notes"] = notes;
  j["exit"] = exit_code();
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  if (!j.contains("schema") || j.at("schema").get<std::string>() != "parasol-report/1")
    throw InputError("unknown report schema");
  Report report;
  report.command = j.at("command").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& r : j.at("checks")) {
    CheckRow row;
    row.name = r.at("name").get<std::string>();
    row.status = check_status_from_string(r.at("status").get<std::string>());
    if (r.contains("detail")) row.detail = r.at("detail").get<std::string>();
    report.checks.push_back(std::move(row));
  }
  report.data = j.at("data");
  for (const auto& note : j.at("notes")) report.notes.push_back(note.get<std::string>());
  return report;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << command << " (seed " << seed << ") ==\n";
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& row : checks) {
    const char* tag = "????";
    switch (row.status) {
      case CheckStatus::Pass: tag = "PASS"; ++passed; break;
      case CheckStatus::Fail: tag = "FAIL"; ++failed; break;
      case CheckStatus::Skipped: tag = "SKIP"; ++skipped; break;
    }
    os << "[" << tag << "] " << row.name;
    if (!row.detail.empty()) os << " — " << row.detail;
    os << "\n";
  }
  if (!notes.empty()) {
    os << "notes:\n";
    for (const auto& note : notes) os << "  - " << note << "\n";
  }
  for (auto it = data.begin(); it != data.end(); ++it) {
    if (it.value().is_string())
      os << it.key() << " = " << it.value().get<std::string>() << "\n";
  }
  os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

bool Report::operator==(const Report& other) const {
  return to_json() == other.to_json();
}

}  // namespace parasol
