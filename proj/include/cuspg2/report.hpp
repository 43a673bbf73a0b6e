#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace cuspg2::report {

/// pass/fail compare two exact serializations; recorded publishes a derived value.
enum class Status { kPass, kFail, kRecorded };
std::string to_string(Status status);

struct InvariantReport {
  std::string check;
  Status status = Status::kRecorded;
  std::string lhs;
  std::string rhs;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double timing_ms = 0;
};

/// pass iff `holds`; lhs/rhs are the exact serializations that were compared.
InvariantReport check(std::string name, std::string lhs, std::string rhs, bool holds,
                      nlohmann::ordered_json details = nlohmann::ordered_json::object());
InvariantReport recorded(std::string name, std::string value,
                         nlohmann::ordered_json details = nlohmann::ordered_json::object());

/// {check, status, lhs, rhs, details} plus timing_ms when requested.
nlohmann::ordered_json to_json(const InvariantReport& r, bool with_timing = false);
/// One human-readable line (details follow indented, one key per line).
std::string to_text(const InvariantReport& r, bool with_timing = false);

bool any_failed(const std::vector<InvariantReport>& reports);

/// Collects reports and stamps each with the time elapsed since the previous one.
class Recorder {
 public:
  Recorder() : last_(std::chrono::steady_clock::now()) {}
  void add(InvariantReport r);
  /// Restarts the clock (call before a check whose setup should not be attributed elsewhere).
  void restart() { last_ = std::chrono::steady_clock::now(); }
  std::vector<InvariantReport>& reports() { return reports_; }
  std::vector<InvariantReport> take() { return std::move(reports_); }

 private:
  std::chrono::steady_clock::time_point last_;
  std::vector<InvariantReport> reports_;
};

}  // namespace cuspg2::report
