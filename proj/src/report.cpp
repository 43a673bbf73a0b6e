#include "cuspg2/report.hpp"

#include <sstream>

namespace cuspg2::report {

std::string to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kRecorded:
      return "recorded";
  }
  return "fail";
}

InvariantReport check(std::string name, std::string lhs, std::string rhs, bool holds, nlohmann::ordered_json details) {
  return {std::move(name), holds ? Status::kPass : Status::kFail, std::move(lhs), std::move(rhs), std::move(details), 0};
}

InvariantReport recorded(std::string name, std::string value, nlohmann::ordered_json details) {
  return {std::move(name), Status::kRecorded, std::move(value), "", std::move(details), 0};
}

nlohmann::ordered_json to_json(const InvariantReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["details"] = r.details;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

std::string to_text(const InvariantReport& r, bool with_timing) {
  std::ostringstream os;
  os << '[' << to_string(r.status) << "] " << r.check << ": " << r.lhs;
  if (r.status != Status::kRecorded) os << (r.status == Status::kPass ? " == " : " != ") << r.rhs;
  if (with_timing) os << "  (" << r.timing_ms << " ms)";
  for (const auto& [key, value] : r.details.items())
    os << "\n    " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump());
  return os.str();
}

bool any_failed(const std::vector<InvariantReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::kFail) return true;
  return false;
}

void Recorder::add(InvariantReport r) {
  const auto now = std::chrono::steady_clock::now();
  r.timing_ms = std::chrono::duration<double, std::milli>(now - last_).count();
  last_ = now;
  reports_.push_back(std::move(r));
}

}  // namespace cuspg2::report
