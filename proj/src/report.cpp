#include "ratmaps/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "ratmaps/error.hpp"

namespace ratmaps {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "skip";
}

void Report::add(std::string check, bool ok, std::string detail) {
  checks.push_back({std::move(check), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::skip(std::string check, std::string detail) {
  checks.push_back({std::move(check), CheckStatus::Skip, std::move(detail)});
}

void Report::value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }

bool Report::ok() const {
  return !alarm && std::none_of(checks.begin(), checks.end(),
                                [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* Report::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return &c;
  return nullptr;
}

CheckStatus Report::status_of(const std::string& check) const {
  const Check* c = find(check);
  require(c != nullptr, ErrorCode::InvalidArgument, "report has no check '" + check + "'");
  return c->status;
}

std::string Report::to_text() const {
  std::string out = name + ": " + (ok() ? "ok" : "not ok") + "\n";
  for (const auto& c : checks) {
    out += "  [" + std::string(status_name(c.status)) + "] " + c.name;
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += '\n';
  }
  for (const auto& [k, v] : values) out += "  " + k + " = " + v + '\n';
  for (const auto& n : notes) out += "  note: " + n + '\n';
  if (alarm) out += "  ALARM: independent computations disagree\n";
  return out;
}

std::string Report::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["report"] = name;
  j["ok"] = ok();
  j["alarm"] = alarm;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) j["values"][k] = v;
  j["notes"] = notes;
  return j.dump(indent);
}

}  // namespace ratmaps
