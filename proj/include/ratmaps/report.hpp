#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ratmaps {

enum class CheckStatus { Pass, Fail, Skip };

const char* status_name(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;
};

/// Structured verdict of a verification routine.
struct Report {
  std::string name;
  std::vector<Check> checks;
  /// Named computed values (printed canonically).
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> notes;
  /// Set when independently computed sides contradict each other.
  bool alarm = false;

  void add(std::string check, bool ok, std::string detail = {});
  void skip(std::string check, std::string detail);
  void value(std::string key, std::string v);
  void note(std::string text) { notes.push_back(std::move(text)); }

  /// True when no check failed and no alarm was raised.
  bool ok() const;
  const Check* find(const std::string& check) const;
  CheckStatus status_of(const std::string& check) const;

  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

}  // namespace ratmaps
