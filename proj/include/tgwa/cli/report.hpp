#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tgwa/exact/check_report.hpp"

namespace tgwa::cli {

constexpr int schema_version = 1;

struct RunReport {
  std::vector<std::string> command;  // the argument vector after the program name
  std::vector<CheckReport> checks;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::optional<std::string> error;
  std::optional<double> elapsed_ms;  // only with --timing

  Status status() const;
  bool passed() const { return !error && status() == Status::pass; }
};

nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const RunReport& r);
// The same data as to_json in plain text.
std::string to_text(const RunReport& r);

}  // namespace tgwa::cli
