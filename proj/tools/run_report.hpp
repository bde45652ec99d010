#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gbd::cli {

/// Envelope printed by `gbd --json`: what was run, on which input, and the
/// operation's own report under "result".
struct RunReport {
  std::vector<std::string> command;
  std::string input_digest;  // "sha256:<hex>" of the input file, empty if none
  std::string version;
  double wall_time_ms = 0.0;
  int exit_code = 0;
  nlohmann::ordered_json result;  // null when the command failed
  std::optional<std::string> error;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(nlohmann::ordered_json& j, const RunReport& report);
void from_json(const nlohmann::ordered_json& j, RunReport& report);

std::string sha256_digest(std::string_view data);

}  // namespace gbd::cli
