#include "run_report.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace gbd::cli {

void to_json(nlohmann::ordered_json& j, const RunReport& report) {
  j = nlohmann::ordered_json{
      {"command", report.command},
      {"input_digest", report.input_digest},
      {"version", report.version},
      {"wall_time_ms", report.wall_time_ms},
      {"exit_code", report.exit_code},
      {"result", report.result},
      {"error", report.error ? nlohmann::ordered_json(*report.error) : nlohmann::ordered_json(nullptr)},
  };
}

void from_json(const nlohmann::ordered_json& j, RunReport& report) {
  j.at("command").get_to(report.command);
  j.at("input_digest").get_to(report.input_digest);
  j.at("version").get_to(report.version);
  j.at("wall_time_ms").get_to(report.wall_time_ms);
  j.at("exit_code").get_to(report.exit_code);
  report.result = j.at("result");
  const auto& error = j.at("error");
  report.error = error.is_null() ? std::nullopt : std::optional<std::string>(error.get<std::string>());
}

std::string sha256_digest(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

}  // namespace gbd::cli
