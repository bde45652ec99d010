// gbd: command-line front end for the Groebner basis detection library.
//
// Exit codes: 0 yes / success, 1 no, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbd/gbd.h"
#include "run_report.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct CommandError {
  std::string message;
};

struct SystemDeleter {
  void operator()(gbd_system* s) const { gbd_system_free(s); }
};
struct PackingDeleter {
  void operator()(gbd_packing* p) const { gbd_packing_free(p); }
};
struct ReportDeleter {
  void operator()(gbd_report* r) const { gbd_report_free(r); }
};
using SystemPtr = std::unique_ptr<gbd_system, SystemDeleter>;
using PackingPtr = std::unique_ptr<gbd_packing, PackingDeleter>;
using ReportPtr = std::unique_ptr<gbd_report, ReportDeleter>;

void check(gbd_status status) {
  if (status != GBD_OK) throw CommandError{std::string(gbd_status_name(status)) + ": " + gbd_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{"cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SystemPtr parse_system(const std::string& text) {
  gbd_system* raw = nullptr;
  check(gbd_system_parse(text.c_str(), &raw));
  return SystemPtr(raw);
}

PackingPtr parse_packing(const std::string& text) {
  gbd_packing* raw = nullptr;
  check(gbd_packing_parse(text.c_str(), &raw));
  return PackingPtr(raw);
}

std::string system_text(const gbd_system* system) {
  char* raw = nullptr;
  check(gbd_system_to_text(system, &raw));
  std::string text(raw);
  gbd_string_free(raw);
  return text;
}

// What a subcommand produced: a verdict-bearing report or generated text.
struct Outcome {
  int exit_code = kExitYes;
  nlohmann::ordered_json result;
  std::string text;
};

Outcome from_report(gbd_report* raw) {
  ReportPtr report(raw);
  Outcome out;
  out.exit_code = gbd_report_verdict(report.get()) == 1 ? kExitYes : kExitNo;
  out.result = nlohmann::ordered_json::parse(gbd_report_json(report.get()));
  out.text = gbd_report_text(report.get());
  return out;
}

Outcome from_system(const char* operation, const gbd_system* system) {
  Outcome out;
  out.text = system_text(system);
  out.result = nlohmann::ordered_json{{"operation", operation},
                                      {"variables", gbd_system_num_vars(system)},
                                      {"polynomials", gbd_system_num_polys(system)},
                                      {"system", out.text}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner basis detection: decide whether a term order makes a polynomial set a Groebner basis"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t cap = 100000;
  std::uint64_t seed = 1;
  std::string output_path;
  app.add_flag("--json", json, "Print a JSON run report");
  app.add_option("--cap", cap, "Enumeration cap for exhaustive searches")->capture_default_str();
  app.add_option("--seed", seed, "Seed for random generators")->capture_default_str();
  app.add_option("-o,--output", output_path, "Write output to this file instead of stdout");

  std::string input_path;
  std::string mode = "zero-dim";
  auto* detect = app.add_subcommand("detect", "Search for a term order making the system a Groebner basis");
  detect->add_option("input", input_path, "Polynomial system file")->required();
  detect->add_option("--mode", mode, "zero-dim | sgbd | brute | brute-zero-dim")
      ->capture_default_str()
      ->check(CLI::IsMember({"zero-dim", "sgbd", "brute", "brute-zero-dim"}));

  std::string weights;
  auto* verify = app.add_subcommand("verify", "Test the Groebner basis property under a given weight order");
  verify->add_option("input", input_path, "Polynomial system file")->required();
  verify->add_option("--weights", weights, "Comma-separated positive rationals, one per variable")->required();

  std::size_t degree = 0;
  auto* gen = app.add_subcommand("gen", "Generate polynomial systems");
  gen->require_subcommand(1);
  auto* gen_pack = gen->add_subcommand("set-packing", "Encode a set packing instance as homogeneous polynomials");
  gen_pack->add_option("input", input_path, "Set packing file")->required();
  gen_pack->add_option("--degree", degree, "Target degree (default: size cap + 1)");
  std::size_t rand_vars = 2;
  std::size_t rand_polys = 3;
  std::size_t rand_terms = 3;
  std::uint32_t rand_exp = 3;
  auto* gen_random = gen->add_subcommand("random", "Random sparse system seeded with pure powers");
  gen_random->add_option("--vars", rand_vars)->capture_default_str();
  gen_random->add_option("--polys", rand_polys)->capture_default_str();
  gen_random->add_option("--terms", rand_terms, "Maximum terms per polynomial")->capture_default_str();
  gen_random->add_option("--max-exp", rand_exp)->capture_default_str();

  auto* elevate = app.add_subcommand("elevate", "Append every monomial of degree 2m+1 to a homogeneous system");
  elevate->add_option("input", input_path, "Polynomial system file")->required();
  elevate->add_option("--degree", degree, "Common degree m (default: inferred)");

  auto* pack_solve = app.add_subcommand("pack-solve", "Solve a set packing instance by exhaustion");
  pack_solve->add_option("input", input_path, "Set packing file")->required();

  std::string targets;
  auto* order_solve = app.add_subcommand("order-solve", "Find a weight order realizing chosen leading terms");
  order_solve->add_option("input", input_path, "Polynomial system file")->required();
  order_solve->add_option("--targets", targets, "Semicolon-separated monomials, one per polynomial")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  gbd::cli::RunReport report;
  for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);
  report.version = gbd_version();

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    std::string input;
    if (!input_path.empty()) {
      input = read_file(input_path);
      report.input_digest = gbd::cli::sha256_digest(input);
    }
    if (*detect) {
      static const std::map<std::string, gbd_mode> kModes = {{"zero-dim", GBD_MODE_ZERO_DIM},
                                                             {"sgbd", GBD_MODE_SGBD},
                                                             {"brute", GBD_MODE_BRUTE},
                                                             {"brute-zero-dim", GBD_MODE_BRUTE_ZERO_DIM}};
      SystemPtr system = parse_system(input);
      gbd_report* raw = nullptr;
      check(gbd_detect(system.get(), kModes.at(mode), cap, &raw));
      outcome = from_report(raw);
    } else if (*verify) {
      SystemPtr system = parse_system(input);
      gbd_report* raw = nullptr;
      check(gbd_verify(system.get(), weights.c_str(), &raw));
      outcome = from_report(raw);
    } else if (*order_solve) {
      SystemPtr system = parse_system(input);
      gbd_report* raw = nullptr;
      check(gbd_order_solve(system.get(), targets.c_str(), &raw));
      outcome = from_report(raw);
    } else if (*pack_solve) {
      PackingPtr packing = parse_packing(input);
      gbd_report* raw = nullptr;
      check(gbd_packing_solve(packing.get(), cap, &raw));
      outcome = from_report(raw);
    } else if (*elevate) {
      SystemPtr system = parse_system(input);
      gbd_system* raw = nullptr;
      check(gbd_elevate(system.get(), degree, &raw));
      SystemPtr lifted(raw);
      outcome = from_system("elevate", lifted.get());
    } else if (*gen_pack) {
      PackingPtr packing = parse_packing(input);
      gbd_system* raw = nullptr;
      check(gbd_packing_encode(packing.get(), degree, &raw));
      SystemPtr encoded(raw);
      outcome = from_system("gen-set-packing", encoded.get());
    } else if (*gen_random) {
      gbd_system* raw = nullptr;
      check(gbd_system_random(rand_vars, rand_polys, rand_terms, rand_exp, seed, &raw));
      SystemPtr generated(raw);
      outcome = from_system("gen-random", generated.get());
    }
  } catch (const CommandError& e) {
    outcome.exit_code = kExitError;
    outcome.result = nullptr;
    outcome.text.clear();
    report.error = e.message;
    std::cerr << "error: " << e.message << '\n';
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.exit_code = outcome.exit_code;
  report.result = outcome.result;

  std::string rendered;
  if (json) {
    nlohmann::ordered_json j = report;
    rendered = j.dump(2) + "\n";
  } else {
    rendered = outcome.text;
  }
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out || !(out << rendered)) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return kExitError;
    }
  } else {
    std::cout << rendered;
  }
  return outcome.exit_code;
}
