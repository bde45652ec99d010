/* capi.cpp
 *
 * extern "C" wrappers over the C++ core. Exceptions never cross this
 * boundary: each entry point maps them to a gbd_status and records the
 * message for gbd_last_error().
 */

#include "gbd/gbd.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gbd/detector.hpp"
#include "gbd/errors.hpp"
#include "gbd/gb_engine.hpp"
#include "gbd/generators.hpp"
#include "gbd/order_solver.hpp"
#include "gbd/poly_system.hpp"
#include "gbd/reductions.hpp"
#include "gbd/version.hpp"

struct gbd_system {
  gbd::PolySystem system;
};

struct gbd_packing {
  gbd::SetPackingInstance instance;
};

struct gbd_report {
  int verdict = 0;
  std::string json;
  std::string text;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

template <class F>
gbd_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gbd::ParseError& e) {
    last_error = e.what();
    return GBD_ERR_PARSE;
  } catch (const gbd::CapExceeded& e) {
    last_error = e.what();
    return GBD_ERR_CAP_EXCEEDED;
  } catch (const gbd::InternalError& e) {
    last_error = e.what();
    return GBD_ERR_INTERNAL;
  } catch (const gbd::Error& e) {
    last_error = e.what();
    return GBD_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GBD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GBD_ERR_INTERNAL;
  }
}

gbd_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return GBD_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

ordered_json weights_json(const gbd::WeightOrder& ord) {
  ordered_json exact = ordered_json::array();
  ordered_json integral = ordered_json::array();
  for (const auto& w : ord.weights()) exact.push_back(gbd::to_string(w));
  for (const auto& w : ord.integer_weights()) integral.push_back(gbd::to_string(w));
  return ordered_json{{"weights", exact}, {"integer_weights", integral}};
}

std::string join_integer_weights(const gbd::WeightOrder& ord) {
  std::string out;
  for (const auto& w : ord.integer_weights()) out += (out.empty() ? "" : " ") + gbd::to_string(w);
  return out;
}

ordered_json monomials_json(const std::vector<gbd::Monomial>& monos, std::span<const std::string> names) {
  ordered_json out = ordered_json::array();
  for (const auto& m : monos) out.push_back(gbd::format_monomial(m, names));
  return out;
}

std::string join(const ordered_json& strings, const char* sep) {
  std::string out;
  for (const auto& s : strings) {
    if (!out.empty()) out += sep;
    out += s.get<std::string>();
  }
  return out;
}

const char* mode_name(gbd_mode mode) {
  switch (mode) {
    case GBD_MODE_ZERO_DIM: return "zero-dim";
    case GBD_MODE_SGBD: return "sgbd";
    case GBD_MODE_BRUTE: return "brute";
    case GBD_MODE_BRUTE_ZERO_DIM: return "brute-zero-dim";
  }
  return "unknown";
}

gbd_report* make_report(bool verdict, const ordered_json& json, std::string text) {
  auto* report = new gbd_report;
  report->verdict = verdict ? 1 : 0;
  report->json = json.dump();
  report->text = std::move(text);
  return report;
}

}  // namespace

extern "C" {

const char* gbd_version(void) { return GBD_VERSION_STRING; }

const char* gbd_status_name(gbd_status status) {
  switch (status) {
    case GBD_OK: return "ok";
    case GBD_ERR_NULL_ARGUMENT: return "null argument";
    case GBD_ERR_PARSE: return "parse error";
    case GBD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GBD_ERR_CAP_EXCEEDED: return "cap exceeded";
    case GBD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gbd_last_error(void) { return last_error.c_str(); }

void gbd_string_free(char* s) { std::free(s); }

gbd_status gbd_system_parse(const char* text, gbd_system** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new gbd_system{gbd::parse_system(text)};
    return GBD_OK;
  });
}

void gbd_system_free(gbd_system* system) { delete system; }

size_t gbd_system_num_vars(const gbd_system* system) { return system ? system->system.dimension() : 0; }

size_t gbd_system_num_polys(const gbd_system* system) { return system ? system->system.size() : 0; }

gbd_status gbd_system_to_text(const gbd_system* system, char** out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = dup_string(gbd::format_system(system->system));
    return GBD_OK;
  });
}

gbd_status gbd_system_random(size_t vars, size_t polys, size_t max_terms, uint32_t max_exponent, uint64_t seed,
                             gbd_system** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    gbd::RandomSystemShape shape;
    shape.vars = vars;
    shape.polys = polys;
    shape.max_terms = max_terms;
    shape.max_exponent = max_exponent;
    std::mt19937_64 rng(seed);
    *out = new gbd_system{gbd::random_system(shape, rng)};
    return GBD_OK;
  });
}

gbd_status gbd_detect(const gbd_system* system, gbd_mode mode, uint64_t cap, gbd_report** out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded([&] {
    const gbd::PolySystem& sys = system->system;
    gbd::DetectionResult result;
    switch (mode) {
      case GBD_MODE_ZERO_DIM: result = gbd::detect_gbd_zero_dim(sys); break;
      case GBD_MODE_SGBD: result = gbd::detect_sgbd(sys, cap); break;
      case GBD_MODE_BRUTE: result = gbd::detect_gbd_bruteforce(sys, false, cap); break;
      case GBD_MODE_BRUTE_ZERO_DIM: result = gbd::detect_gbd_bruteforce(sys, true, cap); break;
      default: throw gbd::InvalidArgument("unknown detection mode");
    }
    ordered_json j;
    j["operation"] = "detect";
    j["mode"] = mode_name(mode);
    j["verdict"] = result.yes() ? "yes" : "no";
    j["witness"] = result.witness ? weights_json(*result.witness) : ordered_json(nullptr);
    j["leading_terms"] =
        result.leading_terms ? monomials_json(*result.leading_terms, sys.var_names()) : ordered_json(nullptr);
    j["zero_dimensional"] = result.zero_dimensional ? ordered_json(*result.zero_dimensional) : ordered_json(nullptr);
    j["subsets_examined"] = result.subsets_examined;
    j["diagnostics"] = result.diagnostics;

    std::ostringstream text;
    text << "verdict: " << (result.yes() ? "yes" : "no") << '\n';
    if (result.witness) {
      text << "weights: " << join_integer_weights(*result.witness) << '\n';
      text << "leading terms: " << join(j["leading_terms"], ", ") << '\n';
      text << "zero-dimensional: " << (*result.zero_dimensional ? "yes" : "no") << '\n';
    }
    text << "subsets examined: " << result.subsets_examined << '\n';
    *out = make_report(result.yes(), j, text.str());
    return GBD_OK;
  });
}

gbd_status gbd_verify(const gbd_system* system, const char* weights, gbd_report** out) {
  if (!system) return null_argument("system");
  if (!weights) return null_argument("weights");
  if (!out) return null_argument("out");
  return guarded([&] {
    const gbd::PolySystem& sys = system->system;
    std::vector<gbd::Rational> parsed;
    for (std::string_view part : split(weights, ',')) parsed.push_back(gbd::parse_rational(part));
    if (parsed.size() != sys.dimension()) {
      throw gbd::InvalidArgument("expected " + std::to_string(sys.dimension()) + " weights, got " +
                                 std::to_string(parsed.size()));
    }
    gbd::WeightOrder ord(std::move(parsed));
    std::span<const gbd::Polynomial> polys(sys.polys());
    gbd::GbCertificate cert = gbd::is_groebner_basis(polys, ord);
    gbd::ZeroDimWitness zd = gbd::is_zero_dimensional_lt(polys, ord);
    std::vector<gbd::Monomial> lts;
    for (const auto& f : polys) lts.push_back(gbd::leading_term(ord, f).mono);

    ordered_json j;
    j["operation"] = "verify";
    j["verdict"] = cert.is_basis ? "yes" : "no";
    j.update(weights_json(ord));
    j["leading_terms"] = monomials_json(lts, sys.var_names());
    j["groebner_basis"] = cert.is_basis;
    j["failing_pair"] = cert.failing_pair
                            ? ordered_json::array({cert.failing_pair->first + 1, cert.failing_pair->second + 1})
                            : ordered_json(nullptr);
    j["remainder"] =
        cert.remainder ? ordered_json(gbd::format_polynomial(*cert.remainder, sys.var_names())) : ordered_json(nullptr);
    j["zero_dimensional"] = zd.zero_dimensional;
    j["unit_ideal"] = zd.unit_ideal;
    ordered_json witness = ordered_json::array();
    for (const auto& w : zd.witness) witness.push_back(w ? ordered_json(*w + 1) : ordered_json(nullptr));
    j["zero_dim_witness"] = witness;

    std::ostringstream text;
    text << "groebner basis: " << (cert.is_basis ? "yes" : "no") << '\n';
    if (cert.failing_pair) {
      text << "failing pair: " << cert.failing_pair->first + 1 << ' ' << cert.failing_pair->second + 1 << '\n';
      text << "remainder: " << j["remainder"].get<std::string>() << '\n';
    }
    text << "zero-dimensional: " << (zd.zero_dimensional ? "yes" : "no") << (zd.unit_ideal ? " (unit ideal)" : "")
         << '\n';
    text << "leading terms: " << join(j["leading_terms"], ", ") << '\n';
    *out = make_report(cert.is_basis, j, text.str());
    return GBD_OK;
  });
}

gbd_status gbd_order_solve(const gbd_system* system, const char* targets, gbd_report** out) {
  if (!system) return null_argument("system");
  if (!targets) return null_argument("targets");
  if (!out) return null_argument("out");
  return guarded([&] {
    const gbd::PolySystem& sys = system->system;
    auto parts = split(targets, ';');
    if (parts.size() != sys.size()) {
      throw gbd::InvalidArgument("expected " + std::to_string(sys.size()) + " targets, got " +
                                 std::to_string(parts.size()));
    }
    gbd::TargetSelection selection;
    std::vector<gbd::Monomial> monos;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      gbd::Monomial m = gbd::parse_monomial(parts[i], sys.var_names());
      auto index = sys[i].find(m);
      if (!index) {
        throw gbd::InvalidArgument("target '" + std::string(parts[i]) + "' is not in the support of polynomial " +
                                   std::to_string(i + 1));
      }
      selection.targets.push_back(*index);
      monos.push_back(std::move(m));
    }
    const std::size_t rows = gbd::build_gamma(sys.polys(), selection).rows.size();
    auto ord = gbd::realize_leading_terms(sys.polys(), selection);

    ordered_json j;
    j["operation"] = "order-solve";
    j["verdict"] = ord ? "yes" : "no";
    j["targets"] = monomials_json(monos, sys.var_names());
    j["gamma_rows"] = rows;
    j["witness"] = ord ? weights_json(*ord) : ordered_json(nullptr);

    std::ostringstream text;
    text << "feasible: " << (ord ? "yes" : "no") << '\n';
    if (ord) text << "weights: " << join_integer_weights(*ord) << '\n';
    *out = make_report(ord.has_value(), j, text.str());
    return GBD_OK;
  });
}

gbd_status gbd_elevate(const gbd_system* system, size_t degree, gbd_system** out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded([&] {
    const gbd::PolySystem& sys = system->system;
    std::size_t m = degree;
    if (m == 0) {
      if (sys.size() == 0) throw gbd::InvalidArgument("cannot infer the degree of an empty system");
      auto d = sys[0].homogeneous_degree();
      if (!d || *d == 0) throw gbd::InvalidArgument("polynomial 1 is not homogeneous of positive degree");
      m = static_cast<std::size_t>(*d);
    }
    *out = new gbd_system{gbd::elevate_to_zero_dim(sys, m)};
    return GBD_OK;
  });
}

gbd_status gbd_packing_parse(const char* text, gbd_packing** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new gbd_packing{gbd::parse_set_packing(text)};
    return GBD_OK;
  });
}

void gbd_packing_free(gbd_packing* packing) { delete packing; }

gbd_status gbd_packing_encode(const gbd_packing* packing, size_t degree, gbd_system** out) {
  if (!packing) return null_argument("packing");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::size_t m = degree == 0 ? packing->instance.size_cap + 1 : degree;
    *out = new gbd_system{gbd::encode_set_packing(packing->instance, m).system};
    return GBD_OK;
  });
}

gbd_status gbd_packing_solve(const gbd_packing* packing, uint64_t cap, gbd_report** out) {
  if (!packing) return null_argument("packing");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& inst = packing->instance;
    gbd::PackingSolution sol = gbd::solve_set_packing_bruteforce(inst, cap);
    ordered_json j;
    j["operation"] = "pack-solve";
    j["verdict"] = sol.yes ? "yes" : "no";
    ordered_json chosen = nullptr;
    ordered_json sets = nullptr;
    std::string chosen_text;
    if (sol.yes) {
      chosen = ordered_json::array();
      sets = ordered_json::array();
      for (std::size_t idx : sol.chosen) {
        chosen.push_back(idx + 1);
        sets.push_back(inst.sets[idx]);
        chosen_text += (chosen_text.empty() ? "" : " ") + std::to_string(idx + 1);
      }
    }
    j["chosen"] = chosen;
    j["chosen_sets"] = sets;
    j["combinations_examined"] = sol.combinations_examined;

    std::string text = std::string("verdict: ") + (sol.yes ? "yes" : "no") + "\n";
    if (sol.yes) text += "chosen: " + chosen_text + "\n";
    *out = make_report(sol.yes, j, text);
    return GBD_OK;
  });
}

int gbd_report_verdict(const gbd_report* report) { return report ? report->verdict : -1; }

const char* gbd_report_json(const gbd_report* report) { return report ? report->json.c_str() : ""; }

const char* gbd_report_text(const gbd_report* report) { return report ? report->text.c_str() : ""; }

void gbd_report_free(gbd_report* report) { delete report; }

}  // extern "C"
