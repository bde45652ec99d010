#include <doctest.h>

#include <json.hpp>
#include <string>

#include "gbd/gbd.h"

namespace {

gbd_system* parse(const char* text) {
  gbd_system* s = nullptr;
  REQUIRE(gbd_system_parse(text, &s) == GBD_OK);
  return s;
}

nlohmann::json report_json(const gbd_report* r) { return nlohmann::json::parse(gbd_report_json(r)); }

}  // namespace

TEST_CASE("C API: parse, print, free") {
  gbd_system* s = parse("vars x y\n2/4*x^2 + x*y\ny^2\n");
  CHECK(gbd_system_num_vars(s) == 2);
  CHECK(gbd_system_num_polys(s) == 2);
  char* text = nullptr;
  REQUIRE(gbd_system_to_text(s, &text) == GBD_OK);
  CHECK(std::string(text) == "vars x y\n1/2*x^2 + x*y\ny^2\n");
  gbd_string_free(text);
  gbd_system_free(s);
  gbd_system_free(nullptr);

  gbd_system* bad = nullptr;
  CHECK(gbd_system_parse("vars x\nx^-1", &bad) == GBD_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(gbd_last_error()).find("line 2") != std::string::npos);
  CHECK(gbd_system_parse(nullptr, &bad) == GBD_ERR_NULL_ARGUMENT);
  CHECK(std::string(gbd_status_name(GBD_ERR_CAP_EXCEEDED)) == "cap exceeded");
  CHECK(std::string(gbd_version()) == "0.1.0");
}

TEST_CASE("C API: detection modes") {
  gbd_system* s = parse("vars x y\nx^2 + x*y\ny^2\n");
  for (gbd_mode mode : {GBD_MODE_ZERO_DIM, GBD_MODE_SGBD, GBD_MODE_BRUTE, GBD_MODE_BRUTE_ZERO_DIM}) {
    gbd_report* r = nullptr;
    REQUIRE(gbd_detect(s, mode, 100000, &r) == GBD_OK);
    CHECK(gbd_report_verdict(r) == 1);
    auto j = report_json(r);
    CHECK(j["verdict"] == "yes");
    CHECK(j["leading_terms"] == nlohmann::json::array({"x^2", "y^2"}));
    CHECK(std::string(gbd_report_text(r)).rfind("verdict: yes\n", 0) == 0);
    gbd_report_free(r);
  }
  gbd_report* r = nullptr;
  CHECK(gbd_detect(s, static_cast<gbd_mode>(9), 10, &r) == GBD_ERR_INVALID_ARGUMENT);
  gbd_system_free(s);

  gbd_system* no = parse("vars x y\nx*y\n");
  REQUIRE(gbd_detect(no, GBD_MODE_ZERO_DIM, 10, &r) == GBD_OK);
  CHECK(gbd_report_verdict(r) == 0);
  CHECK(report_json(r)["witness"].is_null());
  gbd_report_free(r);
  gbd_system_free(no);

  gbd_system* wide = parse("vars x y z\nx + y + z + x*y\nx + y + z + y*z\nx + y + z + x*z\n");
  CHECK(gbd_detect(wide, GBD_MODE_BRUTE, 10, &r) == GBD_ERR_CAP_EXCEEDED);
  gbd_system_free(wide);
}

TEST_CASE("C API: verify and order-solve") {
  gbd_system* s = parse("vars x y\nx^2\nx*y + 1\n");
  gbd_report* r = nullptr;
  REQUIRE(gbd_verify(s, "1,1", &r) == GBD_OK);
  CHECK(gbd_report_verdict(r) == 0);
  auto j = report_json(r);
  CHECK(j["failing_pair"] == nlohmann::json::array({1, 2}));
  CHECK(j["remainder"] == "-x");
  gbd_report_free(r);
  CHECK(gbd_verify(s, "0,1", &r) == GBD_ERR_INVALID_ARGUMENT);
  CHECK(gbd_verify(s, "1", &r) == GBD_ERR_INVALID_ARGUMENT);
  gbd_system_free(s);

  gbd_system* line = parse("vars x y\nx + y\n");
  REQUIRE(gbd_order_solve(line, "x", &r) == GBD_OK);
  CHECK(gbd_report_verdict(r) == 1);
  j = report_json(r);
  CHECK(std::stol(j["witness"]["integer_weights"][0].get<std::string>()) >
        std::stol(j["witness"]["integer_weights"][1].get<std::string>()));
  gbd_report_free(r);
  CHECK(gbd_order_solve(line, "x*y", &r) == GBD_ERR_INVALID_ARGUMENT);
  CHECK(gbd_order_solve(line, "x;y", &r) == GBD_ERR_INVALID_ARGUMENT);

  gbd_system* lifted = nullptr;
  REQUIRE(gbd_elevate(line, 0, &lifted) == GBD_OK);
  CHECK(gbd_system_num_polys(lifted) == 5);
  gbd_system_free(lifted);
  gbd_system_free(line);
}

TEST_CASE("C API: set packing") {
  gbd_packing* p = nullptr;
  REQUIRE(gbd_packing_parse("universe 2\n1\n2\ngoal 2\ncap 1\n", &p) == GBD_OK);
  gbd_system* enc = nullptr;
  REQUIRE(gbd_packing_encode(p, 0, &enc) == GBD_OK);
  CHECK(gbd_system_num_vars(enc) == 6);
  CHECK(gbd_system_num_polys(enc) == 2);
  gbd_report* r = nullptr;
  REQUIRE(gbd_detect(enc, GBD_MODE_SGBD, 1000, &r) == GBD_OK);
  CHECK(gbd_report_verdict(r) == 1);
  gbd_report_free(r);
  REQUIRE(gbd_packing_solve(p, 1000, &r) == GBD_OK);
  CHECK(gbd_report_verdict(r) == 1);
  CHECK(report_json(r)["chosen"] == nlohmann::json::array({1, 2}));
  gbd_report_free(r);
  gbd_system_free(enc);
  CHECK(gbd_packing_encode(p, 1, &enc) == GBD_ERR_INVALID_ARGUMENT);
  gbd_packing_free(p);
  CHECK(gbd_packing_parse("universe 2\n1\n", &p) == GBD_ERR_PARSE);
}
