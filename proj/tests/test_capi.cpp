#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "nashcar/nashcar.h"

namespace {

const char* kProductDoc =
    R"({"r":2,"a":1,"f":[{"i":4,"j":0,"c":"1"},{"i":3,"j":1,"c":"1"},{"i":1,"j":11,"c":"1"},{"i":0,"j":12,"c":"1"}],"trunc":64})";

struct Germ {
  nashcar_germ* g = nullptr;
  ~Germ() { nashcar_germ_free(g); }
};

}  // namespace

TEST_CASE("building a germ from terms") {
  const nashcar_term terms[] = {{1, 0, "1"}, {0, 6, "1"}};
  Germ h;
  REQUIRE(nashcar_germ_new(3, 1, terms, 2, 64, &h.g) == NASHCAR_OK);

  int64_t m = 0;
  CHECK(nashcar_germ_mk(h.g, 1, &m) == NASHCAR_OK);
  CHECK(m == 1);
  CHECK(nashcar_germ_mk(h.g, 7, &m) == NASHCAR_OK);
  CHECK(m == 6);
  int64_t d = 0;
  CHECK(nashcar_germ_delta(h.g, &d) == NASHCAR_OK);
  CHECK(d == 6);

  size_t nash = 0, yes = 0, unknown = 0;
  CHECK(nashcar_germ_nash_count(h.g, &nash) == NASHCAR_OK);
  CHECK(nash == 5);
  CHECK(nashcar_germ_essential_count(h.g, &yes, &unknown) == NASHCAR_OK);
  CHECK(yes == 9);
  CHECK(unknown == 0);

  nashcar_tri t = NASHCAR_UNKNOWN;
  CHECK(nashcar_germ_q_factorial(h.g, &t) == NASHCAR_OK);
  CHECK(t == NASHCAR_YES);
  CHECK(nashcar_germ_surjective(h.g, &t) == NASHCAR_OK);
  CHECK(t == NASHCAR_NO);

  int match = 0;
  CHECK(nashcar_germ_oracle_check(h.g, &match) == NASHCAR_OK);
  CHECK(match == 1);
}

TEST_CASE("germ from a JSON document") {
  Germ h;
  REQUIRE(nashcar_germ_from_json(kProductDoc, &h.g) == NASHCAR_OK);
  int64_t branches = 0;
  nashcar_certainty c = NASHCAR_CERTAINTY_UNKNOWN;
  CHECK(nashcar_germ_factor(h.g, &branches, &c) == NASHCAR_OK);
  CHECK(branches == 2);
  CHECK(c == NASHCAR_CERTIFIED);
  nashcar_tri t = NASHCAR_YES;
  CHECK(nashcar_germ_q_factorial(h.g, &t) == NASHCAR_OK);
  CHECK(t == NASHCAR_NO);
  int smooth = 1;
  CHECK(nashcar_germ_is_smooth(h.g, &smooth) == NASHCAR_OK);
  CHECK(smooth == 0);

  const char* json = nullptr;
  REQUIRE(nashcar_germ_report_json(h.g, &json) == NASHCAR_OK);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("1/2·(9,11,3,2)") != std::string::npos);
}

TEST_CASE("errors are reported through status codes") {
  nashcar_germ* g = nullptr;
  const nashcar_term bad[] = {{1, 0, "1.5"}};
  CHECK(nashcar_germ_new(1, 0, bad, 1, 64, &g) == NASHCAR_E_VALIDATION);
  CHECK(g == nullptr);
  CHECK(std::string(nashcar_last_error()).size() > 0);

  const nashcar_term flat[] = {{2, 0, "1"}};
  CHECK(nashcar_germ_new(2, 1, flat, 1, 64, &g) == NASHCAR_E_VALIDATION);
  CHECK(nashcar_germ_from_json("{", &g) == NASHCAR_E_VALIDATION);
  CHECK(nashcar_germ_from_json(nullptr, &g) == NASHCAR_E_ARGUMENT);

  const nashcar_term ok[] = {{1, 0, "1"}, {0, 4, "1"}};
  Germ h;
  REQUIRE(nashcar_germ_new(2, 1, ok, 2, 64, &h.g) == NASHCAR_OK);
  int64_t m = 0;
  CHECK(nashcar_germ_mk(h.g, 0, &m) == NASHCAR_E_ARGUMENT);
  CHECK(nashcar_germ_mk(h.g, 1, nullptr) == NASHCAR_E_ARGUMENT);

  CHECK(std::string(nashcar_status_name(NASHCAR_E_TRUNCATION)) == "truncation");
}

TEST_CASE("running documents") {
  nashcar_run_options opts;
  nashcar_run_options_init(&opts);
  CHECK(std::string(opts.command) == "analyze");
  opts.format = "json";
  opts.strict = 1;

  nashcar_run* run = nullptr;
  REQUIRE(nashcar_run_document(kProductDoc, &opts, &run) == NASHCAR_OK);
  CHECK(nashcar_run_exit_code(run) == 3);
  CHECK(std::string(nashcar_run_output(run)).front() == '{');
  nashcar_run_free(run);

  opts.command = "no-such-command";
  CHECK(nashcar_run_document(kProductDoc, &opts, &run) == NASHCAR_E_ARGUMENT);
}
