#include "doctest.h"

#include "nashcar/error.hpp"
#include "nashcar/report.hpp"
#include "oracles.hpp"

using namespace nashcar;

namespace {

const char* kProductDoc =
    R"({"r":2,"a":1,"f":[{"i":4,"j":0,"c":"1"},{"i":3,"j":1,"c":"1"},{"i":1,"j":11,"c":"1"},{"i":0,"j":12,"c":"1"}],"trunc":64})";

const char* kFamilyDoc = R"({"r":3,"a":1,"f":[{"i":1,"j":0,"c":"1"},{"i":0,"j":6,"c":"1"}]})";

const Json* find_valuation(const Json& j, const std::string& display) {
  for (const auto& v : j["valuations"])
    if (v["display"] == display) return &v;
  return nullptr;
}

}  // namespace

TEST_CASE("input parsing") {
  const InputDoc d = parse_input(std::string(R"({"r":1,"f":[{"i":2,"j":0,"c":"1/3"},{"i":0,"j":5,"c":-2}]})"));
  CHECK(d.r == 1);
  CHECK(d.a == 0);
  CHECK(d.trunc == 64);
  REQUIRE(d.f.size() == 2);
  CHECK(d.f[0].c == Rat(1, 3));
  CHECK(d.f[1].c == Rat(-2));
  CHECK_FALSE(d.f_factors);

  for (const char* bad : {
           R"({"r":2,"f":[{"i":1,"j":0,"c":"1"}]})",
           R"({"r":1,"f":[{"i":1,"j":0,"c":1.5}]})",
           R"({"r":1,"f":[{"i":-1,"j":0,"c":"1"}]})",
           R"({"r":1})",
           R"([1, 2)",
           R"({"r":"two","a":1,"f":[]})",
       }) {
    CAPTURE(bad);
    try {
      parse_input(std::string(bad));
      FAIL("accepted malformed input");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::validation);
    }
  }
}

TEST_CASE("input echo round trip") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sample = oracle::random_germ(rng, 1, 5, 5, 9, 48);
    InputDoc d;
    d.r = sample.r;
    d.a = sample.a;
    d.f = sample.f;
    d.trunc = rng.uniform(20, 80);
    if (rng.uniform(0, 1) == 1) d.f_factors = std::vector<std::vector<Term>>{sample.f};
    CHECK(parse_input(input_json(d)) == d);
    CHECK(parse_input(input_json(d).dump()) == d);
  }
}

TEST_CASE("section and format names") {
  CHECK(section_from_name("oracle-check") == Section::oracle);
  CHECK(section_from_name("analyze") == Section::analyze);
  CHECK_FALSE(section_from_name("bogus"));
  CHECK(format_from_name("json") == Format::json);
  CHECK_FALSE(format_from_name("xml"));
}

TEST_CASE("product example report") {
  const Report rep = analyze(parse_input(std::string(kProductDoc)));
  CHECK(rep.mk.at(0) == 4);
  CHECK(rep.mk.at(2) == 10);
  CHECK(rep.q_factorial == Tri::no);
  CHECK(rep.factorization.n == 2);
  CHECK(rep.has_unknown());
  CHECK_FALSE(rep.notes.empty());

  const Json j = render_json(rep, Section::analyze);
  CHECK(j["q_factorial"]["verdict"] == "no");
  CHECK(j["q_factorial"]["factor_count"] == 2);
  const Json* v = find_valuation(j, "1/2·(9,11,3,2)");
  REQUIRE(v != nullptr);
  CHECK((*v)["discrepancy"] == "3/2");
  CHECK((*v)["nash"] == false);
  CHECK((*v)["essential"] == "unknown");

  const std::string table = render_table(rep, Section::analyze);
  CHECK(table.find("1/2·(9,11,3,2)") != std::string::npos);
  CHECK(table.find("z^6 + u^11") != std::string::npos);
}

TEST_CASE("JSON output is deterministic") {
  const InputDoc d = parse_input(std::string(kFamilyDoc));
  const std::string once = render_json(analyze(d), Section::analyze).dump();
  const std::string twice = render_json(analyze(d), Section::analyze).dump();
  CHECK(once == twice);
}

TEST_CASE("notes accompany every unknown verdict") {
  oracle::Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sample = oracle::random_germ(rng, 1, 5, 5, 9, 96);
    InputDoc d;
    d.r = sample.r;
    d.a = sample.a;
    d.f = sample.f;
    d.trunc = 96;
    const Report rep = analyze(d);
    if (rep.has_unknown()) CHECK_FALSE(rep.notes.empty());
  }
}

TEST_CASE("document runs and exit codes") {
  RunOptions opts;
  opts.format = Format::json;

  SUBCASE("single germ") {
    const RunResult res = run_document(kFamilyDoc, opts);
    CHECK(res.exit_code == kExitOk);
    CHECK(Json::parse(res.output)["counts"]["nash"] == 5);
  }
  SUBCASE("batch with a malformed entry") {
    const RunResult res = run_document(std::string("[") + kFamilyDoc + R"(, {"r":2}])", opts);
    CHECK(res.exit_code == kExitValidation);
    const Json j = Json::parse(res.output);
    REQUIRE(j.size() == 2);
    CHECK(j[0].contains("counts"));
    CHECK(j[1]["error"]["kind"] == "validation");
  }
  SUBCASE("strict mode refuses undecided verdicts") {
    opts.strict = true;
    CHECK(run_document(kProductDoc, opts).exit_code == kExitUndecided);
    CHECK(run_document(kFamilyDoc, opts).exit_code == kExitOk);
  }
  SUBCASE("insufficient truncation") {
    opts.section = Section::factor;
    const RunResult res = run_document(R"({"r":1,"f":[{"i":2,"j":0,"c":"1"},{"i":1,"j":1,"c":"2"},{"i":0,"j":2,"c":"1"}],"trunc":6})", opts);
    CHECK(res.exit_code == kExitTruncation);
    CHECK_FALSE(res.diagnostics.empty());
  }
  SUBCASE("oracle comparison") {
    opts.section = Section::oracle;
    opts.report.oracle = true;
    const RunResult res = run_document(kProductDoc, opts);
    CHECK(res.exit_code == kExitOk);
    CHECK(Json::parse(res.output)["oracle"]["match"] == true);
  }
}
