#include <doctest.h>

#include "torus_mirror/errors.hpp"
#include "torus_mirror/json_io.hpp"
#include "torus_mirror/verify.hpp"

using namespace torus_mirror;

TEST_SUITE("cli") {
  TEST_CASE("schema errors carry the JSON pointer of the offending node") {
    try {
      read_torus(parse_document(R"({"T": [[[0,1],1],[-1,[0,"x"]]]})"), NumberMode::Exact);
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.path() == "/T/1/1/1");
    }
    CHECK_THROWS_AS(parse_document("{"), SchemaError);
    CHECK_THROWS_AS(read_torus(parse_document(R"({"S": 1})"), NumberMode::Exact), SchemaError);
    CHECK_THROWS_AS(read_torus(parse_document(R"({"T": [[1, 2]]})"), NumberMode::Exact), SchemaError);
  }

  TEST_CASE("exact mode refuses fractional doubles; float mode converts them exactly") {
    const Json doc = parse_document(R"({"T": [[[0.5, 1]]]})");
    CHECK_THROWS_AS(read_torus(doc, NumberMode::Exact), SchemaError);
    CHECK(read_torus(doc, NumberMode::Float).T(0, 0) == QComplex(Rational(1, 2), Rational(1)));
  }

  TEST_CASE("rationals are written as p/q strings") {
    CHECK(write_rational(Rational(3, 4)) == "3/4");
    CHECK(write_rational(Rational(4)) == 4);
    CHECK(write_rational(Rational(1, 4), NumberMode::Float) == 0.25);
    CHECK(write_complex(QComplex(Rational(1, 2), Rational(-1))) == Json::array({"1/2", -1}));
  }

  TEST_CASE("bundle input rejects mu together with p") {
    const char* text = R"({"T": [[[0,1],1],[-1,[0,1]]], "r": 1, "A": [[0,1],[1,1]], "p": [0,0], "mu": [0,0]})";
    CHECK_THROWS_AS(read_bundle(parse_document(text), NumberMode::Exact), SchemaError);
  }

  TEST_CASE("reports: exact checks carry no residual and the schema is versioned") {
    const Json j = run_suite("sets", VerifyConfig{}).to_json();
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["pass"] == true);
    CHECK_FALSE(j.contains("wall_time_seconds"));
    for (const auto& c : j["checks"]) {
      if (c["kind"] == "exact") CHECK_FALSE(c.contains("residual"));
      CHECK(c.contains("predicate"));
    }
    CHECK_THROWS_AS(run_suite("nope", VerifyConfig{}), UnknownSuite);
  }

  TEST_CASE("find-delta report on the worked example and on a nonsingular torus") {
    const Report a = find_delta_report(section5_torus(), VerifyConfig{});
    CHECK(a.pass());
    CHECK(a.result["delta"] == Json::array({Json::array({0, 0}), Json::array({0, 1})}));
    TorusInput t{ComplexMatrix{{QComplex(Rational(0), Rational(1))}}, std::nullopt};
    CHECK(find_delta_report(t, VerifyConfig{}).result["delta"] == Json::array({Json::array({0})}));
  }

  TEST_CASE("enumerate at bound 0 lists only A = 0, in both sets") {
    VerifyConfig cfg;
    cfg.bound = 0;
    const Report rep = enumerate_report(section5_torus(), cfg);
    CHECK(rep.result["counts"]["total"] == 1);
    CHECK(rep.result["counts"]["both"] == 1);
    cfg.bound = 3;
    CHECK_THROWS_AS(enumerate_report(section5_torus(), cfg), BoundTooLarge);
  }

  TEST_CASE("same seed gives identical reports") {
    VerifyConfig cfg;
    cfg.seed = 7;
    CHECK(run_suite("pairings", cfg).to_json().dump() == run_suite("pairings", cfg).to_json().dump());
  }
}
