#include <doctest.h>

#include <string>
#include <vector>

#include "radon/cli.hpp"
#include "radon/json_io.hpp"
#include "test_util.hpp"

using namespace radon;
using namespace radon::testutil;

TEST_CASE("weight serialization uses exact rational strings") {
  Weight w = wtq({"-1", "3/2"});
  Json j = weight_to_json(w);
  CHECK(j.dump() == R"(["-1","3/2"])");
  CHECK(weight_from_json(j) == w);

  CHECK(weight_from_json(Json::parse(R"([1, "-1/2"])")) ==
        wtq({"1", "-1/2"}));
  CHECK(error_code_of([] { weight_from_json(Json::parse(R"(["x"])")); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { weight_from_json(Json::parse(R"({"a":1})")); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { weight_from_json(Json::parse(R"([1.5])")); }) ==
        Errc::ParseError);
}

TEST_CASE("subset, word and Cartan input serialization") {
  CHECK(subset_to_json(sub({1, 3})).dump() == "[1,3]");
  CHECK(subset_from_json(Json::parse("[3,1]")) == sub({1, 3}));
  CHECK(subset_from_json(Json::parse("[]")) == sub({}));
  CHECK(error_code_of([] { subset_from_json(Json::parse("[0]")); }) ==
        Errc::IndexOutOfRange);

  const RootSystem rs = rs_of('A', 2);
  WeylElem w = element_from_word(rs, {1, 2});
  CHECK(word_to_json(w).dump() == "[1,2]");
  CHECK(word_from_json(rs, Json::parse("[1,2]")) == w);
  CHECK(word_from_json(rs, Json::parse("[]")).is_identity());

  CartanInput series = cartan_input_from_json(
      Json::parse(R"({"series":"A","rank":2})"));
  CHECK(series.series == 'A');
  CHECK(series.rank == 2);
  CartanInput matrix = cartan_input_from_json(
      Json::parse(R"({"cartan":[[2,-1],[-1,2]]})"));
  CHECK_FALSE(matrix.series.has_value());
  REQUIRE(matrix.cartan.has_value());
  CHECK(RootSystem::build(matrix).num_positive_roots() == 3);
  Json round = cartan_input_to_json(series);
  CHECK(round["series"] == "A");
  CHECK(round["rank"] == 2);
}

TEST_CASE("domain objects round-trip through JSON") {
  const RootSystem rs = rs_of('A', 2);
  WeylElem w = element_from_word(rs, {1, 2});

  std::vector<FactorizationStep> steps = bh_factorize(w, sub({2}), sub({1}));
  Json sj = steps_to_json(steps);
  std::vector<FactorizationStep> back = steps_from_json(rs, sj);
  REQUIRE(back.size() == steps.size());
  CHECK(back[0].alpha == steps[0].alpha);
  CHECK(back[0].inner == steps[0].inner);
  CHECK(back[0].factor == steps[0].factor);

  TdoLabel label{sub({1}), wt({0, 4})};
  TdoLabel label_back = tdo_from_json(tdo_to_json(label));
  CHECK(label_back.variety == label.variety);
  CHECK(label_back.param == label.param);

  IntertwinerSpec spec =
      check_equivalence(wt({-1, 0}), w, Weight::zero(2), sub({2}), sub({1}));
  IntertwinerSpec spec_back = intertwiner_from_json(rs, intertwiner_to_json(spec));
  CHECK(spec_back.w == spec.w);
  CHECK(spec_back.mu == spec.mu);
  CHECK(spec_back.source.param == spec.source.param);
  CHECK(spec_back.target.variety == spec.target.variety);
  CHECK(spec_back.inverse_w == spec.inverse_w);
  CHECK(spec_back.inverse_mu == spec.inverse_mu);

  TheoremReport report =
      check_main_theorem2(wt({-1, 0}), w, sub({2}), sub({1}));
  Json rj = report_to_json(report);
  CHECK(rj["verdict"] == "Applies");
  CHECK(rj["regular"] == true);
  CHECK(rj["chain"][0]["lambda_i"].dump() == R"(["0","4"])");
  CHECK(rj["chain"][0]["eta_i"].dump() == R"(["0","1"])");
  CHECK(rj["chain"][0]["irreducibility"] == "Irreducible");
  TheoremReport report_back = report_from_json(rs, rj);
  CHECK(report_back.regular == report.regular);
  CHECK(report_back.verdict == report.verdict);
  REQUIRE(report_back.chain.size() == 1);
  CHECK(report_back.chain[0].lambda_i == report.chain[0].lambda_i);
  CHECK(report_back.chain[0].eta_i == report.chain[0].eta_i);

  oracle::SuiteResult suite = oracle::verify_suite(rs, "lengths", 3);
  oracle::SuiteResult suite_back =
      suite_result_from_json(suite_result_to_json(suite));
  CHECK(suite_back.suite == suite.suite);
  CHECK(suite_back.instances_checked == suite.instances_checked);
  CHECK(suite_back.failures == suite.failures);

  CHECK(error_code_of([] { parse_json_text("{oops"); }) == Errc::ParseError);
  CHECK(error_code_of([] {
          require_field(Json::parse(R"({"a":1})"), "b");
        }) == Errc::ParseError);
}

namespace {

cli::RunResult run(const std::string& text, cli::RunOptions options = {}) {
  return cli::run_request(parse_json_text(text), options);
}

}  // namespace

TEST_CASE("roots command") {
  cli::RunResult r = run(
      R"({"command":"roots","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2]}})");
  CHECK(r.exit_code == 0);
  CHECK(r.document["count"] == 3);
  CHECK(r.document["positive_roots"].dump() == "[[1,0],[0,1],[1,1]]");
  CHECK(r.document["rho"].dump() == R"(["1","1"])");
  CHECK(r.document["rho_I"].dump() == R"(["-1/2","1"])");
  CHECK(r.document["rho_nil_I"].dump() == R"(["3/2","0"])");
  CHECK_FALSE(cli::render_text("roots", r.document).empty());
}

TEST_CASE("weyl command") {
  cli::RunResult word = run(
      R"({"command":"weyl","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"word":[2,1,2],"lambda":["-1","0"]}})");
  CHECK(word.document["word"].dump() == "[1,2,1]");
  CHECK(word.document["length"] == 3);
  CHECK(word.document["action"].dump() == R"(["0","1"])");
  CHECK(word.document["star_action"].dump() == R"(["2","3"])");
  CHECK(word.document["regular"] == true);

  cli::RunResult enumerate = run(
      R"({"command":"weyl","root_system":{"series":"B","rank":2},)"
      R"("arguments":{"enumerate":true}})");
  CHECK(enumerate.document["order"] == 8);
  CHECK(enumerate.document["elements"].size() == 8);

  cli::RunResult longest = run(
      R"({"command":"weyl","root_system":{"series":"B","rank":2},)"
      R"("arguments":{"longest_of":[1,2]}})");
  CHECK(longest.document["length"] == 4);
}

TEST_CASE("star-pairs command") {
  cli::RunResult r = run(
      R"({"command":"star-pairs","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1]}})");
  REQUIRE(r.document["pairs"].size() == r.document["count"].get<std::size_t>());
  bool found = false;
  for (const Json& p : r.document["pairs"]) {
    CHECK(p["I"].dump() == "[2]");
    CHECK(p["J"].dump() == "[1]");
    if (p["w"].dump() == "[1,2]") {
      found = true;
      CHECK(p["fiber_dimension"] == 2);
      CHECK(p["det_twist"].dump() == R"(["-3","0"])");
    }
  }
  CHECK(found);
}

TEST_CASE("factorize command returns a bare array") {
  cli::RunResult r = run(
      R"({"command":"factorize","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1],"w":[1,2]}})");
  REQUIRE(r.document.is_array());
  CHECK(r.document.dump() ==
        R"([{"alpha":2,"inner":[1],"factor":[1,2]}])");
}

TEST_CASE("transport command") {
  cli::RunResult r = run(
      R"({"command":"transport","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1],"w":[1,2],"lambda":["-1","0"]}})");
  CHECK(r.document["variety"].dump() == "[1]");
  CHECK(r.document["param"].dump() == R"(["0","4"])");
  CHECK(r.document["regular"] == true);
  CHECK(r.document["psi_source"] == "iso_by_regularity");
  CHECK(r.document["psi_target"] == "iso_by_regularity");
  CHECK(r.document["annihilator_source"].dump() == R"(["-4","0"])");
  CHECK(r.document["annihilator_target"].dump() == R"(["0","1"])");

  // the det-twist alias specializes the zero parameter to the zero target
  cli::RunResult untwisted = run(
      R"({"command":"transport","root_system":{"series":"B","rank":2},)"
      R"("arguments":{"I":[1],"J":[1],"w":[2,1,2],"mu":"det-twist",)"
      R"("lambda":["0","0"]}})");
  CHECK(untwisted.document["param"].dump() == R"(["0","0"])");
}

TEST_CASE("check-equivalence command") {
  cli::RunResult r = run(
      R"({"command":"check-equivalence","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1],"w":[1,2],"lambda":["-1","0"]}})");
  CHECK(r.document["source"]["param"].dump() == R"(["-1","0"])");
  CHECK(r.document["target"]["variety"].dump() == "[1]");
  CHECK(r.document["target"]["param"].dump() == R"(["0","4"])");
  CHECK(r.document["inverse_w"].dump() == "[2,1]");
  CHECK(r.document["inverse_mu"].dump() == R"(["0","0"])");
}

TEST_CASE("check-theorem2 command and exit codes") {
  const std::string applies =
      R"({"command":"check-theorem2","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1],"w":[1,2],"lambda":["-1","0"]}})";
  cli::RunResult r = run(applies);
  CHECK(r.exit_code == 0);
  CHECK(r.document["verdict"] == "Applies");
  CHECK_FALSE(cli::render_text("check-theorem2", r.document).empty());

  const std::string singular =
      R"({"command":"check-theorem2","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"I":[2],"J":[1],"w":[1,2],"lambda":["1","0"]}})";
  CHECK(run(singular).exit_code == 0);
  CHECK(run(singular).document["verdict"] == "FailsRegularity");
  cli::RunOptions strict;
  strict.require_applies = true;
  CHECK(run(singular, strict).exit_code == 1);
  CHECK(run(applies, strict).exit_code == 0);
}

TEST_CASE("verify command") {
  cli::RunResult r = run(
      R"({"command":"verify","root_system":{"series":"A","rank":2},)"
      R"("arguments":{"suites":["lengths","rho_identities"]}})");
  CHECK(r.exit_code == 0);
  CHECK(r.document["passed"] == true);
  REQUIRE(r.document["runs"].size() == 1);
  CHECK(r.document["runs"][0]["suites"].size() == 2);
  CHECK(r.document["runs"][0]["suites"][0]["suite"] == "lengths");
  CHECK(r.document["runs"][0]["suites"][0]["passed"] == true);
}

TEST_CASE("malformed requests raise parse errors") {
  CHECK(error_code_of([] { run(R"({"command":"fly"})"); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { run(R"({"arguments":{}})"); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { run(R"([1,2,3])"); }) == Errc::ParseError);
  CHECK(error_code_of([] {
          run(R"({"command":"roots"})");
        }) == Errc::ParseError);
  CHECK(error_code_of([] {
          run(R"({"command":"transport","root_system":)"
              R"({"series":"A","rank":2},"arguments":{"I":[2],"J":[1],)"
              R"("w":[1,2],"lambda":["-1","0"],"mu":"twist"}})");
        }) == Errc::ParseError);
}
