#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nefcone/cli.hpp"
#include "oracles.hpp"

using namespace nefcone;
using namespace nefcone::cli;
using nefcone::testing::hn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(NEFCONE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("parse_bundle_spec") {
  auto spec = parse_bundle_spec(R"({"pieces":[[1,1],[2,-1]]})");
  CHECK(spec.type == hn({{1, 1}, {2, -1}}));
  CHECK(spec.field.is_char_zero());

  spec = parse_bundle_spec(R"({"splitting":[3,1,1,0]})");
  CHECK(spec.type == hn({{1, 3}, {2, 2}, {1, 0}}));

  spec = parse_bundle_spec(R"({"pieces":[[1,"123456789012345678901234567890"],[1,0]],
                               "field":{"char":5,"frobenius_steps":2}})");
  CHECK(spec.type.piece(0).degree == Integer("123456789012345678901234567890"));
  CHECK(spec.field == FieldContext::char_p(5, 2));

  try {
    parse_bundle_spec(R"({"pieces":[[1,0],[1,0]]})");
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ValidationError);
    CHECK(e.cause() == Errc::NonDecreasingSlopes);
  }

  try {
    parse_bundle_spec("{\"pieces\":\n  [[1,0],, [1,0]]}");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  for (const char* bad : {R"([1,2])", R"({})", R"({"pieces":[[1,0]],"splitting":[0]})",
                          R"({"pieces":[[1]]})", R"({"pieces":[[1,0.5]]})", R"({"pieces":[[1,0]],"extra":1})",
                          R"({"pieces":[[1,0]],"field":{"char":0,"frobenius_steps":1}})"}) {
    CAPTURE(bad);
    try {
      parse_bundle_spec(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
  for (const char* bad : {R"({"pieces":[]})", R"({"splitting":[]})", R"({"pieces":[[0,1]]})",
                          R"({"pieces":[[2,0]],"field":{"char":6}})"}) {
    CAPTURE(bad);
    try {
      parse_bundle_spec(bad);
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ValidationError);
    }
  }
}

TEST_CASE("rational rendering") {
  CHECK(to_json(Rational(-1)) == "-1");
  CHECK(to_json(Rational(Integer(1), Integer(2))) == "1/2");
  CHECK(rational_from_json(Json("-6/4")) == Rational(Integer(-3), Integer(2)));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK(to_json(ipow(Integer(10), 30)) == "1000000000000000000000000000000");
  CHECK(to_json(Integer(-42)) == -42);
}

TEST_CASE("golden outputs") {
  auto r = run({"theta", "--bundle", R"({"pieces":[[1,1],[2,-1]]})", "--r", "2", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == read_golden("theta_json.golden"));
  const Report theta_rep = parse_report(r.out);
  CHECK(theta_rep.results["theta"] == "-1");
  CHECK(theta_rep.results["t"] == 2);
  CHECK(theta_rep.results["s"] == 2);
  CHECK(theta_rep.results["mu_t"] == "-1/2");

  r = run({"classify", "--bundle", R"({"pieces":[[2,0]]})", "--r", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == read_golden("classify_text.golden"));
  CHECK(r.out.find("nef_not_ample") != std::string::npos);

  r = run({"cone", "flag", "--bundle", R"({"pieces":[[1,2],[1,1],[1,0]]})", "--flag", "1,2", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == read_golden("cone_flag_json.golden"));
  CHECK(parse_report(r.out).results["rays"] == Json::parse("[[1,0,0],[0,1,-1],[0,0,1]]"));
}

TEST_CASE("text rendering of a Grassmann cone") {
  const auto r = run({"cone", "gr", "--bundle", R"({"pieces":[[1,2],[1,1]]})", "--r", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("rays     (1,-1), (0,1)\n") != std::string::npos);
}

TEST_CASE("every subcommand is deterministic and round-trips through JSON") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const HNType h = testing::random_hn_type(rng, 7, 4);
    Json pieces = Json::array();
    for (const auto& p : h.pieces()) pieces.push_back({p.rank, p.degree.get_si()});
    Json bundle_json{{"pieces", pieces}};
    if (trial % 3 == 1) bundle_json["field"] = {{"char", 3}, {"frobenius_steps", 1}};
    const std::string bundle = bundle_json.dump();
    const std::string r = std::to_string(1 + trial % (h.rank() - 1));
    const std::string flag = h.rank() > 2 ? "1," + std::to_string(h.rank() - 1) : "1";
    const std::string flag_class = h.rank() > 2 ? R"([1,"1/2",-3])" : R"([1,-3])";

    const std::vector<std::vector<std::string>> commands{
        {"theta", "--bundle", bundle, "--r", r},
        {"classify", "--bundle", bundle, "--r", r},
        {"cone", "gr", "--bundle", bundle, "--r", r},
        {"cone", "flag", "--bundle", bundle, "--flag", flag},
        {"member", "gr", "--bundle", bundle, "--r", r, "--class", R"(["2/3",-1])"},
        {"member", "flag", "--bundle", bundle, "--flag", flag, "--class", flag_class},
        {"vabundles", "--bundle", bundle, "--r", r},
        {"oracle-check", "--bundle", bundle},
    };
    for (auto args : commands) {
      CAPTURE(bundle);
      CAPTURE(args[0]);
      const Run text1 = run(args);
      const Run text2 = run(args);
      CHECK(text1.code == kExitOk);
      CHECK(text1.out == text2.out);

      args.push_back("--json");
      const Run json1 = run(args);
      const Run json2 = run(args);
      REQUIRE(json1.code == kExitOk);
      CHECK(json1.out == json2.out);
      const Report rep = parse_report(json1.out);
      CHECK(render_report(rep, RenderMode::Json) == json1.out);
      CHECK(parse_report(render_report(rep, RenderMode::Json)) == rep);
      CHECK(render_report(rep, RenderMode::Text) == text1.out);
    }
  }
}

TEST_CASE("bundle and class specs from files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto bundle_path = dir / "nefcone_test_bundle.json";
  const auto class_path = dir / "nefcone_test_class.json";
  std::ofstream(bundle_path) << R"({"splitting":[2,1,0]})";
  std::ofstream(class_path) << R"({"x":1,"y":-1})";

  auto r = run({"member", "gr", "--bundle", "@" + bundle_path.string(), "--r", "1", "--class",
                "@" + class_path.string(), "--json"});
  CHECK(r.code == kExitOk);
  const Report rep = parse_report(r.out);
  // theta = 0 for r = 1, so (1, -1) lies outside the cone.
  CHECK(rep.results["theta"] == "0");
  CHECK(rep.results["nef"] == false);

  r = run({"theta", "--bundle", "@" + (dir / "nefcone_missing.json").string(), "--r", "1"});
  CHECK(r.code == kExitInvalidInput);
  std::filesystem::remove(bundle_path);
  std::filesystem::remove(class_path);
}

TEST_CASE("exit codes for invalid input") {
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  CHECK(run({"theta", "--r", "1"}).code == kExitInvalidInput);
  CHECK(run({"theta", "--bundle", R"({"pieces":[[2,0]]})", "--r", "2"}).code == kExitInvalidInput);
  CHECK(run({"theta", "--bundle", R"({"pieces":[[1,0],[1,0]]})", "--r", "1"}).code == kExitInvalidInput);
  CHECK(run({"cone", "flag", "--bundle", R"({"pieces":[[3,0]]})", "--flag", "2,1"}).code == kExitInvalidInput);
  CHECK(run({"member", "flag", "--bundle", R"({"pieces":[[3,0]]})", "--flag", "1,2", "--class", "[1,0]"}).code ==
        kExitInvalidInput);
  CHECK(run({"member", "gr", "--bundle", R"({"pieces":[[3,0]]})", "--r", "1", "--class", R"(["1/0",0])"}).code ==
        kExitInvalidInput);
  const Run err = run({"theta", "--bundle", R"({"pieces":[[1,0],[1,0]]})", "--r", "1"});
  CHECK(err.out.empty());
  CHECK(err.err.find("NonDecreasingSlopes") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("oracle-check on a single bundle lists every r") {
  const auto r = run({"oracle-check", "--bundle", R"({"pieces":[[1,3],[2,1],[1,0]]})", "--json"});
  CHECK(r.code == kExitOk);
  const Report rep = parse_report(r.out);
  CHECK(rep.results["checks"] == 3);
  CHECK(rep.results["agree"] == true);
  CHECK(rep.results["details"][1]["theta"] == "1/2");
}
