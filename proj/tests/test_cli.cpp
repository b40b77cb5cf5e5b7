#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using csm::cli::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "csmtool");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = csm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

Json runJson(std::vector<std::string> args) {
  args.insert(args.begin(), {"--output", "json"});
  auto r = runCli(std::move(args));
  auto report = Json::parse(r.out);
  CHECK(report["exit_status"] == r.status);
  return report;
}

std::string input(const std::string& name) { return std::string(CSM_SOURCE_DIR) + "/data/inputs/" + name; }

std::string writeTemp(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("csmtool_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

const Json& check(const Json& report, const std::string& name) {
  for (auto& c : report["checks"])
    if (c["name"] == name) return c;
  FAIL("no check named " << name);
  static Json none;
  return none;
}

std::vector<std::string> strings(const Json& array) {
  std::vector<std::string> out;
  for (auto& v : array) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("Gr(2,5) printed fixture passes every check") {
  auto report = runJson({"grassmannian", "--k", "2", "--n", "5", "--fixture", "paper"});
  CHECK(report["exit_status"] == 0);
  CHECK(report["checks"].size() >= 9);
  for (auto& c : report["checks"]) CHECK_MESSAGE(c["pass"] == true, c["name"]);
  CHECK(report["data"]["calibration"]["orientation"] == "columns-are-cells");
  CHECK(report["data"]["calibration"]["surviving"] == "1");
}

TEST_CASE("Gr(2,6) row of the cell (3,1)") {
  auto report = runJson({"grassmannian", "--k", "2", "--n", "6", "--fixture", "paper-31"});
  CHECK(report["exit_status"] == 0);
  const auto& ssm = report["data"]["ssm"];
  REQUIRE(ssm["cells"].size() == 1);
  CHECK(ssm["cells"][0] == Json::array({3, 1}));
  // Basis order: dimension ascending, so () first and (3,1) last.
  std::vector<std::string> expected{"22", "-22", "13", "5", "-4", "-3", "1"};
  std::vector<Json> basis{Json::array(), Json::array({1}), Json::array({2}), Json::array({1, 1}),
                          Json::array({3}), Json::array({2, 1}), Json::array({3, 1})};
  std::map<Json, std::string> row;
  for (std::size_t i = 0; i < ssm["basis"].size(); ++i) row[ssm["basis"][i]] = ssm["rows"][0][i];
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(row[basis[i]] == expected[i]);
  auto text = runCli({"grassmannian", "--k", "2", "--n", "6"});
  CHECK(text.status == 0);
  CHECK(text.out.find("(3,1)") != std::string::npos);
}

TEST_CASE("projective specialization") {
  auto report = runJson({"grassmannian", "--k", "1", "--n", "3"});
  CHECK(report["exit_status"] == 0);
  CHECK(check(report, "projective-specialization")["pass"] == true);
  CHECK(strings(report["data"]["ssm"]["rows"][2]) == std::vector<std::string>{"1", "-1", "1"});
}

TEST_CASE("cells-pn") {
  auto two = runJson({"cells-pn", "--n", "2"});
  CHECK(two["exit_status"] == 0);
  CHECK(strings(two["data"]["ssm"]["rows"][2]) == std::vector<std::string>{"1", "-1", "1"});
  auto zero = runJson({"cells-pn", "--n", "0"});
  CHECK(zero["exit_status"] == 0);
  REQUIRE(zero["data"]["ssm"]["rows"].size() == 1);
  CHECK(strings(zero["data"]["ssm"]["rows"][0]) == std::vector<std::string>{"1"});
  CHECK(runCli({"cells-pn", "--n", "10"}).status == 0);
  CHECK(runCli({"cells-pn", "--n", "-1"}).status == 2);
}

TEST_CASE("arrangement samples") {
  auto boolean = runJson({"arrangement", input("boolean_p2.json")});
  CHECK(boolean["exit_status"] == 0);
  CHECK(strings(boolean["data"]["poincare"]) == std::vector<std::string>{"1", "3", "3", "1"});
  CHECK(boolean["data"]["effective"] == true);
  CHECK(boolean["data"]["euler_characteristic"] == "0");
  std::map<std::string, std::string> ssm;
  for (auto& term : boolean["data"]["ssm_signed"]) ssm[term[0]] = term[1];
  CHECK(ssm["[P^2]"] == "1");
  CHECK(ssm["[P^1]"] == "3");
  CHECK(ssm["[pt]"] == "6");

  auto single = runJson({"arrangement", input("single_hyperplane_p3.json")});
  CHECK(single["exit_status"] == 0);
  for (auto& term : single["data"]["ssm_signed"]) CHECK(term[1] == "1");
  CHECK(single["data"]["ssm_signed"].size() == 4);

  auto braid = runJson({"arrangement", input("braid_p3.json")});
  CHECK(strings(braid["data"]["poincare"]) == std::vector<std::string>{"1", "6", "11", "6"});
  CHECK(braid["data"]["euler_characteristic"] == "2");

  auto bad = runCli({"arrangement", input("bad_row_length.json")});
  CHECK(bad.status == 2);
  CHECK_FALSE(bad.err.empty());
  auto badJson = runJson({"arrangement", input("bad_row_length.json")});
  CHECK(badJson["checks"].empty());
  CHECK(badJson["error"].is_string());
  CHECK(runCli({"arrangement", "/nonexistent/file.json"}).status == 2);
}

TEST_CASE("constructible samples") {
  auto line = input("projective_line.json");
  auto signedOne = runJson({"constructible", line, "--function", "signed_indicator_C"});
  CHECK(signedOne["exit_status"] == 0);
  CHECK(signedOne["data"]["cc_coefficients"]["pt"] == "1");
  CHECK(signedOne["data"]["cc_coefficients"]["C"] == "1");
  CHECK(signedOne["data"]["verdict"] == "effective");

  auto oneC = runJson({"constructible", line, "--function", "indicator_C"});
  CHECK(oneC["exit_status"] == 0);
  CHECK(oneC["data"]["verdict"] == "not effective");
  CHECK(oneC["data"]["euler_characteristic"] == "1");

  auto behrend = runJson({"constructible", line, "--behrend", "C:2,pt:3"});
  CHECK(behrend["data"]["cc_coefficients"]["C"] == "2");
  CHECK(behrend["data"]["cc_coefficients"]["pt"] == "3");
  CHECK(behrend["data"]["effective"] == true);

  auto zero = runJson({"constructible", line, "--function", "zero"});
  CHECK(zero["data"]["verdict"] == "empty cycle, not effective");
  CHECK(zero["exit_status"] == 0);

  auto cubic = runJson({"constructible", input("nodal_cubic.json"), "--function", "indicator"});
  CHECK(cubic["exit_status"] == 0);
  CHECK(cubic["data"]["cc_coefficients"]["node"] == "-1");
  CHECK(check(cubic, "class-degree")["pass"] == true);

  CHECK(runCli({"constructible", line, "--function", "missing"}).status == 2);
  CHECK(runCli({"constructible", line, "--behrend", "C:0"}).status == 2);
  CHECK(runCli({"constructible", line}).status == 2);
  CHECK(runCli({"constructible", line, "--function", "zero", "--behrend", "C:1"}).status == 2);
}

TEST_CASE("exit status 1 with a witness") {
  auto base = runJson({"cells-pn", "--n", "2"});
  Json table = base["data"]["ssm"];
  table["model"] = {{"kind", "grassmannian"}, {"k", "1"}, {"n", "3"}};
  // Flip the sign of the [pt] coefficient in the big cell's row.
  table["rows"][2][0] = "-1";
  auto path = writeTemp("mutated.json", table.dump());
  auto report = runJson({"grassmannian", "--k", "1", "--n", "3", "--ssm-file", path});
  CHECK(report["exit_status"] == 1);
  const auto& alternation = check(report, "alternation");
  CHECK(alternation["pass"] == false);
  REQUIRE(alternation["witness"].size() == 1);
  CHECK(alternation["witness"][0].get<std::string>().find("coefficient -1") != std::string::npos);
  auto text = runCli({"grassmannian", "--k", "1", "--n", "3", "--ssm-file", path});
  CHECK(text.status == 1);
  CHECK(text.out.find("FAIL") != std::string::npos);
}

TEST_CASE("input errors") {
  CHECK(runCli({}).status == 2);
  CHECK(runCli({"unknown"}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "0", "--n", "3"}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "3", "--n", "3"}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "2", "--n", "5", "--fixture", "other"}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "2", "--n", "6", "--fixture", "paper"}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "3", "--n", "7"}).status == 2);
  CHECK(runCli({"--output", "xml", "cells-pn", "--n", "1"}).status == 2);

  auto base = runJson({"cells-pn", "--n", "2"});
  Json table = base["data"]["csm"];
  table["model"] = {{"kind", "grassmannian"}, {"k", "1"}, {"n", "3"}};
  table["table"] = "csm";
  auto path = writeTemp("csm_p2.json", table.dump());
  CHECK(runCli({"grassmannian", "--k", "1", "--n", "3", "--csm-file", path}).status == 0);
  CHECK(runCli({"grassmannian", "--k", "1", "--n", "4", "--csm-file", path}).status == 2);
  CHECK(runCli({"grassmannian", "--k", "1", "--n", "3", "--ssm-file", path}).status == 2);
  auto garbage = writeTemp("garbage.json", "{not json");
  CHECK(runCli({"arrangement", garbage}).status == 2);
}

TEST_CASE("output is deterministic and digests track inputs") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"--output", "json", "grassmannian", "--k", "2", "--n", "5"},
           {"grassmannian", "--k", "2", "--n", "6"},
           {"arrangement", input("generic_lines_p2.json")},
           {"--output", "json", "constructible", input("nodal_cubic.json"), "--function", "indicator"},
       }) {
    auto a = runCli(args);
    auto b = runCli(args);
    CHECK(a.out == b.out);
    CHECK(a.status == b.status);
  }
  auto first = runJson({"arrangement", input("boolean_p2.json")});
  auto second = runJson({"arrangement", input("braid_p3.json")});
  CHECK(first["inputs_digest"] != second["inputs_digest"]);
  CHECK(csm::cli::sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("quiet mode") {
  auto quiet = runCli({"--quiet", "arrangement", input("boolean_p2.json")});
  auto loud = runCli({"arrangement", input("boolean_p2.json")});
  CHECK(quiet.status == 0);
  CHECK(quiet.out.size() < loud.out.size());
  CHECK(std::count(quiet.out.begin(), quiet.out.end(), '\n') == 1);
}
