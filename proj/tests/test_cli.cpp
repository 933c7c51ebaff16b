#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef ECPTOOL_PATH
#define ECPTOOL_PATH "ecptool"
#endif
#ifndef ECP_TEST_TMPDIR
#define ECP_TEST_TMPDIR "/tmp"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout only
};

RunResult run_tool(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      std::string(ECP_TEST_TMPDIR) + "/cli_out_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(ECPTOOL_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  std::remove(out_path.c_str());
  return result;
}

std::string write_temp(const std::string& name, const std::string& contents) {
  const std::string path = std::string(ECP_TEST_TMPDIR) + "/" + name;
  std::ofstream out(path);
  out << contents;
  return path;
}

} // namespace

TEST_CASE("cli: exit code 0 when requested properties hold") {
  CHECK(run_tool("check --ecp c6").exit_code == 0);
  CHECK(run_tool("check --ecp --ccp d4").exit_code == 0);
  const std::string trivial =
      write_temp("trivial_spec.json",
                 R"json({"kind":"permutation","permutation":{"degree":1,"generators":["()"]}})json");
  CHECK(run_tool("check --ecp " + trivial).exit_code == 0);
}

TEST_CASE("cli: exit code 1 with a certificate when a property is refuted") {
  const RunResult r = run_tool("--format structured check --ecp s3");
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["properties"]["ecp"] == "false");
  REQUIRE(doc["certificates"].size() == 1);
  CHECK(doc["certificates"][0]["replay"] == "verified");
}

TEST_CASE("cli: ecp verdicts on the two recorded groups") {
  CHECK(run_tool("check --ecp paper-81-10").exit_code == 0);
  const RunResult r = run_tool("--format structured check --ecp paper-128-1760");
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["properties"]["ecp"] == "false");
  REQUIRE(doc["certificates"].size() == 1);
  CHECK(doc["certificates"][0]["replay"] == "verified");
}

TEST_CASE("cli: exit code 2 on errors") {
  CHECK(run_tool("check --ecp no-such-input").exit_code == 2);
  CHECK(run_tool("check --ecp paper-big-group").exit_code == 2); // beyond the lattice budget
  CHECK(run_tool("check --properties bogus c6").exit_code == 2);
  CHECK(run_tool("info").exit_code == 2); // missing argument
  const std::string bad = write_temp("bad_spec.json", R"({"kind":"nope"})");
  CHECK(run_tool("info " + bad).exit_code == 2);
  const std::string unknown_field = write_temp(
      "unknown_field.json",
      R"({"kind":"metacyclic","metacyclic":{"m":3,"n":1,"r":1},"comment":"x"})");
  CHECK(run_tool("info " + unknown_field).exit_code == 2);
}

TEST_CASE("cli: budget flags are honored") {
  CHECK(run_tool("lattice metacyclic-27-9-4 --max-lattice 100").exit_code == 2);
  CHECK(run_tool("lattice metacyclic-27-9-4").exit_code == 0);
}

TEST_CASE("cli: the recorded counterexample workflow") {
  const RunResult r = run_tool(
      "--format structured conjperm paper-big-group --subgroup a^3b^2c^3d --conjugators abcd");
  CHECK(r.exit_code == 1);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["properties"]["conjugate_permutable"] == "refuted");
  REQUIRE(doc["certificates"].size() == 1);
  CHECK(doc["certificates"][0]["witness"] == "b^4c^3d^2");
  CHECK(doc["certificates"][0]["conjugator"] == "abcd");
  CHECK(doc["certificates"][0]["replay"] == "verified");

  // a central conjugator refutes nothing
  const RunResult ok = run_tool("conjperm paper-big-group --subgroup a^3b^2c^3d --conjugators c^9");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("not refuted") != std::string::npos);

  // symbolic whole-group scans are rejected
  CHECK(run_tool("conjperm paper-big-group --subgroup a^3b^2c^3d").exit_code == 2);
}

TEST_CASE("cli: conjperm on permutation groups uses cycle notation") {
  CHECK(run_tool("conjperm s3 --subgroup '(1,2)'").exit_code == 1);
  CHECK(run_tool("conjperm s3 --subgroup '(1,2,3)'").exit_code == 0);
  // restricted conjugator scan never claims "true"
  const RunResult r = run_tool("conjperm s3 --subgroup '(1,2)' --conjugators '(1,2)'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("not refuted") != std::string::npos);
}

TEST_CASE("cli: engel sweep and single query") {
  CHECK(run_tool("engel q8").exit_code == 0);
  const RunResult r = run_tool("--format structured engel q8 --subgroup i --element i");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["properties"]["n"] == "1");
  CHECK(doc["properties"]["t"] == "2");
  CHECK(doc["properties"]["bound"] == "4");
  CHECK(doc["properties"]["depth_in_g"] == "2");
  CHECK(doc["properties"]["holds"] == "true");
}

TEST_CASE("cli: info and lattice run clean") {
  const RunResult info = run_tool("--format structured info heis-3");
  CHECK(info.exit_code == 0);
  const auto doc = nlohmann::json::parse(info.output);
  CHECK(doc["order"] == 27);
  CHECK(doc["properties"]["exponent"] == "3");
  CHECK(doc["properties"]["nilpotent"] == "true");

  const RunResult lat = run_tool("--format structured lattice s4");
  CHECK(lat.exit_code == 0);
  const auto lat_doc = nlohmann::json::parse(lat.output);
  CHECK(lat_doc["properties"]["subgroups"] == "30");
}

TEST_CASE("cli: catalog verify runs the golden suite clean") {
  const RunResult r = run_tool("catalog verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("OK   paper-81-10") != std::string::npos);
  CHECK(r.output.find("OK   paper-128-1760") != std::string::npos);
  CHECK(r.output.find("OK   paper-big-group") != std::string::npos);
  CHECK(r.output.find("SKIP heis-3-x-heis-3") != std::string::npos);
}

TEST_CASE("cli: --max-order caps enumeration") {
  CHECK(run_tool("info paper-big-group --max-order 1000").exit_code == 2);
}

TEST_CASE("cli: catalog list and build") {
  const RunResult list = run_tool("catalog list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("paper-81-10") != std::string::npos);
  CHECK(list.output.find("paper-big-group") != std::string::npos);
  CHECK(run_tool("catalog build no-such-name").exit_code == 2);
  const RunResult spec = run_tool("catalog build metacyclic-27-9-4");
  CHECK(spec.exit_code == 0);
  CHECK(nlohmann::json::parse(spec.output)["kind"] == "metacyclic");
}

TEST_CASE("cli: exported specs re-run to an identical report (modulo source and timing)") {
  for (const std::string name : {"s3", "d4", "q8", "heis-3", "metacyclic-27-9-4", "paper-81-10"}) {
    const std::string path = std::string(ECP_TEST_TMPDIR) + "/" + name + "_export.json";
    REQUIRE(run_tool("catalog build " + name + " --out " + path).exit_code == 0);
    const RunResult from_catalog = run_tool("--format structured check --ecp --iwasawa " + name);
    const RunResult from_file = run_tool("--format structured check --ecp --iwasawa " + path);
    REQUIRE(from_catalog.exit_code == from_file.exit_code);
    auto a = nlohmann::json::parse(from_catalog.output);
    auto b = nlohmann::json::parse(from_file.output);
    CHECK(a["properties"] == b["properties"]);
    CHECK(a["certificates"] == b["certificates"]);
    CHECK(a["order"] == b["order"]);
    std::remove(path.c_str());
  }
}
