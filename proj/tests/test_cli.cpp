#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* env = std::getenv("GEODETIC_LAB_BIN");
  REQUIRE(env != nullptr);
  return env;
}

std::string data_dir() {
  const char* env = std::getenv("GEODETIC_LAB_DATA");
  REQUIRE(env != nullptr);
  return env;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/geodetic_cli_") + name;
}

}  // namespace

TEST_CASE("construct flag writes one graph6 line with the right order") {
  RunResult r = run("construct flag --kind affine --q 3");
  CHECK(r.exit_code == 0);
  REQUIRE(!r.out.empty());
  CHECK(r.out.back() == '\n');
  std::string line = r.out.substr(0, r.out.size() - 1);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line[0] - 63 == 45);  // graph6 size byte for 45 vertices

  // identical invocations are byte-identical
  RunResult again = run("construct flag --kind affine --q 3");
  CHECK(again.out == r.out);
}

TEST_CASE("construct to a file, then check it") {
  std::string path = tmp_path("f3.g6");
  RunResult c = run("construct flag --kind affine --q 3 --out " + path);
  CHECK(c.exit_code == 0);
  RunResult chk = run("check --in " + path + " --checker both");
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("geodetic=yes") != std::string::npos);
  CHECK(chk.out.find("diameter=5") != std::string::npos);
  CHECK(chk.out.find("checkers=agree") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("check --json is schema stable") {
  std::string path = tmp_path("c4.g6");
  {
    std::ofstream out(path);
    out << "Cr\n";  // C4
  }
  RunResult r = run("check --in " + path + " --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  for (const char* key : {"index", "n", "m", "sigma", "vertical", "checkers_agree", "geodetic",
                          "diameter", "radius", "girth", "min_degree", "connectivity"})
    CHECK(j[0].contains(key));
  CHECK(j[0]["geodetic"] == false);
  CHECK(j[0]["sigma"]["witness"]["u"] == 0);
  CHECK(j[0]["sigma"]["witness"]["path_a"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("verify-claims exit codes and output") {
  RunResult good = run("verify-claims --kind projective --q 2");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("[PASS]") != std::string::npos);
  CHECK(good.out.find("[FAIL]") == std::string::npos);

  RunResult js = run("verify-claims --kind affine --q 2 --json");
  CHECK(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["q"] == 2);
  CHECK(j["kind"] == "affine");
}

TEST_CASE("analyze-cut on a graph with a 2-cut") {
  std::string path = tmp_path("c6.g6");
  {
    std::ofstream out(path);
    out << "EhEG\n";  // C6
  }
  RunResult r = run("analyze-cut --in " + path + " --json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["profile"]["x"] == 0);
  CHECK(j["profile"]["y"] == 2);
  CHECK(j["profile"]["ell"] == 2);
  // C6 is not geodetic: both sides occupy diagonal 0
  CHECK(j["lemmas"]["all_hold"] == false);
  bool antipodal_violated = false;
  for (const auto& c : j["lemmas"]["checks"])
    if (c["lemma"] == "antipodal-emptiness" && c["status"] == "violated")
      antipodal_violated = true;
  CHECK(antipodal_violated);

  RunResult text = run("analyze-cut --in " + path);
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("ell=2") != std::string::npos);
  CHECK(text.out.find("VIOLATED") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("analyze-cut reports when no cut exists") {
  std::string path = tmp_path("petersen.g6");
  {
    std::ofstream out(path);
    out << "IheA@GUAo\n";
  }
  RunResult r = run("analyze-cut --in " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no 2-cut") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("scan with the cubic census predicate") {
  RunResult r = run("scan --in " + data_dir() + "/cubic12_14.g6 --predicate cubic-geodetic-census --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());  // no geodetic cubic blocks on 12 or 14 vertices
}

TEST_CASE("scan theorem1 over an enumerated range") {
  RunResult r = run("scan --enumerate 6 --predicate theorem1 --jobs 2");
  CHECK(r.exit_code == 0);
  int lines = 0;
  size_t pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 112);  // connected graphs on 6 vertices
  json first = json::parse(r.out.substr(0, r.out.find('\n')));
  for (const char* key :
       {"canonical", "n", "connectivity", "min_degree", "diameter", "girth", "geodetic"})
    CHECK(first.contains(key));
}

TEST_CASE("census subcommand") {
  RunResult r = run("census --max-n 10");
  CHECK(r.exit_code == 0);
  std::vector<json> records;
  size_t start = 0;
  while (start < r.out.size()) {
    size_t end = r.out.find('\n', start);
    if (end == std::string::npos) break;
    records.push_back(json::parse(r.out.substr(start, end - start)));
    start = end + 1;
  }
  REQUIRE(records.size() == 2);
  CHECK(records[0]["n"] == 4);
  CHECK(records[1]["n"] == 10);
  CHECK(records[1]["girth"] == 5);

  RunResult over = run("census --max-n 12");
  CHECK(over.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("construct flag --kind affine").exit_code == 2);           // missing --q
  CHECK(run("construct flag --kind euclidean --q 3").exit_code == 2);  // bad kind
  CHECK(run("check --in /nonexistent/file.g6").exit_code == 2);
  CHECK(run("scan --predicate theorem1").exit_code == 2);  // neither --in nor --enumerate
  CHECK(run("construct plane --kind affine --q 3 --format g6").exit_code == 2);
}

TEST_CASE("construct plane json and dot outputs") {
  RunResult r = run("construct plane --kind affine --q 2");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["q"] == 2);
  CHECK(j["points"].size() == 4);
  CHECK(j["lines"].size() == 6);
  CHECK(j["parallel_classes"].size() == 3);

  RunResult dot = run("construct levi --kind projective --q 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("graph G {") != std::string::npos);
  CHECK(dot.out.find("point:0") != std::string::npos);
  CHECK(dot.out.find("line:0") != std::string::npos);
}
