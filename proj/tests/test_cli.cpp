#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bqm/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bqm::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expectation table over GF(3)") {
  const auto r = run({"--p", "3", "--degree", "1", "tables"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "|  | σ1 | Δσ1 | σ3 | Δσ3 |\n"
        "|---|---:|---:|---:|---:|\n"
        "| \\|a⟩ | 0 | 1 | 1 | 0 |\n"
        "| \\|b⟩ | 0 | 1 | -1 | 0 |\n"
        "| \\|c⟩ | 1 | 0 | 0 | 1 |\n"
        "| \\|d⟩ | -1 | 0 | 0 | 1 |\n");
}

TEST_CASE("expectation table over GF(9)") {
  const auto r = run({"tables"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "|  | σ1 | Δσ1 | σ2 | Δσ2 | σ3 | Δσ3 |\n"
        "|---|---:|---:|---:|---:|---:|---:|\n"
        "| \\|a⟩ | 0 | 1 | 0 | 1 | 1 | 0 |\n"
        "| \\|b⟩ | 0 | 1 | 0 | 1 | -1 | 0 |\n"
        "| \\|c⟩ | 1 | 0 | 0 | 1 | 0 | 1 |\n"
        "| \\|d⟩ | -1 | 0 | 0 | 1 | 0 | 1 |\n"
        "| \\|e⟩ | 0 | 1 | 1 | 0 | 0 | 1 |\n"
        "| \\|f⟩ | 0 | 1 | -1 | 0 | 0 | 1 |\n");
}

TEST_CASE("CHSH tally") {
  const auto r = run({"chsh", "--scan"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "| state | 0 | 1 | 2 | 3 | 4 |\n"
        "|---|---:|---:|---:|---:|---:|\n"
        "| \\|S⟩ | 6 | 24 | 6 | 0 | 0 |\n"
        "| \\|T⟩ | 6 | 18 | 6 | 6 | 0 |\n"
        "| \\|U⟩ | 12 | 12 | 4 | 4 | 4 |\n");
}

TEST_CASE("canonical probabilities") {
  const auto r = run({"canonical", "--table4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "|  | ++ | +- | -+ | -- | E.V. |\n"
        "|---|---:|---:|---:|---:|---:|\n"
        "| \\|S\u0303⟩ | 0 | 1/2 | 1/2 | 0 | -1 |\n"
        "| \\|T\u0303⟩ | 1/4 | 0 | 1/2 | 1/4 | 0 |\n"
        "| \\|U\u0303⟩ | 1/4 | 0 | 1/4 | 1/2 | +1/2 |\n");
}

TEST_CASE("bounds") {
  CHECK(run({"chsh", "--bound"}).out == "4\n");
  CHECK(run({"--p", "3", "--degree", "1", "chsh", "--bound"}).out == "2\n");
}

TEST_CASE("single CHSH value") {
  const auto r = run({"chsh", "--state", "U", "--axes", "1,3,3,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "chsh-value");
}

TEST_CASE("verify-phi") {
  const auto r = run({"verify-phi", "--p", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unique: true") != std::string::npos);
}

TEST_CASE("census JSON") {
  const auto r = run({"--format", "json", "census"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "census");
  CHECK(j["inequivalent"] == 820);
  CHECK(j["product"] == 100);
  CHECK(j["entangled_physical"] == 504);
  const auto c = run({"--format", "csv", "census"});
  CHECK(c.code == 0);
  CHECK(c.out.find("504") != std::string::npos);
}

TEST_CASE("output is byte-for-byte deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"--format", "json", "groups"},
                                                               {"--format", "json", "orbits", "--mode", "global"},
                                                               {"--format", "json", "infer", "--state", "U"},
                                                               {"--format", "json", "mimic", "--state", "T"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("orbits with an empty size filter") {
  const auto r = run({"--p", "3", "--degree", "1", "--format", "json", "orbits", "--size", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbits"].empty());
  CHECK(j["orbit_count"] == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--p", "5", "tables"}).code == 2);
  CHECK(run({"--p", "3", "--degree", "3", "tables"}).code == 2);
  CHECK(run({"--format", "yaml", "tables"}).code == 2);
  CHECK(run({"chsh", "--axes", "1,1,3,1"}).code == 2);
  CHECK(run({"infer", "--state", "nonsense"}).code == 2);
  CHECK(run({"--output", "/nonexistent/dir/out.txt", "tables"}).code == 2);
  const auto e = run({"bogus"});
  CHECK(e.out.empty());
  CHECK(!e.err.empty());
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("--output writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "bqm_cli_output_test.md";
  std::filesystem::remove(path);
  const auto r = run({"--output", path.string(), "chsh", "--bound"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "4\n");
  std::filesystem::remove(path);
}
