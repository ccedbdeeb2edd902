// Copyright 2026 The levyexit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace levyexit;
using namespace levyexit::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) {
    lines.push_back(line);
  }
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("levyexit_test_" + tag + "_" + std::to_string(std::hash<std::string>{}(tag + __TIME__)));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("met profile on stdout") {
    const Run r = run({"met", "--alpha", "1.5", "--beta", "0", "--J", "160", "--jobs", "1"});
    REQUIRE(r.code == kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 322);
    CHECK(lines.front() == "x,u");
    CHECK(lines[1] == "-1,0");
    CHECK(lines.back() == "1,0");
    const std::string middle = lines[161];
    CHECK(middle.rfind("0,", 0) == 0);
    CHECK(std::abs(std::stod(middle.substr(2)) - 0.752252) < 5e-3);
  }

  TEST_CASE("negative values parse") {
    const Run r = run({"escape", "--alpha", "0.5", "--beta", "-0.5", "--J", "20", "--drift", "linear:-1"});
    CHECK(r.code == kExitOk);
    CHECK(lines_of(r.out).front() == "x,p");
    CHECK(lines_of(r.out).back() == "1,1");
  }

  TEST_CASE("usage and validation errors exit with 1") {
    CHECK(run({"met", "--alpha", "2.5"}).code == kExitUsage);
    CHECK(run({"met", "--alpha", "0"}).code == kExitUsage);
    CHECK(run({"met", "--beta", "1.5"}).code == kExitUsage);
    CHECK(run({"met", "--b", "0"}).code == kExitUsage);
    CHECK(run({"met", "--d", "-1"}).code == kExitUsage);
    CHECK(run({"met", "--eps", "-1"}).code == kExitUsage);
    CHECK(run({"met", "--eps", "0", "--d", "0"}).code == kExitUsage);
    CHECK(run({"met", "--J", "1"}).code == kExitUsage);
    CHECK(run({"met", "--drift", "cubic"}).code == kExitUsage);
    CHECK(run({"met", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"met", "--bogus"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    const Run bad = run({"met", "--alpha", "2.5"});
    CHECK(bad.err.find("alpha") != std::string::npos);
    CHECK(bad.out.empty());
  }

  TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == kExitOk); }

  TEST_CASE("solver failure exits with 2") {
    const Run r =
        run({"met", "--J", "40", "--no-fallback", "--max-iters", "3", "--tol", "1e-30", "--restart", "3"});
    CHECK(r.code == kExitSolver);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("json profile") {
    const Run r = run({"escape", "--alpha", "1.5", "--J", "10", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["x"].size() == 21);
    CHECK(doc["p"].size() == 21);
    CHECK(doc["J"] == 10);
    CHECK(doc["exterior"]["right"] == 1.0);
    CHECK(doc["problem"]["alpha"] == 1.5);
    CHECK(std::abs(doc["p"][10].get<double>() - 0.5) < 1e-8);
  }

  TEST_CASE("profile csv layout and precision") {
    SolutionProfile profile;
    profile.J = 1;
    profile.x_nodes = {-1.0, 0.0, 1.0};
    profile.values = {0.0, 0.123456789012345, 1.0};
    profile.spec.kind = ProblemKind::escape_right;
    const auto lines = lines_of(emit_profile(profile, OutputFormat::csv));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "x,p");
    CHECK(lines[2] == "0,0.123456789012");
    CHECK(std::abs(std::stod(lines[2].substr(2)) - 0.123456789012345) < 1e-11);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_format("tsv"), std::invalid_argument);
  }

  TEST_CASE("output file and config precedence") {
    TempDir dir("config");
    const auto config = dir.path / "run.cfg";
    std::ofstream(config) << "# comment\nalpha = 0.5\nJ = 8\nbeta=0.25\n";
    const auto entries = read_config_file(config);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0] == std::pair<std::string, std::string>{"alpha", "0.5"});
    CHECK(entries[2] == std::pair<std::string, std::string>{"beta", "0.25"});

    const auto out = dir.path / "profile.json";
    const Run r = run({"met", "--config", config.string(), "--J", "10", "--format", "json", "--out", out.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["J"] == 10);
    CHECK(doc["problem"]["alpha"] == 0.5);
    CHECK(doc["problem"]["beta"] == 0.25);

    CHECK(run({"met", "--config", (dir.path / "missing.cfg").string()}).code == kExitUsage);
    CHECK(run({"met", "--J", "6", "--out", (dir.path / "no" / "such" / "dir" / "x.csv").string()}).code ==
          kExitUsage);
  }

  TEST_CASE("monte carlo subcommand") {
    const Run r = run({"mc", "--alpha", "1.5", "--x0", "0.3", "--paths", "200", "--dt", "1e-3", "--seed", "4"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["x0"] == 0.3);
    CHECK(doc["config"]["paths"] == 200);
    CHECK(doc["met"]["mean"].get<double>() > 0.0);
    const double p = doc["escape_right"]["mean"].get<double>();
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(run({"mc", "--x0", "1.0"}).code == kExitUsage);
    CHECK(run({"mc", "--paths", "0"}).code == kExitUsage);
    const Run again = run({"mc", "--alpha", "1.5", "--x0", "0.3", "--paths", "200", "--dt", "1e-3", "--seed", "4"});
    CHECK(again.out == r.out);
  }

  TEST_CASE("verification subcommands") {
    const Run m = run({"verify-manufactured", "--alpha", "1.5", "--J-list", "10", "20", "--probe", "-0.5"});
    REQUIRE(m.code == kExitOk);
    const auto lines = lines_of(m.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "J,error,order");
    CHECK(lines[1].rfind("10,", 0) == 0);
    CHECK(run({"verify-manufactured", "--J-list", "10", "20", "--probe", "0.33"}).code == kExitUsage);
    CHECK(run({"verify-convergence", "--J-list", "10", "20", "--J-ref", "40"}).code == kExitUsage);
  }

  TEST_CASE("sweep writes one file per value") {
    TempDir dir("sweep");
    const Run r = run({"sweep", "--kind", "met", "--param", "alpha", "--values", "0.5", "1.5", "--J", "8", "--out",
                       dir.path.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(std::filesystem::exists(dir.path / "met_alpha_0.5.csv"));
    CHECK(std::filesystem::exists(dir.path / "met_alpha_1.5.csv"));
    const Run drift = run({"sweep", "--kind", "escape", "--param", "drift", "--values", "zero", "linear:-1", "--J",
                           "8", "--out", dir.path.string()});
    REQUIRE(drift.code == kExitOk);
    CHECK(std::filesystem::exists(dir.path / "escape_right_drift_linear_-1.csv"));
    CHECK(run({"sweep", "--kind", "met", "--param", "alpha", "--values", "0.5", "3", "--out", dir.path.string()})
              .code == kExitUsage);
  }

  TEST_CASE("figure data is reproducible") {
    TempDir dir("figure");
    const Run first = run({"figure", "fig5", "--J", "8", "--out", dir.path.string()});
    REQUIRE(first.code == kExitOk);
    const auto paths = lines_of(first.out);
    REQUIRE(paths.size() == 3);
    std::vector<std::string> contents;
    for (const auto& p : paths) {
      contents.push_back(slurp(p));
      CHECK(lines_of(contents.back()).front() == "x,beta=0,beta=0.5,beta=1");
      CHECK(lines_of(contents.back()).size() == 18);
    }
    const Run second = run({"figure", "fig5", "--J", "8", "--out", dir.path.string(), "--jobs", "3"});
    REQUIRE(second.code == kExitOk);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      CHECK(slurp(paths[i]) == contents[i]);
    }
    CHECK(run({"figure", "fig99"}).code == kExitUsage);
  }
}
