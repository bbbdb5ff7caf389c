// Copyright 2026 The symzero Authors
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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SYMZERO_CLI_PATH
#error "SYMZERO_CLI_PATH must point at the built CLI binary"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(SYMZERO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("solve subcommand") {
  write_file("/tmp/symzero_rps.game", "# rps\n3\n1 -1 1\n");
  CHECK(run("solve /tmp/symzero_rps.game") == 0);
  CHECK(run("solve /tmp/symzero_rps.game --report csv") == 0);
  CHECK(run("solve /tmp/does_not_exist.game") == 2);

  write_file("/tmp/symzero_bad.game", "3\n1 -1\n");
  CHECK(run("solve /tmp/symzero_bad.game") == 2);
}

TEST_CASE("census subcommand with reports is deterministic") {
  const std::string flags =
      "census --dist odd-int --n 3 --trials 3000 --seed 42 --min-trials 1000";
  CHECK(run(flags + " --out /tmp/symzero_census1.json --format json") == 0);
  CHECK(run(flags + " --workers 3 --out /tmp/symzero_census2.json --format json") == 0);
  CHECK(slurp("/tmp/symzero_census1.json") == slurp("/tmp/symzero_census2.json"));

  const auto parsed = nlohmann::json::parse(slurp("/tmp/symzero_census1.json"));
  CHECK(parsed["pass"] == true);
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["supports"].size() == 7);

  CHECK(run(flags + " --out /tmp/symzero_census.csv --format csv") == 0);
  const std::string csv = slurp("/tmp/symzero_census.csv");
  CHECK(csv.rfind("mask,", 0) == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("census --dist nonsense --n 3") == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("conditional --dist odd-int --n 3 --trials 1500") == 2);  // missing --set
}

TEST_CASE("even conditioning set reports an empty condition") {
  CHECK(run("conditional --dist odd-int --n 3 --set {1,2} --trials 1500 --seed 5") == 1);
}

TEST_CASE("totally-mixed and tournament-exact and two-by-two") {
  CHECK(run("totally-mixed --dist odd-int --n 4 --trials 1500 --seed 2") == 0);
  CHECK(run("tournament-exact --n 3") == 0);
  CHECK(run("two-by-two --trials 10000 --seed 1") == 0);
  CHECK(run("two-by-two --trials 50 --seed 1") == 2);  // below the 10^4 precondition
}

TEST_CASE("config file provides defaults, flags override") {
  write_file("/tmp/symzero_cfg.json",
             R"({"dist":"odd-int","n":3,"trials":2000,"seed":7,"min-trials":1000,)"
             R"("out":"/tmp/symzero_cfg_out.json","format":"json"})");
  CHECK(run("census --config /tmp/symzero_cfg.json") == 0);
  const auto from_cfg = nlohmann::json::parse(slurp("/tmp/symzero_cfg_out.json"));
  CHECK(from_cfg["seed"] == 7);
  CHECK(from_cfg["trials"] == 2000);

  // A flag beats the file.
  CHECK(run("census --config /tmp/symzero_cfg.json --seed 8") == 0);
  const auto overridden = nlohmann::json::parse(slurp("/tmp/symzero_cfg_out.json"));
  CHECK(overridden["seed"] == 8);

  CHECK(run("census --config /tmp/missing_config.json") == 2);
}

TEST_CASE("symmetrized rps census passes") {
  CHECK(run("census --dist symmetrized --base rps --n 3 --trials 2000 --seed 3 "
            "--min-trials 1000") == 0);
}
