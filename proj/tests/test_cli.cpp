// Copyright 2026 The nmteleport authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

const char* cli_path() {
  const char* path = std::getenv("NMTELEPORT_CLI");
  REQUIRE_MESSAGE(path != nullptr,
                  "NMTELEPORT_CLI must point at the CLI binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    output.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot read " << path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path golden_dir() {
  const char* dir = std::getenv("NMTELEPORT_GOLDEN_DIR");
  REQUIRE_MESSAGE(dir != nullptr,
                  "NMTELEPORT_GOLDEN_DIR must point at tests/golden");
  return fs::path(dir);
}

}  // namespace

TEST_CASE("help text is pinned byte for byte") {
  const RunResult main_help = run_cli("--help");
  CHECK(main_help.exit_code == 0);
  CHECK(main_help.output == read_file(golden_dir() / "help_main.txt"));

  // exp1's footer enumerates every config key with its units.
  const RunResult exp_help = run_cli("exp1 --help");
  CHECK(exp_help.exit_code == 0);
  CHECK(exp_help.output == read_file(golden_dir() / "help_exp1.txt"));
}

TEST_CASE("kappa reports the ideal recovery point exactly") {
  const RunResult r = run_cli("kappa --k -1 --ta-units 100 --tb-units 100");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "|kappa| = 1.000000000000\n"
        "phase_rad = 0.000000000000\n");
}

TEST_CASE("teleport without noise reports unit fidelity") {
  const RunResult r = run_cli(
      "teleport --input rho_plus --outcome psi_plus --k -1 "
      "--ta-units 0 --tb-units 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "outcome = psi_plus\n"
        "fidelity = 1.000000000000\n");
}

TEST_CASE("validation failures exit with code 2 and name the key") {
  const RunResult unknown_key = run_cli("exp2 --set quartz_mm=2");
  CHECK(unknown_key.exit_code == 2);
  CHECK(unknown_key.output.find("quartz_mm") != std::string::npos);

  const RunResult bad_value = run_cli("exp2 --set k=very");
  CHECK(bad_value.exit_code == 2);
  CHECK(bad_value.output.find("'k'") != std::string::npos);

  const RunResult bad_flag = run_cli("kappa --quartz 3");
  CHECK(bad_flag.exit_code == 2);

  const RunResult bad_outcome = run_cli("teleport --outcome sigma");
  CHECK(bad_outcome.exit_code == 2);

  const RunResult missing_config = run_cli("exp1 --config /not/there.cfg");
  CHECK(missing_config.exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical files") {
  const fs::path dir = fs::temp_directory_path() / "nmteleport_cli_test";
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "k = -0.98\nn_points = 4\ninputs = rho_plus,rho_i\n"
           "tomography_shots = 1500\ntomography_resamples = 100\nseed = 3\n";
  }
  const fs::path out1 = dir / "a.csv";
  const fs::path out2 = dir / "b.csv";
  const std::string args = "exp2 --config " + cfg.string() + " --output ";
  CHECK(run_cli(args + out1.string()).exit_code == 0);
  CHECK(run_cli(args + out2.string()).exit_code == 0);
  CHECK(read_file(out1) == read_file(out2));
  CHECK(read_file(out1).rfind("x_units_808nm,outcome,input,fidelity,error_bar",
                              0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("verify subcommand passes its own oracle bounds") {
  const RunResult r = run_cli("verify --samples 40000 --quad-points 128");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verify: PASS") != std::string::npos);
}

TEST_CASE("revival subcommand separates correlated from uncorrelated") {
  const RunResult corr = run_cli("revival --k -1");
  CHECK(corr.exit_code == 0);
  CHECK(corr.output.find("non_markovian = true") != std::string::npos);
  const RunResult uncorr = run_cli("revival --k 0");
  CHECK(uncorr.exit_code == 0);
  CHECK(uncorr.output.find("non_markovian = false") != std::string::npos);
}
