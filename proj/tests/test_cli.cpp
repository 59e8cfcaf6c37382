// Copyright 2026 The extractorlab authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <extractorlab/io.hpp>
#include <extractorlab/report.hpp>

#ifndef EXTRACTORLAB_CLI_PATH
#error "EXTRACTORLAB_CLI_PATH must point at the CLI binary"
#endif

using namespace extractorlab;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(EXTRACTORLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    res.stdout_text.append(buf, n);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xlab_test_" + name);
}

}  // namespace

TEST_CASE("certify: valid schema, expected certificate, exit 0") {
  const RunResult r = run_cli("certify --family hash --n 4 --m 2 --k 3");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.command == "certify");
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->lambda1_diff <= std::exp2(-4) + 1e-9);
  CHECK(rep.epsilon == doctest::Approx(rep.certificate->lambda1_diff * 4 * 16 /
                                       8.0));
}

TEST_CASE("certify: clifford family bound") {
  const RunResult r = run_cli("certify --family clifford --n 1 --m 1 --k 1");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.certificate->lambda1_diff <= 2.0 / (2.0 * 24.0) + 1e-9);
}

TEST_CASE("certify: m = 0 gives a zero certificate") {
  const RunResult r = run_cli("certify --family hash --n 4 --m 0 --k 0");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.certificate->lambda1_diff == 0.0);
  CHECK(rep.epsilon == 0.0);
}

TEST_CASE("verify: zero trials yields an empty list and exit 0") {
  const RunResult r =
      run_cli("verify --family hash --n 3 --m 1 --k 2 --trials 0 --seed 5");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.trial_errors.empty());
  CHECK(rep.violations == 0);
}

TEST_CASE("verify: identical seeds produce byte-identical reports") {
  const std::string args =
      "verify --family hash --n 3 --m 1 --k 2 --trials 8 --seed 99";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);
  const ExtractorReport rep = parse_report(a.stdout_text);
  CHECK(rep.trial_errors.size() == 8);
  CHECK(rep.violations == 0);

  const RunResult c = run_cli(
      "verify --family hash --n 3 --m 1 --k 2 --trials 8 --seed 100");
  CHECK(c.stdout_text != a.stdout_text);
}

TEST_CASE("witness: prop2 emits a loadable state and the bound holds") {
  const auto out = temp_file("prop2.state");
  const RunResult r = run_cli(
      "witness --kind prop2 --family hash --n 4 --m 2 --k 1 --out " +
      out.string());
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.violations == 0);
  CHECK(rep.results["formula_bound"].get<double>() <=
        rep.results["lambda1_diff"].get<double>() + 1e-9);

  std::ifstream in(out);
  REQUIRE(in.good());
  const BipartiteState state = read_state(in);
  CHECK(state.dim_n == 16);
  CHECK(state.kind == StateKind::ClassicalClassical);
  std::filesystem::remove(out);
}

TEST_CASE("witness: prop5 reports unit single-seed error") {
  const RunResult r =
      run_cli("witness --kind prop5 --family clifford --n 1 --m 1");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(std::abs(rep.results["single_seed_error"].get<double>() - 1.0) <=
        1e-9);
  CHECK(rep.results["hmin"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("witness: prop4 with k = n degenerates to a zero bound") {
  const RunResult r = run_cli(
      "witness --kind prop4 --family clifford --n 1 --m 1 --k 1");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.results["formula_bound"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("shortseed: deterministic reports and m = 0 zeros") {
  const std::string args =
      "shortseed --n 4 --k 2 --m 1 --d 3 --trials 5 --seed 12";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);

  const RunResult z =
      run_cli("shortseed --n 4 --k 2 --m 0 --d 3 --trials 4 --seed 12");
  const ExtractorReport rep = parse_report(z.stdout_text);
  for (double e : rep.trial_errors) CHECK(e < 1e-12);
}

TEST_CASE("design-check: clifford passes, sampled haar family does not") {
  const RunResult r = run_cli("design-check --family clifford --n 1");
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.results["deviation"].get<double>() <= 1e-10);

  const RunResult h =
      run_cli("design-check --family haar --n 1 --m 1 --d 2 --seed 3");
  CHECK(h.exit_code == 1);
  const ExtractorReport hrep = parse_report(h.stdout_text);
  CHECK(hrep.results["deviation"].get<double>() > 1e-10);
  CHECK(hrep.violations == 1);
}

TEST_CASE("entropy: reads a state file and reports the SDP values") {
  const auto path = temp_file("maxent.state");
  {
    std::ofstream out(path);
    write_state(out, maximally_entangled(2));
  }
  const RunResult r = run_cli("entropy " + path.string());
  CHECK(r.exit_code == 0);
  const ExtractorReport rep = parse_report(r.stdout_text);
  CHECK(rep.results["hmin_cond"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.results["h2_cond"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.results["sdp_gap"].get<double>() <= 1e-6);
  std::filesystem::remove(path);
}

TEST_CASE("family files: the CLI accepts file: sources") {
  const auto path = temp_file("fam.txt");
  {
    std::ofstream out(path);
    write_function_family(out, hash_family(3, 1));
  }
  const RunResult r =
      run_cli("certify --family file:" + path.string() + " --k 2");
  CHECK(r.exit_code == 0);
  const ExtractorReport direct = parse_report(
      run_cli("certify --family hash --n 3 --m 1 --k 2").stdout_text);
  const ExtractorReport via_file = parse_report(r.stdout_text);
  CHECK(via_file.certificate->lambda1_diff ==
        direct.certificate->lambda1_diff);
  std::filesystem::remove(path);
}

TEST_CASE("witness: non-integer k is rejected, never rounded") {
  CHECK(run_cli("witness --kind prop2 --family hash --n 4 --m 2 --k 1.5")
            .exit_code == 2);
  CHECK(run_cli("witness --kind prop4 --family clifford --n 1 --m 1 --k 0.25")
            .exit_code == 2);
}

TEST_CASE("clifford cache: EXTRACTORLAB_CACHE persists the group") {
  const auto dir = temp_file("cache_dir");
  std::filesystem::create_directories(dir);
  const std::string cmd = "EXTRACTORLAB_CACHE=" + dir.string() + " " +
                          std::string(EXTRACTORLAB_CLI_PATH) +
                          " certify --family clifford --n 1 --m 1 --k 1 "
                          ">/dev/null 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream cached(dir / "clifford1.ufam");
  REQUIRE(cached.good());
  const UnitaryFamily fam = read_unitary_family(cached);
  CHECK(fam.count() == 24);
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit codes: parse, overflow, infeasible") {
  CHECK(run_cli("certify --family nosuch --n 3 --m 1 --k 2").exit_code == 2);
  CHECK(run_cli("certify --family hash").exit_code == 2);  // missing --k
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("entropy /no/such/file.state").exit_code == 2);

  // 2^11 exceeds the spectral-certificate cap.
  CHECK(run_cli("certify --family hash --n 11 --m 2 --k 3").exit_code == 3);

  // A family whose first member is constant cannot host a spread witness.
  const auto path = temp_file("constfam.txt");
  {
    FunctionFamily constant;
    constant.n = 2;
    constant.m = 2;
    constant.tables = {{0, 0, 0, 0}, {0, 1, 2, 3}};
    std::ofstream out(path);
    write_function_family(out, constant);
  }
  CHECK(run_cli("witness --kind prop2 --family file:" + path.string() +
                " --k 2")
            .exit_code == 4);
  std::filesystem::remove(path);
}
