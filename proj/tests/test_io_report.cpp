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

#include <sstream>

#include <extractorlab/io.hpp>
#include <extractorlab/report.hpp>

using namespace extractorlab;

TEST_CASE("format_double: shortest form round-trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.0, -0.0, 3.584962500721156,
                   1.0 / 7.0, 1e300}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("function family: write/read is the identity") {
  const FunctionFamily fam = hash_family(3, 2);
  std::stringstream buf;
  write_function_family(buf, fam);
  const FunctionFamily back = read_function_family(buf);
  CHECK(back.n == fam.n);
  CHECK(back.m == fam.m);
  CHECK(back.mode == fam.mode);
  REQUIRE(back.tables == fam.tables);

  // Byte-level: rewriting the parsed family reproduces the file.
  std::stringstream again;
  write_function_family(again, back);
  std::stringstream first;
  write_function_family(first, fam);
  CHECK(again.str() == first.str());
}

TEST_CASE("function family: non-power-of-two member count") {
  const FunctionFamily fam = pairwise_permutations(2);  // 12 members
  std::stringstream buf;
  write_function_family(buf, fam);
  const std::string text = buf.str();
  CHECK(text.find("3.584962500721156") != std::string::npos);
  std::stringstream in(text);
  const FunctionFamily back = read_function_family(in);
  CHECK(back.count() == 12);
  CHECK(back.tables == fam.tables);
}

TEST_CASE("unitary family: bit-exact round trip") {
  Rng rng(50);
  UnitaryFamily fam;
  fam.n = 2;
  fam.m = 1;
  fam.mode = Mode::Weak;
  for (int i = 0; i < 3; ++i) fam.unitaries.push_back(haar_unitary(4, rng));

  std::stringstream buf;
  write_unitary_family(buf, fam);
  const UnitaryFamily back = read_unitary_family(buf);
  CHECK(back.n == 2);
  CHECK(back.m == 1);
  CHECK(back.mode == Mode::Weak);
  REQUIRE(back.count() == 3);
  for (size_t i = 0; i < 3; ++i) {
    // Exact equality: shortest-round-trip formatting.
    CHECK((back.unitaries[i].array() == fam.unitaries[i].array()).all());
  }
}

TEST_CASE("read_family_auto distinguishes the two formats") {
  std::stringstream f1;
  write_function_family(f1, hash_family(2, 1));
  CHECK(std::holds_alternative<FunctionFamily>(read_family_auto(f1)));

  Rng rng(51);
  UnitaryFamily fam;
  fam.n = 1;
  fam.m = 1;
  fam.unitaries = {haar_unitary(2, rng)};
  std::stringstream f2;
  write_unitary_family(f2, fam);
  CHECK(std::holds_alternative<UnitaryFamily>(read_family_auto(f2)));

  std::stringstream junk("1 1 zzz strong\n0 1\n");
  CHECK_THROWS_AS((void)read_family_auto(junk), ParseError);
}

TEST_CASE("read_function_family rejects malformed input") {
  std::stringstream missing("3 2 3 strong\n0 1 2 3 0 1 2 3\n");
  CHECK_THROWS_AS((void)read_function_family(missing), ParseError);

  std::stringstream range("1 0 1 strong\n0 1\n");
  CHECK_THROWS_AS((void)read_function_family(range), ParseError);

  std::stringstream badmode("1 1 1 loud\n0 1\n");
  CHECK_THROWS_AS((void)read_function_family(badmode), ParseError);

  // Header d must match the row count.
  std::stringstream wrongd("1 1 3 strong\n0 1\n1 0\n");
  CHECK_THROWS_AS((void)read_function_family(wrongd), ParseError);
}

TEST_CASE("state file round trip across kinds") {
  Rng rng(52);
  for (auto kind : {StateKind::ClassicalClassical, StateKind::ClassicalQuantum,
                    StateKind::QuantumQuantum}) {
    const BipartiteState st = random_bipartite(4, 2, kind, rng);
    std::stringstream buf;
    write_state(buf, st);
    const BipartiteState back = read_state(buf);
    CHECK(back.dim_n == 4);
    CHECK(back.dim_r == 2);
    CHECK(back.kind == kind);
    CHECK((back.rho.array() == st.rho.array()).all());
  }

  const ClassicalState p(RVec::Constant(4, 0.25));
  std::stringstream buf;
  write_classical_state(buf, p);
  const BipartiteState back = read_state(buf);
  CHECK(back.kind == StateKind::ClassicalClassical);
  CHECK(back.dim_r == 1);
  CHECK(back.rho(2, 2).real() == 0.25);

  std::stringstream rejected("2 1 qq\n1 0 0 0 0 0 1 0\n");  // trace 2
  CHECK_THROWS_AS((void)read_state(rejected), ParseError);
}

TEST_CASE("report: canonical text validates and round-trips") {
  ExtractorReport rep;
  rep.command = "certify";
  rep.parameters = {{"n", 4}, {"m", 2}, {"k", 3.0}, {"family", "hash"},
                    {"mode", "strong"}, {"d", 4.0}};
  rep.rng_seed = 17;
  SpectralCertificate cert;
  cert.lambda1_diff = 0.046875;
  cert.lambda2_psi = 0.046875;
  rep.certificate = cert;
  rep.epsilon = 0.375;
  rep.quantum_error_bound = 1.224744871391589;
  rep.trial_errors = {0.5, 0.25};
  rep.results["family_size"] = 16.0;

  const std::string text = rep.canonical_text();
  const ExtractorReport back = parse_report(text);
  CHECK(back.command == "certify");
  CHECK(back.rng_seed == 17);
  CHECK(back.certificate->lambda1_diff == 0.046875);
  CHECK(back.trial_errors == rep.trial_errors);

  // Canonical: serialize(parse(text)) == text.
  CHECK(back.canonical_text() == text);

  // Identical content => identical bytes.
  CHECK(rep.canonical_text() == rep.to_json().dump(2) + "\n");
}

TEST_CASE("report schema: unknown and malformed fields rejected") {
  ExtractorReport rep;
  rep.command = "verify";
  rep.rng_seed = 1;

  nlohmann::json good = rep.to_json();
  CHECK(!report_schema_error(good).has_value());

  nlohmann::json extra = good;
  extra["debug"] = true;
  CHECK(report_schema_error(extra).has_value());

  nlohmann::json missing = good;
  missing.erase("violations");
  CHECK(report_schema_error(missing).has_value());

  nlohmann::json wrong_schema = good;
  wrong_schema["schema"] = "extractorlab/report/v0";
  CHECK(report_schema_error(wrong_schema).has_value());

  nlohmann::json bad_cmd = good;
  bad_cmd["command"] = "frobnicate";
  CHECK(report_schema_error(bad_cmd).has_value());

  nlohmann::json bad_param = good;
  bad_param["parameters"]["unexpected"] = 1;
  CHECK(report_schema_error(bad_param).has_value());

  nlohmann::json bad_cert = good;
  bad_cert["certificate"] = {{"lambda1_diff", 0.0}};
  CHECK(report_schema_error(bad_cert).has_value());

  nlohmann::json negative = good;
  negative["violations"] = -3;
  CHECK(report_schema_error(negative).has_value());

  CHECK_THROWS_AS((void)parse_report("{ not json"), std::runtime_error);
  CHECK_THROWS_AS((void)parse_report(extra.dump()), std::runtime_error);
}
