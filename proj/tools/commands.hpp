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

#ifndef EXTRACTORLAB_TOOLS_COMMANDS_HPP
#define EXTRACTORLAB_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>

namespace extractorlab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitOverflow = 3;
inline constexpr int kExitInfeasible = 4;

struct Args {
  int n = 0;
  int m = 0;
  double k = 0.0;
  bool k_set = false;
  int d = -1;
  std::string family = "hash";
  std::string mode = "strong";
  int trials = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string kind;        // witness selector
  std::string state_path;  // entropy input
};

int run_certify(const Args& a);
int run_verify(const Args& a);
int run_witness(const Args& a);
int run_shortseed(const Args& a);
int run_design_check(const Args& a);
int run_entropy(const Args& a);

}  // namespace extractorlab::cli

#endif  // EXTRACTORLAB_TOOLS_COMMANDS_HPP
