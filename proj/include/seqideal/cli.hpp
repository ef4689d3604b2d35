// Copyright 2026 The seqideal Authors
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

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 verification mismatch.

#ifndef SEQIDEAL_CLI_HPP_
#define SEQIDEAL_CLI_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqideal/field.hpp"

namespace seqideal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// --- rueppel --verify ----------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Names accepted by --verify, in execution order (excluding "all").
const std::vector<std::string>& rueppel_check_names();

// Runs one named check on r_0..r_{n-1}; throws std::invalid_argument for an
// unknown name.
CheckResult run_rueppel_check(const std::string& name, int n);

// Runs the checks, `jobs` at a time; results keep the order of `names`.
std::vector<CheckResult> run_rueppel_checks(const std::vector<std::string>& names, int n, int jobs);

// --- bench -----------------------------------------------------------------------

struct BenchRow {
  std::string impl;
  int n = 0;
  std::int64_t nanos = 0;
  int lambda = 0;
};

// Median wall time of `repeats` runs of `impl` ("vop", "ralg" or "bm") at
// length n. vop and bm read a random GF(2) sequence drawn from `seed` and n;
// ralg reads the Rueppel prefix.
BenchRow bench_one(const std::string& impl, int n, std::uint64_t seed, int repeats);

// --- profile --random-plcp -----------------------------------------------------------

// A GF(2) sequence whose discrepancy is forced to 1 at every odd k and drawn
// from a seeded generator at every even k, which yields a perfect linear
// complexity profile.
std::vector<bool> random_plcp_sequence(int n, std::uint64_t seed);

}  // namespace seqideal

#endif  // SEQIDEAL_CLI_HPP_
