// Copyright 2026 The abelspec Authors.
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

#ifndef ABELSPEC_PROBLEM_HPP_
#define ABELSPEC_PROBLEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelspec/fourier.hpp"
#include "abelspec/sumset.hpp"
#include "abelspec/walks.hpp"

namespace abelspec {

// Exit statuses of a run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitOracle = 3;

struct RunOptions {
  bool oracle = false;
  std::optional<double> tol;
  std::optional<double> tol_distinct;
  std::optional<std::vector<std::int64_t>> m;
  std::optional<std::vector<double>> eps;
};

struct WalkProduct {
  std::vector<GroupFunction> components;
  std::vector<double> weights;
};

struct WalkSweep {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
};

struct Problem {
  int version = 1;
  std::string task;
  bool oracle = false;
  std::optional<double> tol;
  std::optional<double> tol_distinct;
  std::optional<FiniteAbelianGroup> group;
  std::optional<GroupFunction> function;  // function / weights / p
  std::string function_mode;
  // nu2-bound and walk
  std::optional<std::vector<std::int64_t>> m;
  std::int64_t budget = 1'000'000;
  // walk
  std::vector<double> eps;
  GenerationMode condition = GenerationMode::kLiteral;
  std::optional<WalkProduct> product;
  std::optional<WalkSweep> sweep;
  bool csv = false;
  // sumset
  std::optional<SymmetricSet> set_a;
  std::optional<SymmetricSet> set_b;
  std::optional<std::vector<double>> weights_a;
  std::optional<std::vector<double>> weights_b;
  std::optional<std::vector<std::int64_t>> integers;
  std::int64_t sumset_m = 5;
  // expected report values, by dotted path
  std::vector<std::pair<std::string, double>> expect;
  double expect_tol = 1e-9;
};

// Validates and converts a problem file. Throws Error with SchemaError,
// UnknownTask, UnknownField or a group/function construction code.
Problem ParseProblem(const std::string& text);

struct RunOutcome {
  int exit_code = kExitOk;
  std::string report;       // JSON, empty when parsing failed
  std::string diagnostics;  // for standard error
};

// Parse errors exit 1, computation errors exit 2, failed oracle or expect
// checks exit 3. Numbers in the report carry 12 significant digits; the
// "timing" member is the only non-deterministic part.
RunOutcome RunProblem(const std::string& text, const RunOptions& options);

}  // namespace abelspec

#endif  // ABELSPEC_PROBLEM_HPP_
