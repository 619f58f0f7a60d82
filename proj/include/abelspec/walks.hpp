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

#ifndef ABELSPEC_WALKS_HPP_
#define ABELSPEC_WALKS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "abelspec/fourier.hpp"

namespace abelspec {

// kLiteral: for every x, {x + y : y in supp(p)} generates G.
// kIrreducible: supp(p) generates G.
enum class GenerationMode { kLiteral, kIrreducible };

struct WalkSpec {
  FiniteAbelianGroup group;
  std::vector<double> p;
  bool condition_a = false;          // p(x) = p(-x)
  bool condition_b_literal = false;  // per-x translated support generates G
  bool generates = false;            // supp(p) generates G
  std::optional<ElementIndex> literal_failure;
  GenerationMode mode = GenerationMode::kLiteral;
};

// Simplex tolerance 1e-12. Throws NotProbability, NotSymmetric, or
// NotGenerating (naming the failing x in literal mode).
WalkSpec ValidateWalk(const GroupFunction& p,
                      GenerationMode mode = GenerationMode::kLiteral);

// p = (delta_1 + delta_{-1}) / 2 on Z/n.
GroupFunction CycleWalk(std::int64_t n);

struct WalkEigenvalue {
  double lambda = 0.0;
  ElementIndex character = 0;
};

// lambda(a) = sum_x p(x) cos(2 pi a.x), sorted descending (ties by index).
std::vector<WalkEigenvalue> WalkSpectrum(const WalkSpec& spec);

// Distribution after l steps from the identity, via spectral powers.
std::vector<double> StepDistribution(const WalkSpec& spec, std::int64_t l);
// || p^(l) - uniform ||_TV.
double TotalVariation(const WalkSpec& spec, std::int64_t l);

inline constexpr std::int64_t kMixingCap = 10'000'000;

struct ChainTimes {
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double t_rel = 0.0;
  double t_rel_star = 0.0;  // +inf for periodic chains
  bool periodic = false;
  std::vector<double> eps;
  std::vector<std::optional<std::int64_t>> t_mix;  // absent when periodic
};

ChainTimes ComputeChainTimes(const WalkSpec& spec, const std::vector<double>& eps);
// Exact T_mix(eps) for an aperiodic chain by doubling then bisection.
std::int64_t MixingTime(const WalkSpec& spec, double eps);

struct TrelBound {
  bool fallback = false;  // support is all involutions, or no valid m
  double bound = 1.0;     // weak form; (|G| - 1) / |G| on fallback
  std::int64_t m = 0;
  double sharp_bound = 1.0;
  std::int64_t sharp_m = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  bool cardinality_ok = true;  // |G| <= 2^s
};

// Maximizes over every valid m unless `m` is given.
TrelBound TrelLowerBound(const WalkSpec& spec,
                         std::optional<std::int64_t> m = std::nullopt);

// (T_rel bound - 1) log(1 / (2 eps)).
double TmixLowerBound(const WalkSpec& spec, double eps,
                      std::optional<std::int64_t> m = std::nullopt);

struct ProductChain {
  WalkSpec spec;
  double formula_t_rel = 0.0;  // max_j T_rel(G_j) / w_j
  double direct_t_rel = 0.0;
  std::vector<double> component_bounds;  // T_rel bound of G_j divided by w_j
  bool dlogd_evaluated = false;
};

ProductChain MakeProductChain(const std::vector<GroupFunction>& components,
                              const std::vector<double>& weights,
                              GenerationMode mode = GenerationMode::kIrreducible);

}  // namespace abelspec

#endif  // ABELSPEC_WALKS_HPP_
