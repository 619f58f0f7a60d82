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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "abelspec/cayley.hpp"
#include "abelspec/error.hpp"
#include "abelspec/walks.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace abelspec {
namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode CodeOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

GroupFunction Law(const FiniteAbelianGroup& g, const std::map<ElementIndex, double>& mass) {
  std::vector<double> p(static_cast<std::size_t>(g.order()));
  for (const auto& [x, v] : mass) p[static_cast<std::size_t>(x)] = v;
  return GroupFunction::FromReal(g, p);
}

GroupFunction Uniform(const FiniteAbelianGroup& g) {
  return GroupFunction::FromReal(
      g, std::vector<double>(static_cast<std::size_t>(g.order()), 1.0 / double(g.order())));
}

GroupFunction LazyCycle(std::int64_t n) {
  return Law(FiniteAbelianGroup::Make({n}), {{0, 0.5}, {1, 0.25}, {n - 1, 0.25}});
}

// Random symmetric law whose support contains 0 and generates G.
GroupFunction RandomLazyWalk(const FiniteAbelianGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<ElementIndex> pick(1, g.order() - 1);
  std::uniform_real_distribution<double> val(0.1, 1.0);
  for (;;) {
    std::vector<double> p(static_cast<std::size_t>(g.order()));
    p[0] = val(rng);
    std::vector<ElementIndex> gens;
    for (int i = 0; i < 3; ++i) {
      const ElementIndex x = pick(rng);
      const double v = val(rng);
      p[static_cast<std::size_t>(x)] = v;
      p[static_cast<std::size_t>(g.Negate(x))] = v;
      gens.push_back(x);
    }
    if (SpanIndices(g, gens).order() != g.order()) continue;
    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
    return GroupFunction::FromReal(g, p);
  }
}

TEST(ValidateWalk, Examples) {
  for (std::int64_t n : {5, 8, 21}) {
    const WalkSpec s = ValidateWalk(CycleWalk(n), GenerationMode::kIrreducible);
    EXPECT_TRUE(s.condition_a);
    EXPECT_TRUE(s.generates);
  }
  // Odd cycles pass the literal per-x condition; even cycles do not.
  EXPECT_TRUE(ValidateWalk(CycleWalk(9)).condition_b_literal);
  EXPECT_EQ(CodeOf([] { ValidateWalk(CycleWalk(8)); }), ErrorCode::kNotGenerating);
  EXPECT_FALSE(ValidateWalk(CycleWalk(8), GenerationMode::kIrreducible).condition_b_literal);

  const auto z2 = FiniteAbelianGroup::Make({2});
  EXPECT_EQ(CodeOf([&] { ValidateWalk(Law(z2, {{1, 1.0}})); }), ErrorCode::kNotGenerating);
  const WalkSpec z2_irr = ValidateWalk(Law(z2, {{1, 1.0}}), GenerationMode::kIrreducible);
  EXPECT_FALSE(z2_irr.condition_b_literal);
  EXPECT_EQ(*z2_irr.literal_failure, 1);

  for (const auto& mod : {std::vector<std::int64_t>{7}, std::vector<std::int64_t>{2, 6},
                          std::vector<std::int64_t>{3, 3, 2}}) {
    const WalkSpec u = ValidateWalk(Uniform(FiniteAbelianGroup::Make(mod)));
    EXPECT_TRUE(u.condition_b_literal);
  }
}

TEST(ValidateWalk, Errors) {
  const auto g = FiniteAbelianGroup::Make({6});
  EXPECT_EQ(CodeOf([&] { ValidateWalk(Law(g, {{1, 0.5}, {5, 0.4}})); }), ErrorCode::kNotProbability);
  EXPECT_EQ(CodeOf([&] { ValidateWalk(Law(g, {{1, 1.5}, {5, -0.5}})); }), ErrorCode::kNotProbability);
  EXPECT_EQ(CodeOf([&] { ValidateWalk(Law(g, {{0, 0.5}, {1, 0.3}, {5, 0.2}})); }),
            ErrorCode::kNotSymmetric);
  EXPECT_EQ(CodeOf([&] { ValidateWalk(Law(g, {{0, 0.5}, {2, 0.25}, {4, 0.25}}),
                                      GenerationMode::kIrreducible); }),
            ErrorCode::kNotGenerating);
}

TEST(WalkSpectrum, Examples) {
  const auto c8 = WalkSpectrum(ValidateWalk(CycleWalk(8), GenerationMode::kIrreducible));
  EXPECT_DOUBLE_EQ(c8[0].lambda, 1.0);
  EXPECT_EQ(c8[0].character, 0);
  EXPECT_NEAR(c8[1].lambda, std::cos(kPi / 4), 1e-15);

  const auto u = WalkSpectrum(ValidateWalk(Uniform(FiniteAbelianGroup::Make({3, 4}))));
  EXPECT_NEAR(u[0].lambda, 1.0, 1e-15);
  for (std::size_t i = 1; i < u.size(); ++i) EXPECT_NEAR(u[i].lambda, 0.0, 1e-15);

  const auto z4 = WalkSpectrum(ValidateWalk(LazyCycle(4)));
  const std::vector<double> want = {1.0, 0.5, 0.5, 0.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(z4[i].lambda, want[i], 1e-15);
}

TEST(WalkSpectrum, MatchesJacobiOfTransitionMatrix) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 128);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    const auto n = static_cast<std::size_t>(g.order());
    SymmetricMatrix k(n);
    for (ElementIndex x = 0; x < g.order(); ++x) {
      for (ElementIndex y = 0; y < g.order(); ++y) {
        k(std::size_t(x), std::size_t(y)) = s.p[static_cast<std::size_t>(g.Subtract(y, x))];
      }
    }
    auto jac = JacobiEigen(k).values;
    std::reverse(jac.begin(), jac.end());
    const auto spec = WalkSpectrum(s);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(spec[i].lambda, jac[i], 1e-8);
  }
}

TEST(StepDistribution, EqualsRepeatedConvolution) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 64);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    for (std::int64_t l = 0; l <= 8; ++l) {
      const auto got = StepDistribution(s, l);
      const auto want = oracle::StepLaw(support::ModuliOf(g), s.p, l);
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-9);
      EXPECT_NEAR(TotalVariation(s, l), oracle::Tv(want), 1e-9);
    }
  }
}

TEST(TotalVariation, NonIncreasingForAperiodicWalks) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 200);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    double prev = TotalVariation(s, 0);
    EXPECT_NEAR(prev, 1.0 - 1.0 / double(g.order()), 1e-12);
    for (std::int64_t l = 1; l <= 60; ++l) {
      const double cur = TotalVariation(s, l);
      EXPECT_LE(cur, prev + 1e-12);
      prev = cur;
    }
  }
}

TEST(ChainTimes, Examples) {
  const ChainTimes u = ComputeChainTimes(ValidateWalk(Uniform(FiniteAbelianGroup::Make({10}))),
                                         {0.25, 0.1, 0.01});
  for (const auto& t : u.t_mix) EXPECT_EQ(*t, 1);
  EXPECT_DOUBLE_EQ(u.t_rel, 1.0);

  const ChainTimes c8 =
      ComputeChainTimes(ValidateWalk(CycleWalk(8), GenerationMode::kIrreducible), {0.25});
  EXPECT_NEAR(c8.t_rel, 1.0 / (1.0 - std::cos(kPi / 4)), 1e-12);
  EXPECT_NEAR(c8.t_rel, 3.41421356237, 1e-10);
  EXPECT_TRUE(c8.periodic);
  EXPECT_TRUE(std::isinf(c8.t_rel_star));
  EXPECT_FALSE(c8.t_mix[0].has_value());

  EXPECT_EQ(CodeOf([] { ComputeChainTimes(ValidateWalk(CycleWalk(9)), {0.5}); }),
            ErrorCode::kEpsilonOutOfRange);
  EXPECT_EQ(CodeOf([] { MixingTime(ValidateWalk(CycleWalk(9)), 0.0); }),
            ErrorCode::kEpsilonOutOfRange);
}

TEST(ChainTimes, OddCyclesRelaxInOrderNSquared) {
  for (std::int64_t n = 9; n <= 101; n += 2) {
    const ChainTimes t = ComputeChainTimes(ValidateWalk(CycleWalk(n)), {});
    EXPECT_FALSE(t.periodic);
    EXPECT_GE(t.t_rel_star, t.t_rel);
    EXPECT_GE(t.t_rel, 1.0);
    const double ratio = t.t_rel_star / double(n * n);
    EXPECT_GE(ratio, 0.01) << n;
    EXPECT_LE(ratio, 1.0) << n;
  }
}

TEST(ChainTimes, MixingTimeMatchesStepwiseOracle) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 60);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    const ChainTimes t = ComputeChainTimes(s, {0.4, 0.25, 0.1, 0.01});
    for (std::size_t i = 0; i < t.eps.size(); ++i) {
      EXPECT_EQ(*t.t_mix[i], oracle::MixingTime(support::ModuliOf(g), s.p, t.eps[i], 100000));
      if (i > 0) { EXPECT_GE(*t.t_mix[i], *t.t_mix[i - 1]); }
    }
  }
  for (std::int64_t n : {9, 15, 31}) {
    const WalkSpec s = ValidateWalk(CycleWalk(n));
    EXPECT_EQ(MixingTime(s, 0.25), oracle::MixingTime({n}, s.p, 0.25, 100000));
  }
}

TEST(TrelBound, Cycle8AndSoundness) {
  const WalkSpec c8 = ValidateWalk(CycleWalk(8), GenerationMode::kIrreducible);
  const TrelBound b5 = TrelLowerBound(c8, 5);
  EXPECT_NEAR(b5.bound, 2.0 * 25.0 * 4.0 / (kPi * kPi * 8.0), 1e-12);
  EXPECT_NEAR(b5.bound, 2.53302959106, 1e-10);
  EXPECT_LE(b5.bound, 1.0 / (1.0 - std::cos(kPi / 4)));
  EXPECT_EQ(b5.r, 1u);
  EXPECT_EQ(b5.t, 0u);
  const TrelBound best = TrelLowerBound(c8);
  EXPECT_EQ(best.m, GridBestWeakM(8, 1, 0));
  EXPECT_GE(best.bound, b5.bound);
  EXPECT_EQ(CodeOf([&] { TrelLowerBound(c8, 9); }), ErrorCode::kMTooLarge);
  EXPECT_EQ(CodeOf([&] { TrelLowerBound(c8, 1); }), ErrorCode::kBadM);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 512);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    const double trel = ComputeChainTimes(s, {}).t_rel;
    const TrelBound b = TrelLowerBound(s);
    EXPECT_LE(b.bound, trel * (1.0 + 1e-12));
    EXPECT_LE(b.sharp_bound, trel * (1.0 + 1e-12));
    if (!b.fallback) { EXPECT_GE(b.sharp_bound, TrelLowerBound(s, b.m).bound - 1e-12); }
  }
}

TEST(TrelBound, InvolutionSupportFallsBack) {
  const auto g = FiniteAbelianGroup::Make({2, 2});
  const WalkSpec s = ValidateWalk(Law(g, {{1, 1.0 / 3}, {2, 1.0 / 3}, {3, 1.0 / 3}}),
                                  GenerationMode::kIrreducible);
  const TrelBound b = TrelLowerBound(s);
  EXPECT_TRUE(b.fallback);
  EXPECT_DOUBLE_EQ(b.bound, 0.75);  // tight: lambda_2 = -1/3
  EXPECT_EQ(b.s, 3u);
  EXPECT_TRUE(b.cardinality_ok);
  EXPECT_LE(b.bound, ComputeChainTimes(s, {}).t_rel);
}

TEST(TmixBound, ExamplesAndSoundness) {
  // Lazy cycle: aperiodic, so the bound applies. The identity in supp(p)
  // counts as an involution (t = 1), which caps m at 4.
  const WalkSpec lazy8 = ValidateWalk(LazyCycle(8));
  const TrelBound t4 = TrelLowerBound(lazy8, 4);
  EXPECT_EQ(t4.t, 1u);
  EXPECT_NEAR(t4.bound, 2.0 * 16.0 * 2.0 / (kPi * kPi * 8.0), 1e-12);
  const double b = TmixLowerBound(lazy8, 0.25, 4);
  EXPECT_NEAR(b, std::max(0.0, (t4.bound - 1.0) * std::log(2.0)), 1e-12);
  EXPECT_LE(b, double(MixingTime(lazy8, 0.25)));
  EXPECT_NEAR(TmixLowerBound(lazy8, 0.5 - 1e-12), 0.0, 1e-9);

  const WalkSpec c101 = ValidateWalk(CycleWalk(101));
  EXPECT_LE(TmixLowerBound(c101, 0.1), double(MixingTime(c101, 0.1)));

  EXPECT_EQ(CodeOf([] { TmixLowerBound(ValidateWalk(CycleWalk(8), GenerationMode::kIrreducible), 0.25); }),
            ErrorCode::kPeriodicChain);
  EXPECT_EQ(CodeOf([&] { TmixLowerBound(lazy8, 0.75); }), ErrorCode::kEpsilonOutOfRange);

  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = support::RandomFamilyGroup(rng, 150);
    const WalkSpec s = ValidateWalk(RandomLazyWalk(g, rng), GenerationMode::kIrreducible);
    for (double eps : {0.25, 0.1}) {
      EXPECT_LE(TmixLowerBound(s, eps), double(MixingTime(s, eps)) + 1e-9);
    }
  }
}

TEST(ProductChain, TwoCyclesMatchFormula) {
  const ProductChain pc = MakeProductChain({CycleWalk(8), CycleWalk(8)}, {0.5, 0.5});
  EXPECT_NEAR(pc.formula_t_rel, 2.0 / (1.0 - std::cos(kPi / 4)), 1e-9);
  EXPECT_NEAR(pc.direct_t_rel, pc.formula_t_rel, 1e-9);
  EXPECT_EQ(pc.spec.group.order(), 64);
  for (double cb : pc.component_bounds) EXPECT_LE(cb, pc.direct_t_rel + 1e-9);
}

TEST(ProductChain, SingleComponentIsIdentity) {
  const ProductChain pc = MakeProductChain({LazyCycle(7)}, {1.0});
  const WalkSpec s = ValidateWalk(LazyCycle(7));
  EXPECT_EQ(pc.spec.p, s.p);
  EXPECT_NEAR(pc.direct_t_rel, ComputeChainTimes(s, {}).t_rel, 1e-12);
}

TEST(ProductChain, ThreeCopiesAndMixedComponents) {
  const auto z5 = FiniteAbelianGroup::Make({5});
  const GroupFunction w5 = Law(z5, {{1, 0.5}, {4, 0.5}});
  const ProductChain three = MakeProductChain({w5, w5, w5}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(three.direct_t_rel, three.formula_t_rel, 1e-9);
  for (double cb : three.component_bounds) EXPECT_LE(cb, three.direct_t_rel + 1e-9);

  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = support::RandomFamilyGroup(rng, 20), b = support::RandomFamilyGroup(rng, 20);
    const double w = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const ProductChain pc = MakeProductChain({RandomLazyWalk(a, rng), RandomLazyWalk(b, rng)}, {w, 1.0 - w});
    EXPECT_NEAR(pc.direct_t_rel, pc.formula_t_rel, 1e-9 * pc.formula_t_rel);
    for (double cb : pc.component_bounds) EXPECT_LE(cb, pc.direct_t_rel * (1.0 + 1e-12));
  }
}

TEST(ProductChain, Errors) {
  EXPECT_EQ(CodeOf([] { MakeProductChain({CycleWalk(5)}, {0.5}); }), ErrorCode::kWeightNotSimplex);
  EXPECT_EQ(CodeOf([] { MakeProductChain({CycleWalk(5), CycleWalk(5)}, {1.2, -0.2}); }),
            ErrorCode::kWeightNotSimplex);
  EXPECT_EQ(CodeOf([] { MakeProductChain({}, {}); }), ErrorCode::kWeightNotSimplex);
}

}  // namespace
}  // namespace abelspec
