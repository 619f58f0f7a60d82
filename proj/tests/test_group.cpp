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

#include <numeric>
#include <random>

#include "abelspec/error.hpp"
#include "abelspec/group.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace abelspec {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

std::vector<ElementIndex> Sorted(std::vector<ElementIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Group, MakeReportsOrder) {
  EXPECT_EQ(FiniteAbelianGroup::Make({40}).order(), 40);
  EXPECT_EQ(FiniteAbelianGroup::Make({17, 17}).order(), 289);
}

TEST(Group, MixedRadixIndex) {
  const auto g = FiniteAbelianGroup::Make({2, 2, 3});
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.IndexOf({{1, 0, 2}}), 8);
  for (ElementIndex i = 0; i < g.order(); ++i) EXPECT_EQ(g.IndexOf(g.ElementAt(i)), i);
}

TEST(Group, MakeRejectsBadModuli) {
  EXPECT_EQ(CodeOf([] { FiniteAbelianGroup::Make({}); }), ErrorCode::kEmptyModuli);
  EXPECT_EQ(CodeOf([] { FiniteAbelianGroup::Make({4, 1}); }), ErrorCode::kModulusTooSmall);
  EXPECT_EQ(CodeOf([] { FiniteAbelianGroup::Make({1000, 1001}); }),
            ErrorCode::kOrderCapExceeded);
  EXPECT_EQ(CodeOf([] { FiniteAbelianGroup::Make({4}).IndexOf({{4}}); }),
            ErrorCode::kElementNotInGroup);
}

TEST(Group, EqualInputsGiveEqualGroups) {
  EXPECT_TRUE(FiniteAbelianGroup::Make({2, 6}) == FiniteAbelianGroup::Make({2, 6}));
  EXPECT_FALSE(FiniteAbelianGroup::Make({2, 6}) == FiniteAbelianGroup::Make({6, 2}));
}

TEST(Group, ArithmeticMatchesOracle) {
  const auto g = FiniteAbelianGroup::Make({2, 6, 5});
  const auto m = support::ModuliOf(g);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    EXPECT_EQ(g.Negate(x), oracle::NegIdx(m, x));
    for (ElementIndex y = 0; y < g.order(); y += 7) {
      EXPECT_EQ(g.Add(x, y), oracle::AddIdx(m, x, y));
      EXPECT_EQ(g.Subtract(x, y), oracle::AddIdx(m, x, oracle::NegIdx(m, y)));
    }
  }
}

TEST(Group, MultipleAndOrder) {
  const auto g = FiniteAbelianGroup::Make({12});
  EXPECT_EQ(g.Multiple(5, 3), 3);
  EXPECT_EQ(g.Multiple(5, -1), 7);
  EXPECT_EQ(g.ElementOrder(0), 1);
  EXPECT_EQ(g.ElementOrder(8), 3);
  EXPECT_EQ(g.ElementOrder(5), 12);
  EXPECT_TRUE(g.IsInvolution(6));
  EXPECT_TRUE(g.IsInvolution(0));
  EXPECT_FALSE(g.IsInvolution(3));
}

TEST(Span, SmallExamples) {
  const auto z4 = FiniteAbelianGroup::Make({4});
  const Subgroup h = SpanIndices(z4, {2});
  EXPECT_EQ(h.order(), 2);
  EXPECT_EQ(Sorted(h.elements()), (std::vector<ElementIndex>{0, 2}));
  EXPECT_EQ(SpanIndices(z4, {}).elements(), (std::vector<ElementIndex>{0}));
}

TEST(Span, SumsetExampleBasisGeneratesEverything) {
  const auto g = FiniteAbelianGroup::Make({17, 17});
  EXPECT_EQ(Span(g, {{{1, 0}}, {{9, 9}}}).order(), 289);
}

TEST(Span, MatchesBreadthFirstOracleAndLagrange) {
  std::mt19937_64 rng(11);
  const std::vector<std::vector<std::int64_t>> groups = {{24}, {2, 12}, {3, 3, 6}, {4, 10}};
  for (const auto& mod : groups) {
    const auto g = FiniteAbelianGroup::Make(mod);
    std::uniform_int_distribution<ElementIndex> pick(0, g.order() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<ElementIndex> gens;
      for (int k = trial % 3; k >= 0; --k) gens.push_back(pick(rng));
      const Subgroup h = SpanIndices(g, gens);
      const auto want = oracle::Span(mod, gens);
      EXPECT_EQ(Sorted(h.elements()), std::vector<ElementIndex>(want.begin(), want.end()));
      EXPECT_EQ(g.order() % h.order(), 0);
    }
  }
}

TEST(Annihilator, Examples) {
  const auto z4 = FiniteAbelianGroup::Make({4});
  EXPECT_EQ(Sorted(Annihilator(SpanIndices(z4, {2})).elements()),
            (std::vector<ElementIndex>{0, 2}));
  const auto g = FiniteAbelianGroup::Make({2, 6});
  EXPECT_EQ(Annihilator(SpanIndices(g, {})).order(), g.order());
  EXPECT_EQ(Annihilator(WholeGroup(g)).order(), 1);
}

TEST(Annihilator, DualityExhaustiveOnCyclic) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto g = FiniteAbelianGroup::Make({n});
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const Subgroup h = SpanIndices(g, {d % n});
      const Subgroup perp = Annihilator(h);
      ASSERT_EQ(h.order() * perp.order(), n);
      ASSERT_TRUE(Annihilator(perp) == h) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Annihilator, DualityAndAntiMonotoneOnProducts) {
  std::mt19937_64 rng(3);
  const std::vector<std::vector<std::int64_t>> groups = {{2, 4, 6}, {6, 10}, {3, 3, 3}, {2, 2, 2, 4}};
  for (const auto& mod : groups) {
    const auto g = FiniteAbelianGroup::Make(mod);
    std::uniform_int_distribution<ElementIndex> pick(0, g.order() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      const Subgroup h1 = SpanIndices(g, {pick(rng)});
      const Subgroup h2 = SpanIndices(g, {h1.generators().empty() ? 0 : h1.generators()[0],
                                          pick(rng)});
      ASSERT_TRUE(h1.IsSubsetOf(h2));
      const Subgroup p1 = Annihilator(h1), p2 = Annihilator(h2);
      EXPECT_EQ(h2.order() * p2.order(), g.order());
      EXPECT_TRUE(Annihilator(p2) == h2);
      EXPECT_TRUE(p2.IsSubsetOf(p1));
    }
  }
}

TEST(Quotient, Examples) {
  const auto z4 = FiniteAbelianGroup::Make({4});
  const QuotientGroup q(SpanIndices(z4, {2}));
  EXPECT_EQ(q.num_cosets(), 2);
  EXPECT_EQ(q.representatives(), (std::vector<ElementIndex>{0, 1}));
  EXPECT_EQ(QuotientGroup(SpanIndices(FiniteAbelianGroup::Make({6}), {3})).num_cosets(), 3);
  const auto g = FiniteAbelianGroup::Make({17, 17});
  EXPECT_EQ(QuotientGroup(Span(g, {{{2, 0}}})).num_cosets(), 17);
}

TEST(Quotient, ProjectionIsHomomorphismWithMinimalRepresentatives) {
  std::mt19937_64 rng(5);
  const auto g = FiniteAbelianGroup::Make({4, 6});
  const QuotientGroup q(SpanIndices(g, {g.IndexOf({{2, 3}})}));
  EXPECT_EQ(q.num_cosets() * q.subgroup().order(), g.order());
  std::uniform_int_distribution<ElementIndex> pick(0, g.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const ElementIndex x = pick(rng), y = pick(rng);
    EXPECT_EQ(q.Project(g.Add(x, y)), q.AddCosets(q.Project(x), q.Project(y)));
  }
  for (ElementIndex x = 0; x < g.order(); ++x) {
    EXPECT_LE(q.Representative(q.Project(x)), x);
  }
}

}  // namespace
}  // namespace abelspec
