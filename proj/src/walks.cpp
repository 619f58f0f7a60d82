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

#include "abelspec/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "abelspec/covering.hpp"
#include "abelspec/error.hpp"

namespace abelspec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSimplexTol = 1e-12;

std::vector<double> CosTable(const FiniteAbelianGroup& g) {
  const std::int64_t l = g.exponent();
  std::vector<double> table(static_cast<std::size_t>(l));
  for (std::int64_t k = 0; k < l; ++k) {
    table[static_cast<std::size_t>(k)] =
        std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(l));
  }
  return table;
}

std::vector<ElementIndex> SupportOfP(const WalkSpec& spec) {
  std::vector<ElementIndex> s;
  for (std::size_t x = 0; x < spec.p.size(); ++x) {
    if (spec.p[x] > 0.0) s.push_back(static_cast<ElementIndex>(x));
  }
  return s;
}

// lambda(a) indexed by character.
std::vector<double> EigenvaluesByCharacter(const WalkSpec& spec) {
  const auto& g = spec.group;
  const auto cosines = CosTable(g);
  const auto support = SupportOfP(spec);
  std::vector<double> lam(static_cast<std::size_t>(g.order()));
  for (ElementIndex a = 0; a < g.order(); ++a) {
    double s = 0.0;
    for (ElementIndex x : support) {
      s += spec.p[static_cast<std::size_t>(x)] *
           cosines[static_cast<std::size_t>(g.Phase(a, x))];
    }
    lam[static_cast<std::size_t>(a)] = s;
  }
  return lam;
}

// Smallest d > 0 with d z in D.
std::int64_t QuotientOrder(const FiniteAbelianGroup& g, const Subgroup& d,
                           ElementIndex z) {
  const std::int64_t ord = g.ElementOrder(z);
  for (std::int64_t k = 1; k <= ord; ++k) {
    if (ord % k == 0 && d.Contains(g.Multiple(z, k))) return k;
  }
  return ord;
}

}  // namespace

WalkSpec ValidateWalk(const GroupFunction& pf, GenerationMode mode) {
  const auto& g = pf.group();
  if (!pf.IsReal(kSimplexTol)) {
    Fail(ErrorCode::kNotProbability, "p has complex values");
  }
  WalkSpec spec{g, pf.RealValues(kSimplexTol), false, false, false, {}, mode};
  double total = 0.0;
  for (std::size_t x = 0; x < spec.p.size(); ++x) {
    const double v = spec.p[x];
    if (v < -kSimplexTol || v > 1.0 + kSimplexTol) {
      Fail(ErrorCode::kNotProbability,
           "p(" + std::to_string(x) + ") is outside [0, 1]");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    Fail(ErrorCode::kNotProbability, "p does not sum to 1");
  }
  for (auto& v : spec.p) v = std::clamp(v, 0.0, 1.0);
  spec.condition_a = true;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (std::abs(spec.p[static_cast<std::size_t>(x)] -
                 spec.p[static_cast<std::size_t>(g.Negate(x))]) > kSimplexTol) {
      Fail(ErrorCode::kNotSymmetric,
           "p(x) != p(-x) at element " + std::to_string(x));
    }
  }

  const auto support = SupportOfP(spec);
  spec.generates = SpanIndices(g, support).order() == g.order();
  // span{x + y : y in S} = <x + y0> + D with D = span(S - y0).
  const ElementIndex y0 = support.front();
  std::vector<ElementIndex> diffs;
  for (ElementIndex y : support) diffs.push_back(g.Subtract(y, y0));
  const Subgroup d = SpanIndices(g, diffs);
  const std::int64_t cosets = g.order() / d.order();
  spec.condition_b_literal = true;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (QuotientOrder(g, d, g.Add(x, y0)) != cosets) {
      spec.condition_b_literal = false;
      spec.literal_failure = x;
      break;
    }
  }
  if (mode == GenerationMode::kLiteral && !spec.condition_b_literal) {
    Fail(ErrorCode::kNotGenerating,
         "{x + y : y in supp(p)} does not generate G at x = " +
             std::to_string(*spec.literal_failure));
  }
  if (mode == GenerationMode::kIrreducible && !spec.generates) {
    Fail(ErrorCode::kNotGenerating, "supp(p) does not generate G");
  }
  return spec;
}

GroupFunction CycleWalk(std::int64_t n) {
  const auto g = FiniteAbelianGroup::Make({n});
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  p[1] += 0.5;
  p[static_cast<std::size_t>(n - 1)] += 0.5;
  return GroupFunction::FromReal(g, p);
}

std::vector<WalkEigenvalue> WalkSpectrum(const WalkSpec& spec) {
  const auto lam = EigenvaluesByCharacter(spec);
  std::vector<WalkEigenvalue> out(lam.size());
  for (std::size_t a = 0; a < lam.size(); ++a) {
    out[a] = {lam[a], static_cast<ElementIndex>(a)};
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const WalkEigenvalue& x, const WalkEigenvalue& y) {
                     return x.lambda > y.lambda;
                   });
  return out;
}

namespace {

// (1/|G|) sum_{a != 0} lambda_a^l cos(2 pi a.x), i.e. p^(l)(x) - 1/|G|.
std::vector<double> Deviation(const WalkSpec& spec, const std::vector<double>& lam,
                              const std::vector<double>& cosines, std::int64_t l) {
  const auto& g = spec.group;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> powers(n, 0.0);
  for (std::size_t a = 1; a < n; ++a) {
    powers[a] = std::pow(lam[a], static_cast<double>(l));
  }
  std::vector<double> dev(n, 0.0);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    double s = 0.0;
    for (ElementIndex a = 1; a < g.order(); ++a) {
      const double pw = powers[static_cast<std::size_t>(a)];
      if (pw == 0.0) continue;
      s += pw * cosines[static_cast<std::size_t>(g.Phase(a, x))];
    }
    dev[static_cast<std::size_t>(x)] = s / static_cast<double>(n);
  }
  return dev;
}

}  // namespace

std::vector<double> StepDistribution(const WalkSpec& spec, std::int64_t l) {
  auto dev = Deviation(spec, EigenvaluesByCharacter(spec), CosTable(spec.group), l);
  const double u = 1.0 / static_cast<double>(dev.size());
  for (auto& d : dev) d += u;
  return dev;
}

double TotalVariation(const WalkSpec& spec, std::int64_t l) {
  const auto dev =
      Deviation(spec, EigenvaluesByCharacter(spec), CosTable(spec.group), l);
  double s = 0.0;
  for (double d : dev) s += std::abs(d);
  return 0.5 * s;
}

std::int64_t MixingTime(const WalkSpec& spec, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) {
    Fail(ErrorCode::kEpsilonOutOfRange, "eps must lie in (0, 1/2)");
  }
  const auto lam = EigenvaluesByCharacter(spec);
  const auto cosines = CosTable(spec.group);
  auto tv = [&](std::int64_t l) {
    double s = 0.0;
    for (double d : Deviation(spec, lam, cosines, l)) s += std::abs(d);
    return 0.5 * s;
  };
  std::int64_t hi = 1;
  while (tv(hi) > eps) {
    if (hi >= kMixingCap) {
      Fail(ErrorCode::kIterationCapExceeded,
           "T_mix exceeds " + std::to_string(kMixingCap) + " steps");
    }
    hi = std::min(hi * 2, kMixingCap);
  }
  std::int64_t lo = hi / 2;  // tv(lo) > eps, or lo == 0
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (tv(mid) <= eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

ChainTimes ComputeChainTimes(const WalkSpec& spec, const std::vector<double>& eps) {
  for (double e : eps) {
    if (!(e > 0.0 && e < 0.5)) {
      Fail(ErrorCode::kEpsilonOutOfRange, "eps must lie in (0, 1/2)");
    }
  }
  const auto spectrum = WalkSpectrum(spec);
  ChainTimes out;
  out.eps = eps;
  out.lambda2 = spectrum.size() > 1 ? spectrum[1].lambda : 0.0;
  out.lambda_min = spectrum.back().lambda;
  if (out.lambda2 >= 1.0 - 1e-12) {
    Fail(ErrorCode::kNotGenerating, "lambda_2 = 1: the walk is reducible");
  }
  out.t_rel = 1.0 / (1.0 - out.lambda2);
  const double star = std::max(std::abs(out.lambda2), std::abs(out.lambda_min));
  out.periodic = out.lambda_min <= -1.0 + 1e-12;
  out.t_rel_star = out.periodic ? std::numeric_limits<double>::infinity()
                                : 1.0 / (1.0 - star);
  for (double e : eps) {
    if (out.periodic) {
      out.t_mix.emplace_back();
    } else {
      out.t_mix.emplace_back(MixingTime(spec, e));
    }
  }
  return out;
}

TrelBound TrelLowerBound(const WalkSpec& spec, std::optional<std::int64_t> m) {
  const auto& g = spec.group;
  const std::int64_t order = g.order();
  std::vector<ElementIndex> reps;
  std::vector<double> pair_coefs;
  std::vector<ElementIndex> invs;
  std::vector<double> inv_coefs;
  for (ElementIndex x : SupportOfP(spec)) {
    const double px = spec.p[static_cast<std::size_t>(x)];
    if (g.IsInvolution(x)) {
      invs.push_back(x);
      inv_coefs.push_back(px);
    } else if (x < g.Negate(x)) {
      reps.push_back(x);
      pair_coefs.push_back(px);
    }
  }
  TrelBound out;
  out.r = reps.size();
  out.t = invs.size();
  out.s = 2 * out.r + out.t;
  out.cardinality_ok = out.s >= 63 || order <= (std::int64_t{1} << out.s);
  const std::int64_t hi = out.r == 0 ? 1 : MaxUniformM(order, out.r, out.t);
  if (out.r == 0 || hi < 2) {
    if (m) {
      Fail(ErrorCode::kMTooLarge, "no valid m for this support");
    }
    out.fallback = true;
    // Eigenvalues sum to |G| p(0) >= 0, so lambda_2 >= -1 / (|G| - 1).
    out.bound = out.sharp_bound = static_cast<double>(order - 1) / static_cast<double>(order);
    return out;
  }
  double csum = 0.0;
  for (double c : pair_coefs) csum += c;
  const double gd = static_cast<double>(order);
  auto weak = [&](std::int64_t mm) {
    const auto box = BoxSize(out.t, std::vector<std::int64_t>(out.r, mm), order);
    const double md = static_cast<double>(mm);
    return 2.0 * md * md * (gd - static_cast<double>(*box)) / (kPi * kPi * gd);
  };
  auto sharp = [&](std::int64_t mm) {
    const auto box = BoxSize(out.t, std::vector<std::int64_t>(out.r, mm), order);
    const double sn = std::sin(kPi / (2.0 * static_cast<double>(mm)));
    return (gd - static_cast<double>(*box)) / (4.0 * gd * sn * sn * csum);
  };
  if (m) {
    if (*m < 2) Fail(ErrorCode::kBadM, "m must be >= 2");
    if (*m > hi) {
      Fail(ErrorCode::kMTooLarge, "2^t (m-1)^r >= |G| for m = " + std::to_string(*m));
    }
    out.m = out.sharp_m = *m;
    out.bound = weak(*m);
    out.sharp_bound = sharp(*m);
    return out;
  }
  out.m = GridBestWeakM(order, out.r, out.t);
  out.bound = weak(out.m);
  out.sharp_m = 2;
  out.sharp_bound = sharp(2);
  for (std::int64_t mm = 3; mm <= hi; ++mm) {
    const double v = sharp(mm);
    if (v > out.sharp_bound) {
      out.sharp_bound = v;
      out.sharp_m = mm;
    }
  }
  return out;
}

double TmixLowerBound(const WalkSpec& spec, double eps,
                      std::optional<std::int64_t> m) {
  if (!(eps > 0.0 && eps < 0.5)) {
    Fail(ErrorCode::kEpsilonOutOfRange, "eps must lie in (0, 1/2)");
  }
  const auto spectrum = WalkSpectrum(spec);
  if (spectrum.back().lambda <= -1.0 + 1e-12) {
    Fail(ErrorCode::kPeriodicChain, "lambda_min = -1: the chain is periodic");
  }
  const TrelBound b = TrelLowerBound(spec, m);
  return std::max(0.0, (b.bound - 1.0) * std::log(1.0 / (2.0 * eps)));
}

ProductChain MakeProductChain(const std::vector<GroupFunction>& components,
                              const std::vector<double>& weights,
                              GenerationMode mode) {
  if (components.empty() || components.size() != weights.size()) {
    Fail(ErrorCode::kWeightNotSimplex, "need one weight per component");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) Fail(ErrorCode::kWeightNotSimplex, "weights must be >= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > kSimplexTol) {
    Fail(ErrorCode::kWeightNotSimplex, "weights do not sum to 1");
  }
  std::vector<WalkSpec> specs;
  std::vector<std::int64_t> moduli;
  for (const auto& c : components) {
    specs.push_back(ValidateWalk(c, mode));
    for (std::int64_t n : c.group().moduli()) moduli.push_back(n);
  }
  const auto g = FiniteAbelianGroup::Make(moduli);

  // Component j occupies a contiguous block of coordinates; embed x_j with
  // every other block at zero.
  std::vector<double> p(static_cast<std::size_t>(g.order()), 0.0);
  std::int64_t stride = g.order();
  double formula = 0.0;
  std::vector<double> bounds;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    const std::int64_t oj = specs[j].group.order();
    stride /= oj;
    for (std::int64_t x = 0; x < oj; ++x) {
      p[static_cast<std::size_t>(x * stride)] +=
          weights[j] * specs[j].p[static_cast<std::size_t>(x)];
    }
    const double trel = ComputeChainTimes(specs[j], {}).t_rel;
    const TrelBound b = TrelLowerBound(specs[j]);
    if (weights[j] > 0.0) {
      formula = std::max(formula, trel / weights[j]);
      bounds.push_back(b.bound / weights[j]);
    } else {
      formula = std::numeric_limits<double>::infinity();
      bounds.push_back(0.0);
    }
  }
  ProductChain out{
      ValidateWalk(GroupFunction::FromReal(g, p), GenerationMode::kIrreducible),
      formula, 0.0, std::move(bounds), false};
  out.direct_t_rel = ComputeChainTimes(out.spec, {}).t_rel;
  return out;
}

}  // namespace abelspec
