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

#include "abelspec/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "abelspec/error.hpp"

namespace abelspec {
namespace {

constexpr double kPi = std::numbers::pi;

// 2 [log|H| + log(1 - pi^2 / (2 m^2 (1 - ratio)))] / log(m - 1), or nullopt
// when the inner argument is not positive.
std::optional<double> LowerFormula(double log_h, double ratio, std::int64_t m) {
  const double md = static_cast<double>(m);
  const double gap = 1.0 - ratio;
  if (!(gap > 0.0)) return std::nullopt;
  const double arg = 1.0 - kPi * kPi / (2.0 * md * md * gap);
  if (!(arg > 0.0)) return std::nullopt;
  return 2.0 * (log_h + std::log(arg)) / std::log(md - 1.0);
}

// Sets lower, ceiling and the vacuous flag for one mu2 value.
void Evaluate(const SumsetCertificate& c, double log_h, const std::optional<double>& mu2,
              std::optional<double>& lower, std::optional<std::int64_t>& ceiling,
              bool& vacuous) {
  if (mu2) lower = LowerFormula(log_h, *mu2 / (c.nu1_f * c.nu1_g), c.m);
  vacuous = !lower;
  if (lower) ceiling = static_cast<std::int64_t>(std::ceil(*lower - 1e-12));
}

void FillBound(SumsetCertificate& c, double log_h) {
  c.condition_value = 2.0 * log_h / std::log(static_cast<double>(c.m) - 1.0);
  c.upper = c.condition_value;
  c.applicable = static_cast<double>(c.size_a * c.size_b) <= c.condition_value;
  c.s_condition = static_cast<double>(c.sumset_size) <= c.condition_value;
  Evaluate(c, log_h, c.mu2, c.lower, c.lower_ceiling, c.vacuous);
  Evaluate(c, log_h, c.mu2_product, c.lower_product, c.lower_ceiling_product,
           c.vacuous_product);
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

SymmetricSet MakeSymmetricSet(const FiniteAbelianGroup& group,
                              std::vector<ElementIndex> elements) {
  if (elements.empty()) Fail(ErrorCode::kNotSymmetricSet, "set is empty");
  for (ElementIndex x : elements) group.CheckIndex(x);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (ElementIndex x : elements) {
    if (!std::binary_search(elements.begin(), elements.end(), group.Negate(x))) {
      Fail(ErrorCode::kNotSymmetricSet,
           "set contains " + std::to_string(x) + " but not its negative");
    }
  }
  return SymmetricSet{group, std::move(elements)};
}

std::vector<ElementIndex> ComputeSumset(const SymmetricSet& a,
                                        const SymmetricSet& b) {
  if (!(a.group == b.group)) {
    Fail(ErrorCode::kGroupMismatch, "sets live in different groups");
  }
  std::vector<ElementIndex> out;
  out.reserve(a.size() * b.size());
  for (ElementIndex x : a.elements) {
    for (ElementIndex y : b.elements) out.push_back(a.group.Add(x, y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupFunction IndicatorSpectrum(const SymmetricSet& a,
                                const std::vector<double>* weights) {
  const auto& g = a.group;
  std::vector<Complex> coef(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    double w = 1.0;
    if (weights != nullptr) {
      if (weights->size() != a.size()) {
        Fail(ErrorCode::kLengthMismatch, "one weight per set element required");
      }
      w = (*weights)[i];
      if (!(w > 0.0)) Fail(ErrorCode::kNonPositiveWeight, "weights must be > 0");
    }
    coef[static_cast<std::size_t>(a.elements[i])] = w;
  }
  for (ElementIndex x : a.elements) {
    if (coef[static_cast<std::size_t>(x)] !=
        coef[static_cast<std::size_t>(g.Negate(x))]) {
      Fail(ErrorCode::kNotSymmetricSet,
           "weight of " + std::to_string(x) + " differs from its negative");
    }
  }
  return GroupFunction::FromSpectrum(Spectrum(g, std::move(coef)));
}

std::string Mu2RuleName(Mu2Rule rule) {
  return rule == Mu2Rule::kProduct ? "product" : "factorwise";
}

double Mu2(const GroupFunction& f, const GroupFunction& g,
           std::optional<double> tol_distinct, Mu2Rule rule) {
  if (!(f.group() == g.group())) {
    Fail(ErrorCode::kGroupMismatch, "f and g live on different groups");
  }
  const auto fv = f.RealValues();
  const auto gv = g.RealValues();
  const double f_top = *std::max_element(fv.begin(), fv.end());
  const double g_top = *std::max_element(gv.begin(), gv.end());
  double top = fv[0] * gv[0];
  for (std::size_t i = 0; i < fv.size(); ++i) top = std::max(top, fv[i] * gv[i]);
  auto tol_at = [&](double scale) {
    return tol_distinct.value_or(1e-9 * std::max(1.0, std::abs(scale)));
  };
  auto admissible = [&](std::size_t i) {
    if (rule == Mu2Rule::kProduct) return fv[i] * gv[i] < top - tol_at(top);
    return fv[i] < f_top - tol_at(f_top) && gv[i] < g_top - tol_at(g_top);
  };
  std::optional<double> best;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    const double v = fv[i] * gv[i];
    if (admissible(i) && (!best || v > *best)) best = v;
  }
  if (!best) Fail(ErrorCode::kConstantProduct, "f g is constant");
  return *best;
}

SumsetCertificate SumsetLowerBound(const SymmetricSet& a, const SymmetricSet& b,
                                   std::int64_t m,
                                   const std::vector<double>* weights_a,
                                   const std::vector<double>* weights_b,
                                   Mu2Rule rule) {
  if (m < 5) Fail(ErrorCode::kMTooSmall, "m must be >= 5");
  const auto sum = ComputeSumset(a, b);
  const auto& g = a.group;
  SumsetCertificate c;
  c.m = m;
  c.sumset_size = static_cast<std::int64_t>(sum.size());
  c.size_a = static_cast<std::int64_t>(a.size());
  c.size_b = static_cast<std::int64_t>(b.size());
  std::vector<ElementIndex> gens(a.elements);
  gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  const Subgroup h = SpanIndices(g, gens);
  c.h_order = h.order();
  c.sum_generates = SpanIndices(g, sum).order() == h.order();

  const GroupFunction f = IndicatorSpectrum(a, weights_a);
  const GroupFunction gg = IndicatorSpectrum(b, weights_b);
  c.nu1_f = f[0].real();
  c.nu1_g = gg[0].real();
  c.mu2_rule = rule;
  auto try_mu2 = [&](Mu2Rule r) -> std::optional<double> {
    try {
      return Mu2(f, gg, std::nullopt, r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kConstantProduct) throw;
      return std::nullopt;
    }
  };
  c.mu2_product = try_mu2(Mu2Rule::kProduct);
  c.mu2 = rule == Mu2Rule::kProduct ? c.mu2_product : try_mu2(rule);
  if (c.mu2_product) {
    // fg has exact spectrum supported on A + B inside H.
    std::vector<SpectralTerm> terms;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const ElementIndex x = g.Add(a.elements[i], b.elements[j]);
        terms.push_back({g.ElementAt(x),
                         f.declared_spectrum()->coefficients()
                                 [static_cast<std::size_t>(a.elements[i])]
                                     .real() *
                             gg.declared_spectrum()->coefficients()
                                 [static_cast<std::size_t>(b.elements[j])]
                                     .real()});
      }
    }
    const GroupFunction prod = GroupFunction::FromTerms(g, terms);
    const InducedFunction ind = Induce(prod, h);
    double top = ind.values[0].real();
    for (const auto& v : ind.values) top = std::max(top, v.real());
    const double tol = 1e-9 * std::max(1.0, std::abs(top));
    for (const auto& v : ind.values) {
      if (v.real() < top - tol && (!c.mu2_induced || v.real() > *c.mu2_induced)) {
        c.mu2_induced = v.real();
      }
    }
  }
  FillBound(c, std::log(static_cast<double>(c.h_order)));
  return c;
}

SumsetCertificate IntegerSumsetBound(const std::vector<std::int64_t>& a,
                                     std::int64_t m) {
  if (m < 5) Fail(ErrorCode::kMTooSmall, "m must be >= 5");
  if (a.empty()) Fail(ErrorCode::kNotSymmetricSet, "set is empty");
  std::set<std::int64_t> set(a.begin(), a.end());
  for (std::int64_t x : set) {
    if (!set.contains(-x)) {
      Fail(ErrorCode::kNotSymmetricSet,
           "set contains " + std::to_string(x) + " but not its negative");
    }
  }
  const std::vector<std::int64_t> elems(set.begin(), set.end());
  const auto k = static_cast<double>(elems.size());
  const std::int64_t max_abs = elems.back();

  std::set<std::int64_t> sums;
  for (std::int64_t x : elems) {
    for (std::int64_t y : elems) sums.insert(x + y);
  }

  // 2 log p / log(m-1) >= k(k+1)/2  <=>  log p >= k(k+1) log(m-1) / 4.
  const double need_log = k * (k + 1.0) * std::log(static_cast<double>(m) - 1.0) / 4.0;
  if (need_log > std::log(static_cast<double>(kPrimeSearchCap))) {
    Fail(ErrorCode::kConditionUnsatisfiable,
         "required prime exceeds search cap " + std::to_string(kPrimeSearchCap));
  }
  std::int64_t p = std::max<std::int64_t>(2 * max_abs + 1, 2);
  while (p <= kPrimeSearchCap &&
         (!IsPrime(p) ||
          std::log(static_cast<double>(p)) < need_log * (1.0 - 1e-15))) {
    ++p;
  }
  if (p > kPrimeSearchCap) {
    Fail(ErrorCode::kNoPrimeInRange, "no admissible prime below " +
                                         std::to_string(kPrimeSearchCap));
  }

  SumsetCertificate c;
  c.m = m;
  c.prime = p;
  c.h_order = p;
  c.size_a = c.size_b = static_cast<std::int64_t>(elems.size());
  c.sumset_size = static_cast<std::int64_t>(sums.size());
  c.sum_generates = true;
  c.nu1_f = c.nu1_g = k;
  // f(rho) = sum_{a in A} cos(2 pi a rho / p); mu2 over f^2.
  const double top = k * k;
  const double tol = 1e-9 * std::max(1.0, top);
  for (std::int64_t rho = 0; rho < p; ++rho) {
    double f = 0.0;
    for (std::int64_t x : elems) {
      const std::int64_t phase = ((x % p) * rho % p + p) % p;
      f += std::cos(2.0 * kPi * static_cast<double>(phase) / static_cast<double>(p));
    }
    const double v = f * f;
    if (v < top - tol && (!c.mu2 || v > *c.mu2)) c.mu2 = v;
  }
  // The integer variant uses nu2 of the squared transform: product rule.
  c.mu2_rule = Mu2Rule::kProduct;
  c.mu2_product = c.mu2;
  c.mu2_induced = c.mu2;
  if (elems.size() == 1 && elems[0] == 0) c.sum_generates = false;
  FillBound(c, std::log(static_cast<double>(p)));
  // The integer variant replaces |A||B| by the bound |A + A| <= k(k+1)/2.
  c.applicable = k * (k + 1.0) / 2.0 <= c.condition_value;
  return c;
}

}  // namespace abelspec
