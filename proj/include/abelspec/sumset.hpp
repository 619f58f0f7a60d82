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

#ifndef ABELSPEC_SUMSET_HPP_
#define ABELSPEC_SUMSET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelspec/fourier.hpp"

namespace abelspec {

// Nonempty A with A = -A; elements ascending and distinct.
struct SymmetricSet {
  FiniteAbelianGroup group;
  std::vector<ElementIndex> elements;

  std::size_t size() const { return elements.size(); }
};

SymmetricSet MakeSymmetricSet(const FiniteAbelianGroup& group,
                              std::vector<ElementIndex> elements);

// {a + b}, ascending.
std::vector<ElementIndex> ComputeSumset(const SymmetricSet& a, const SymmetricSet& b);

// f(rho) = sum_{x in A} w(x) rho(x), carried with its exact spectrum w on A.
// Weights default to 1 and must be positive and symmetric.
GroupFunction IndicatorSpectrum(const SymmetricSet& a,
                                const std::vector<double>* weights = nullptr);

// kProduct:    max{f g : f g < nu1(f) nu1(g) - tol}; equals nu2 of the induced product.
// kFactorwise: max{f g : f < nu1(f) - tol and g < nu1(g) - tol}; reproduces the
//              published two-set example. Never exceeds the kProduct value.
enum class Mu2Rule { kProduct, kFactorwise };

std::string Mu2RuleName(Mu2Rule rule);

// Throws ConstantProduct if the admissible set is empty.
double Mu2(const GroupFunction& f, const GroupFunction& g,
           std::optional<double> tol_distinct = std::nullopt,
           Mu2Rule rule = Mu2Rule::kProduct);

struct SumsetCertificate {
  std::int64_t sumset_size = 0;  // exact |AB|
  std::int64_t size_a = 0;
  std::int64_t size_b = 0;
  // Headline bound, computed from mu2 under mu2_rule.
  Mu2Rule mu2_rule = Mu2Rule::kProduct;
  std::optional<double> mu2;
  // Same quantities under kProduct, which the induced-function argument covers.
  std::optional<double> mu2_product;
  std::optional<double> mu2_induced;  // nu2-distinct of fg on the quotient
  std::optional<double> lower_product;
  std::optional<std::int64_t> lower_ceiling_product;
  bool vacuous_product = false;
  double nu1_f = 0.0;
  double nu1_g = 0.0;
  std::int64_t m = 0;
  std::int64_t h_order = 0;  // |span(A u B)|, or p for the integer variant
  double condition_value = 0.0;  // 2 log|H| / log(m - 1)
  bool applicable = false;       // |A||B| <= condition_value
  bool s_condition = false;      // |AB| <= condition_value
  bool sum_generates = false;    // A + B generates H
  bool vacuous = false;          // log argument <= 0 or constant product
  std::optional<double> lower;
  std::optional<std::int64_t> lower_ceiling;
  double upper = 0.0;            // equals condition_value
  std::optional<std::int64_t> prime;  // integer variant only
};

// Requires m >= 5. The headline uses `rule`; the kProduct fields are always filled.
SumsetCertificate SumsetLowerBound(const SymmetricSet& a, const SymmetricSet& b,
                                   std::int64_t m,
                                   const std::vector<double>* weights_a = nullptr,
                                   const std::vector<double>* weights_b = nullptr,
                                   Mu2Rule rule = Mu2Rule::kFactorwise);

inline constexpr std::int64_t kPrimeSearchCap = 10'000'000;

// A + A over Z with A = -A, embedded in Z/p for the smallest prime
// p >= 2 max(A) + 1 with 2 log p / log(m-1) >= |A|(|A|+1)/2.
SumsetCertificate IntegerSumsetBound(const std::vector<std::int64_t>& a,
                                     std::int64_t m);

}  // namespace abelspec

#endif  // ABELSPEC_SUMSET_HPP_
