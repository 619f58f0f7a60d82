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

#ifndef ABELSPEC_TESTS_TEST_SUPPORT_HPP_
#define ABELSPEC_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <vector>

#include "abelspec/fourier.hpp"
#include "abelspec/group.hpp"
#include "oracles.hpp"

namespace support {

using abelspec::Complex;
using abelspec::ElementIndex;
using abelspec::FiniteAbelianGroup;
using abelspec::GroupFunction;
using abelspec::Spectrum;

inline oracle::Moduli ModuliOf(const FiniteAbelianGroup& g) {
  return {g.moduli().begin(), g.moduli().end()};
}

inline std::vector<Complex> RandomComplex(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<Complex> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

inline std::vector<double> RandomReal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Real positive definite function with `picks` random nontrivial characters
// (closed under negation) and coefficients uniform in [lo, hi].
inline GroupFunction RandomPosDef(const FiniteAbelianGroup& g, std::mt19937_64& rng,
                                  std::size_t picks, double lo = 1.0, double hi = 3.0) {
  std::uniform_int_distribution<ElementIndex> pick(1, g.order() - 1);
  std::uniform_real_distribution<double> coef(lo, hi);
  std::vector<Complex> c(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < picks; ++i) {
    const ElementIndex a = pick(rng);
    const double v = coef(rng);
    c[static_cast<std::size_t>(a)] = v;
    c[static_cast<std::size_t>(g.Negate(a))] = v;
  }
  return GroupFunction::FromSpectrum(Spectrum(g, std::move(c)));
}

// Same, but with at least one character that is not an involution.
inline GroupFunction RandomPosDefWithPair(const FiniteAbelianGroup& g, std::mt19937_64& rng,
                                          std::size_t picks, double lo = 1.0,
                                          double hi = 3.0) {
  for (;;) {
    GroupFunction f = RandomPosDef(g, rng, picks, lo, hi);
    const auto& c = f.declared_spectrum()->coefficients();
    for (ElementIndex a = 0; a < g.order(); ++a) {
      if (c[static_cast<std::size_t>(a)].real() > 0.0 && !g.IsInvolution(a)) return f;
    }
  }
}

// Draws from {Z/n (n <= max_n), Z/2 x Z/n, Z/3 x Z/3 x Z/m}.
inline FiniteAbelianGroup RandomFamilyGroup(std::mt19937_64& rng, std::int64_t max_n = 512) {
  std::uniform_int_distribution<int> family(0, 2);
  switch (family(rng)) {
    case 0:
      return FiniteAbelianGroup::Make({std::uniform_int_distribution<std::int64_t>(5, max_n)(rng)});
    case 1:
      return FiniteAbelianGroup::Make(
          {2, std::uniform_int_distribution<std::int64_t>(3, max_n / 2)(rng)});
    default:
      return FiniteAbelianGroup::Make(
          {3, 3, std::uniform_int_distribution<std::int64_t>(2, max_n / 9)(rng)});
  }
}

inline double MaxAbsDiff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double MaxAbs(const std::vector<Complex>& a) {
  double d = 0.0;
  for (const auto& x : a) d = std::max(d, std::abs(x));
  return d;
}

}  // namespace support

#endif  // ABELSPEC_TESTS_TEST_SUPPORT_HPP_
