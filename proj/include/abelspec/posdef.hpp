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

#ifndef ABELSPEC_POSDEF_HPP_
#define ABELSPEC_POSDEF_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "abelspec/fourier.hpp"

namespace abelspec {

// Values of a real function in non-increasing order, counted with
// multiplicity. nu(1) is the maximum; nu(2) is the "second largest value with
// multiplicity" and equals nu(1) whenever the maximum is attained twice.
// nu2_distinct is the largest value strictly below nu(1) - tol_distinct.
struct ValueProfile {
  std::vector<double> sorted;
  std::optional<double> nu2_distinct;
  std::vector<ElementIndex> argmax;
  double tol_distinct = 0.0;

  double nu(std::size_t k) const;  // 1-based
  double nu1() const { return sorted.front(); }
  std::size_t nu1_multiplicity() const { return argmax.size(); }
};

// Default grouping tolerance is 1e-9 * max(1, |nu1|).
ValueProfile ProfileOf(std::span<const double> values,
                       std::optional<double> tol_distinct = std::nullopt);
ValueProfile ValueProfileOf(const GroupFunction& f,
                            std::optional<double> tol_distinct = std::nullopt);

struct PosDefCertificate {
  bool verdict = false;
  double min_real = 0.0;  // most negative real part among coefficients
  ElementIndex min_real_at = 0;
  double max_imag = 0.0;  // largest |imaginary part|
  ElementIndex max_imag_at = 0;
  double tolerance = 0.0;
  bool exact = false;  // decided on a declared spectrum
};

// f is positive definite when every Fourier coefficient is a nonnegative real.
// Declared spectra are tested exactly; otherwise Re >= -tau and |Im| <= tau.
PosDefCertificate IsPositiveDefinite(const GroupFunction& f,
                                     double tau = kDefaultSupportTolerance);

// R_f(v) = |G| <f^ * v, v> / <v, v> for a test vector v on the dual.
double Rayleigh(const GroupFunction& f, const Spectrum& v);

// v = |G| (delta_{x0})^, for which R_f(v) = f(x0).
Spectrum DeltaWitness(const FiniteAbelianGroup& group, ElementIndex x0);

struct RayleighCheck {
  double max_value = 0.0;
  double sup_rayleigh = 0.0;  // over the witness and the random samples
  double witness_rayleigh = 0.0;
  ElementIndex witness = 0;
};

RayleighCheck MaxEqualsSupRayleigh(const GroupFunction& f,
                                   std::size_t random_samples = 16,
                                   std::uint64_t seed = 0x5eed);

enum class BoundDirection { kLower, kUpper };

struct NuNextBound {
  double value = 0.0;
  BoundDirection direction = BoundDirection::kLower;
  std::size_t k = 1;
  std::size_t mu = 0;  // |supp(v)|
  double rayleigh = 0.0;
};

// M = (|G| R_f(v) - mu sum_{i<=k} nu_i(f)) / (|G| - mu k). nu_{k+1}(f) >= M
// when k mu < |G| and nu_{k+1}(f) <= M when k mu > |G|.
NuNextBound NuNextBoundOf(const GroupFunction& f, const Spectrum& v,
                          std::size_t k);

// |G^ / span(supp f^)|, the number of points where f attains its maximum.
std::int64_t Nu1Multiplicity(const GroupFunction& f,
                             double tau = kDefaultSupportTolerance);

struct PosNegSplit {
  GroupFunction positive;
  GroupFunction negative;
};

// f = f1 - f2 with f1^ = max(f^, 0) and f2^ = max(-f^, 0). Both parts carry
// exact declared spectra; coefficients below tau * max(1, max|f^|) are
// dropped for pointwise input.
PosNegSplit SplitPosNeg(const GroupFunction& f,
                        double tau = kDefaultSupportTolerance);

}  // namespace abelspec

#endif  // ABELSPEC_POSDEF_HPP_
