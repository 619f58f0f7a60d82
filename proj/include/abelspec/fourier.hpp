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

#ifndef ABELSPEC_FOURIER_HPP_
#define ABELSPEC_FOURIER_HPP_

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "abelspec/group.hpp"

namespace abelspec {

using Complex = std::complex<double>;

// Transform-bearing operations use direct O(|G|^2) summation and refuse
// groups above this order.
inline constexpr std::int64_t kTransformOrderCap = 65536;
inline constexpr double kDefaultSupportTolerance = 1e-9;

// A function on the dual group, indexed by character exponent vector. Fourier
// transforms land here, and test vectors v in L(G^) live here as well.
class Spectrum {
 public:
  Spectrum(FiniteAbelianGroup group, std::vector<Complex> coefficients);
  static Spectrum Zero(FiniteAbelianGroup group);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  const Complex& operator[](ElementIndex chi) const {
    return coefficients_[static_cast<std::size_t>(chi)];
  }
  std::size_t size() const { return coefficients_.size(); }

 private:
  FiniteAbelianGroup group_;
  std::vector<Complex> coefficients_;
};

struct SpectralTerm {
  GroupElement character;
  double coefficient = 0.0;
};

// Dense complex function on a group. A function built from declared spectral
// terms keeps that exact spectrum; SpectrumOf() and SupportOfFunction() then
// return the declaration instead of a floating-point transform.
class GroupFunction {
 public:
  GroupFunction(FiniteAbelianGroup group, std::vector<Complex> values);
  static GroupFunction FromReal(FiniteAbelianGroup group,
                                std::span<const double> values);
  static GroupFunction FromSpectrum(const Spectrum& exact);
  static GroupFunction FromTerms(const FiniteAbelianGroup& group,
                                 std::span<const SpectralTerm> terms);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<Complex>& values() const { return values_; }
  const Complex& operator[](ElementIndex x) const {
    return values_[static_cast<std::size_t>(x)];
  }
  std::size_t size() const { return values_.size(); }

  const Spectrum* declared_spectrum() const { return declared_.get(); }
  bool is_spectral() const { return declared_ != nullptr; }

  double MaxAbs() const;
  // |Im f(x)| <= tol * max(1, max|f|) everywhere.
  bool IsReal(double tol = 1e-9) const;
  // Real parts; throws NotRealValued when IsReal(tol) fails.
  std::vector<double> RealValues(double tol = 1e-9) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<Complex> values_;
  std::shared_ptr<const Spectrum> declared_;
};

struct SupportSet {
  std::vector<ElementIndex> members;  // ascending index
  double tolerance = 0.0;
  bool declared = false;  // taken from a spectral declaration, no threshold

  std::size_t size() const { return members.size(); }
  bool Contains(ElementIndex chi) const;
};

// Function on G/H-perp induced by f (constant on cosets), together with the
// same function rebuilt from the Fourier coefficients through the quotient.
struct InducedFunction {
  QuotientGroup quotient;
  std::vector<Complex> values;       // f(representative of each coset)
  std::vector<Complex> transported;  // sum over supp of f^(chi) chi(rep)
};

Complex CharEval(const FiniteAbelianGroup& group, const GroupElement& a,
                 const GroupElement& x);
Complex CharEval(const FiniteAbelianGroup& group, ElementIndex a,
                 ElementIndex x);

// f^(chi) = (1/|G|) sum_x f(x) conj(chi(x)), by direct summation.
Spectrum FourierTransform(const GroupFunction& f);
// The declared spectrum for spectral-mode functions, FourierTransform otherwise.
Spectrum SpectrumOf(const GroupFunction& f);
// sum_chi s(chi) chi(x).
GroupFunction InverseTransform(const Spectrum& s);
// Fourier transform of a dual-side function, read back on G through the
// identification of the double dual with G: (1/|G|) sum_a v(a) conj(chi_a(x)).
GroupFunction TransformOfDual(const Spectrum& v);

// (f * g)(x) = (1/|G|) sum_y f(x - y) g(y).
GroupFunction Convolve(const GroupFunction& f, const GroupFunction& g);
Spectrum ConvolveDual(const Spectrum& v, const Spectrum& w);

// Members satisfy |s(chi)| > tau * max(1, max|s|); tau = 0 is an exact
// nonzero test.
SupportSet SupportOf(const Spectrum& s, double tau = kDefaultSupportTolerance);
SupportSet SupportOfFunction(const GroupFunction& f,
                             double tau = kDefaultSupportTolerance);

// h must contain the span of supp(f^). Throws NotConstantOnCosets when f is
// not constant on the cosets of h-perp.
InducedFunction Induce(const GroupFunction& f, const Subgroup& h,
                       double tau = kDefaultSupportTolerance);

// Inner product <f, g> = (1/|G|) sum f conj(g) over a dense vector.
Complex InnerProduct(std::span<const Complex> f, std::span<const Complex> g);

void CheckTransformCap(const FiniteAbelianGroup& group);

}  // namespace abelspec

#endif  // ABELSPEC_FOURIER_HPP_
