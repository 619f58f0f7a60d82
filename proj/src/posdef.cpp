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

#include "abelspec/posdef.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "abelspec/error.hpp"

namespace abelspec {

double ValueProfile::nu(std::size_t k) const {
  if (k == 0 || k > sorted.size()) {
    Fail(ErrorCode::kBadK, "nu index " + std::to_string(k) + " out of range");
  }
  return sorted[k - 1];
}

ValueProfile ProfileOf(std::span<const double> values,
                       std::optional<double> tol_distinct) {
  if (values.empty()) Fail(ErrorCode::kLengthMismatch, "empty value list");
  ValueProfile p;
  p.sorted.assign(values.begin(), values.end());
  std::sort(p.sorted.begin(), p.sorted.end(), std::greater<>());
  const double nu1 = p.sorted.front();
  p.tol_distinct = tol_distinct.value_or(1e-9 * std::max(1.0, std::abs(nu1)));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= nu1 - p.tol_distinct) {
      p.argmax.push_back(static_cast<ElementIndex>(i));
    }
  }
  for (double v : p.sorted) {
    if (v < nu1 - p.tol_distinct) {
      p.nu2_distinct = v;
      break;
    }
  }
  return p;
}

ValueProfile ValueProfileOf(const GroupFunction& f,
                            std::optional<double> tol_distinct) {
  const auto values = f.RealValues();
  return ProfileOf(values, tol_distinct);
}

PosDefCertificate IsPositiveDefinite(const GroupFunction& f, double tau) {
  PosDefCertificate cert;
  cert.exact = f.is_spectral();
  cert.tolerance = cert.exact ? 0.0 : tau;
  const Spectrum s = SpectrumOf(f);
  cert.min_real = s[0].real();
  cert.max_imag = std::abs(s[0].imag());
  for (ElementIndex a = 0; a < static_cast<ElementIndex>(s.size()); ++a) {
    if (s[a].real() < cert.min_real) {
      cert.min_real = s[a].real();
      cert.min_real_at = a;
    }
    if (std::abs(s[a].imag()) > cert.max_imag) {
      cert.max_imag = std::abs(s[a].imag());
      cert.max_imag_at = a;
    }
  }
  cert.verdict = cert.min_real >= -cert.tolerance &&
                 cert.max_imag <= cert.tolerance;
  return cert;
}

double Rayleigh(const GroupFunction& f, const Spectrum& v) {
  if (!(f.group() == v.group())) {
    Fail(ErrorCode::kGroupMismatch, "test vector lives on a different group");
  }
  if (!f.IsReal()) {
    Fail(ErrorCode::kNotRealValued, "Rayleigh quotient needs a real function");
  }
  const Complex den = InnerProduct(v.coefficients(), v.coefficients());
  if (den.real() == 0.0) Fail(ErrorCode::kZeroVector, "test vector is zero");
  const Spectrum conv = ConvolveDual(SpectrumOf(f), v);
  const Complex num = static_cast<double>(f.group().order()) *
                      InnerProduct(conv.coefficients(), v.coefficients());
  const Complex r = num / den.real();
  if (std::abs(r.imag()) > 1e-9 * std::max(1.0, std::abs(r.real()))) {
    Fail(ErrorCode::kNotRealValued, "Rayleigh quotient has imaginary residue");
  }
  return r.real();
}

Spectrum DeltaWitness(const FiniteAbelianGroup& group, ElementIndex x0) {
  group.CheckIndex(x0);
  std::vector<Complex> v(static_cast<std::size_t>(group.order()));
  for (ElementIndex a = 0; a < group.order(); ++a) {
    v[static_cast<std::size_t>(a)] = std::conj(CharEval(group, a, x0));
  }
  return Spectrum(group, std::move(v));
}

RayleighCheck MaxEqualsSupRayleigh(const GroupFunction& f,
                                   std::size_t random_samples,
                                   std::uint64_t seed) {
  const ValueProfile profile = ValueProfileOf(f);
  RayleighCheck out;
  out.max_value = profile.nu1();
  out.witness = profile.argmax.front();
  out.witness_rayleigh = Rayleigh(f, DeltaWitness(f.group(), out.witness));
  out.sup_rayleigh = out.witness_rayleigh;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto n = static_cast<std::size_t>(f.group().order());
  for (std::size_t s = 0; s < random_samples; ++s) {
    std::vector<Complex> v(n);
    for (auto& c : v) c = {normal(rng), normal(rng)};
    out.sup_rayleigh =
        std::max(out.sup_rayleigh, Rayleigh(f, Spectrum(f.group(), v)));
  }
  return out;
}

NuNextBound NuNextBoundOf(const GroupFunction& f, const Spectrum& v,
                          std::size_t k) {
  const auto n = static_cast<std::size_t>(f.group().order());
  if (k < 1 || k >= n) {
    Fail(ErrorCode::kBadK, "k must satisfy 1 <= k < |G|");
  }
  double scale = 0.0;
  for (const auto& c : v.coefficients()) scale = std::max(scale, std::abs(c));
  NuNextBound out;
  out.k = k;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex c = v.coefficients()[i];
    if (c.real() < 0.0 || std::abs(c.imag()) > 1e-12 * std::max(1.0, scale)) {
      Fail(ErrorCode::kNegativeEntries,
           "test vector entry " + std::to_string(i) + " is not a nonnegative real");
    }
    if (c.real() > 0.0) ++out.mu;
  }
  if (out.mu == 0) Fail(ErrorCode::kZeroVector, "test vector is zero");
  if (out.mu * k == n) {
    Fail(ErrorCode::kDegenerateDenominator, "k * |supp(v)| equals |G|");
  }
  const ValueProfile profile = ValueProfileOf(f);
  double head = 0.0;
  for (std::size_t i = 1; i <= k; ++i) head += profile.nu(i);
  out.rayleigh = Rayleigh(f, v);
  const double g = static_cast<double>(n);
  const double mu = static_cast<double>(out.mu);
  out.value = (g * out.rayleigh - mu * head) / (g - mu * static_cast<double>(k));
  out.direction =
      out.mu * k < n ? BoundDirection::kLower : BoundDirection::kUpper;
  return out;
}

std::int64_t Nu1Multiplicity(const GroupFunction& f, double tau) {
  if (!IsPositiveDefinite(f, tau).verdict) {
    Fail(ErrorCode::kNotPositiveDefinite, "nu1 multiplicity needs f >= 0");
  }
  if (!f.IsReal()) Fail(ErrorCode::kNotRealValued, "f must be real-valued");
  const SupportSet support = SupportOfFunction(f, tau);
  const Subgroup h = SpanIndices(f.group(), support.members);
  return f.group().order() / h.order();
}

PosNegSplit SplitPosNeg(const GroupFunction& f, double tau) {
  const Spectrum s = SpectrumOf(f);
  double scale = 0.0;
  for (const auto& c : s.coefficients()) scale = std::max(scale, std::abs(c));
  const double threshold = f.is_spectral() ? 0.0 : tau * std::max(1.0, scale);
  std::vector<Complex> pos(s.size()), neg(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex c = s.coefficients()[i];
    if (std::abs(c.imag()) > threshold) {
      Fail(ErrorCode::kComplexCoefficients,
           "coefficient " + std::to_string(i) + " is not real");
    }
    const double re = c.real();
    if (std::abs(re) <= threshold) continue;
    if (re > 0.0) {
      pos[i] = re;
    } else if (re < 0.0) {
      neg[i] = -re;
    }
  }
  return PosNegSplit{
      GroupFunction::FromSpectrum(Spectrum(f.group(), std::move(pos))),
      GroupFunction::FromSpectrum(Spectrum(f.group(), std::move(neg)))};
}

}  // namespace abelspec
