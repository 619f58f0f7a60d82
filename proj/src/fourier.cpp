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

#include "abelspec/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abelspec/error.hpp"

namespace abelspec {
namespace {

std::vector<Complex> RootsOfUnity(std::int64_t l) {
  std::vector<Complex> roots(static_cast<std::size_t>(l));
  for (std::int64_t p = 0; p < l; ++p) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(l);
    roots[static_cast<std::size_t>(p)] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

// out[a] = scale * sum_x in[x] * chi_a(x)^(+-1), fixed summation order in x.
std::vector<Complex> DirectTransform(const FiniteAbelianGroup& group,
                                     std::span<const Complex> in,
                                     bool conjugate, double scale) {
  CheckTransformCap(group);
  const std::int64_t n = group.order();
  const std::int64_t l = group.exponent();
  const std::size_t k = group.rank();
  const auto roots = RootsOfUnity(l);
  const auto scaled = group.ScaledResidueTable();
  const auto moduli = group.moduli();
  std::vector<Complex> out(static_cast<std::size_t>(n));
  std::vector<std::int64_t> a_res(k);
  for (ElementIndex a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      a_res[j] = scaled[static_cast<std::size_t>(a) * k + j] / (l / moduli[j]);
    }
    Complex acc = 0.0;
    for (ElementIndex x = 0; x < n; ++x) {
      std::int64_t phase = 0;
      const std::int64_t* xs = &scaled[static_cast<std::size_t>(x) * k];
      for (std::size_t j = 0; j < k; ++j) phase += a_res[j] * xs[j];
      phase %= l;
      if (conjugate && phase != 0) phase = l - phase;
      acc += in[static_cast<std::size_t>(x)] *
             roots[static_cast<std::size_t>(phase)];
    }
    out[static_cast<std::size_t>(a)] = acc * scale;
  }
  return out;
}

std::vector<Complex> DirectConvolve(const FiniteAbelianGroup& group,
                                    std::span<const Complex> f,
                                    std::span<const Complex> g) {
  CheckTransformCap(group);
  const std::int64_t n = group.order();
  const std::size_t k = group.rank();
  const auto moduli = group.moduli();
  std::vector<std::int64_t> strides(k, 1);
  for (std::size_t j = k - 1; j > 0; --j) strides[j - 1] = strides[j] * moduli[j];
  std::vector<std::int64_t> res(static_cast<std::size_t>(n) * k);
  for (ElementIndex i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      res[static_cast<std::size_t>(i) * k + j] = (i / strides[j]) % moduli[j];
    }
  }
  std::vector<Complex> out(static_cast<std::size_t>(n));
  const double inv = 1.0 / static_cast<double>(n);
  for (ElementIndex x = 0; x < n; ++x) {
    Complex acc = 0.0;
    for (ElementIndex y = 0; y < n; ++y) {
      ElementIndex d = 0;
      for (std::size_t j = 0; j < k; ++j) {
        std::int64_t r = res[static_cast<std::size_t>(x) * k + j] -
                         res[static_cast<std::size_t>(y) * k + j];
        if (r < 0) r += moduli[j];
        d += r * strides[j];
      }
      acc += f[static_cast<std::size_t>(d)] * g[static_cast<std::size_t>(y)];
    }
    out[static_cast<std::size_t>(x)] = acc * inv;
  }
  return out;
}

void CheckFinite(std::span<const Complex> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      Fail(ErrorCode::kNonFiniteValue,
           "non-finite entry at index " + std::to_string(i));
    }
  }
}

}  // namespace

void CheckTransformCap(const FiniteAbelianGroup& group) {
  if (group.order() > kTransformOrderCap) {
    Fail(ErrorCode::kTransformCapExceeded,
         "order " + std::to_string(group.order()) +
             " exceeds transform cap " + std::to_string(kTransformOrderCap));
  }
}

Spectrum::Spectrum(FiniteAbelianGroup group, std::vector<Complex> coefficients)
    : group_(std::move(group)), coefficients_(std::move(coefficients)) {
  if (static_cast<std::int64_t>(coefficients_.size()) != group_.order()) {
    Fail(ErrorCode::kLengthMismatch,
         "spectrum length " + std::to_string(coefficients_.size()) +
             " does not match group order " + std::to_string(group_.order()));
  }
  CheckFinite(coefficients_);
}

Spectrum Spectrum::Zero(FiniteAbelianGroup group) {
  const auto n = static_cast<std::size_t>(group.order());
  return Spectrum(std::move(group), std::vector<Complex>(n));
}

GroupFunction::GroupFunction(FiniteAbelianGroup group,
                             std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != group_.order()) {
    Fail(ErrorCode::kLengthMismatch,
         "function length " + std::to_string(values_.size()) +
             " does not match group order " + std::to_string(group_.order()));
  }
  CheckFinite(values_);
}

GroupFunction GroupFunction::FromReal(FiniteAbelianGroup group,
                                      std::span<const double> values) {
  std::vector<Complex> v(values.begin(), values.end());
  return GroupFunction(std::move(group), std::move(v));
}

GroupFunction GroupFunction::FromSpectrum(const Spectrum& exact) {
  const FiniteAbelianGroup& group = exact.group();
  const std::int64_t n = group.order();
  const std::int64_t l = group.exponent();
  std::vector<ElementIndex> support;
  for (ElementIndex a = 0; a < n; ++a) {
    if (exact[a] != Complex(0.0)) support.push_back(a);
  }
  std::vector<Complex> values(static_cast<std::size_t>(n));
  for (ElementIndex x = 0; x < n; ++x) {
    Complex acc = 0.0;
    for (ElementIndex a : support) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>(group.Phase(a, x)) /
                           static_cast<double>(l);
      acc += exact[a] * Complex(std::cos(angle), std::sin(angle));
    }
    values[static_cast<std::size_t>(x)] = acc;
  }
  GroupFunction f(group, std::move(values));
  f.declared_ = std::make_shared<const Spectrum>(exact);
  return f;
}

GroupFunction GroupFunction::FromTerms(const FiniteAbelianGroup& group,
                                       std::span<const SpectralTerm> terms) {
  std::vector<Complex> coefficients(static_cast<std::size_t>(group.order()));
  for (const auto& term : terms) {
    if (!std::isfinite(term.coefficient)) {
      Fail(ErrorCode::kNonFiniteValue, "non-finite spectral coefficient");
    }
    coefficients[static_cast<std::size_t>(group.IndexOf(term.character))] +=
        term.coefficient;
  }
  return FromSpectrum(Spectrum(group, std::move(coefficients)));
}

double GroupFunction::MaxAbs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GroupFunction::IsReal(double tol) const {
  const double bound = tol * std::max(1.0, MaxAbs());
  return std::all_of(values_.begin(), values_.end(), [&](const Complex& v) {
    return std::abs(v.imag()) <= bound;
  });
}

std::vector<double> GroupFunction::RealValues(double tol) const {
  if (!IsReal(tol)) {
    Fail(ErrorCode::kNotRealValued, "function has non-negligible imaginary part");
  }
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i].real();
  return out;
}

bool SupportSet::Contains(ElementIndex chi) const {
  return std::binary_search(members.begin(), members.end(), chi);
}

Complex CharEval(const FiniteAbelianGroup& group, const GroupElement& a,
                 const GroupElement& x) {
  return CharEval(group, group.IndexOf(a), group.IndexOf(x));
}

Complex CharEval(const FiniteAbelianGroup& group, ElementIndex a,
                 ElementIndex x) {
  group.CheckIndex(a);
  group.CheckIndex(x);
  const double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(group.Phase(a, x)) /
                       static_cast<double>(group.exponent());
  return {std::cos(angle), std::sin(angle)};
}

Spectrum FourierTransform(const GroupFunction& f) {
  return Spectrum(f.group(),
                  DirectTransform(f.group(), f.values(), /*conjugate=*/true,
                                  1.0 / static_cast<double>(f.group().order())));
}

Spectrum SpectrumOf(const GroupFunction& f) {
  if (const Spectrum* s = f.declared_spectrum()) return *s;
  return FourierTransform(f);
}

GroupFunction InverseTransform(const Spectrum& s) {
  return GroupFunction(s.group(), DirectTransform(s.group(), s.coefficients(),
                                                  /*conjugate=*/false, 1.0));
}

GroupFunction TransformOfDual(const Spectrum& v) {
  return GroupFunction(
      v.group(),
      DirectTransform(v.group(), v.coefficients(), /*conjugate=*/true,
                      1.0 / static_cast<double>(v.group().order())));
}

GroupFunction Convolve(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group() == g.group())) {
    Fail(ErrorCode::kGroupMismatch, f.group().ToString() + " vs " +
                                        g.group().ToString());
  }
  return GroupFunction(f.group(),
                       DirectConvolve(f.group(), f.values(), g.values()));
}

Spectrum ConvolveDual(const Spectrum& v, const Spectrum& w) {
  if (!(v.group() == w.group())) {
    Fail(ErrorCode::kGroupMismatch, v.group().ToString() + " vs " +
                                        w.group().ToString());
  }
  return Spectrum(v.group(),
                  DirectConvolve(v.group(), v.coefficients(), w.coefficients()));
}

SupportSet SupportOf(const Spectrum& s, double tau) {
  if (tau < 0.0 || std::isnan(tau)) {
    Fail(ErrorCode::kNegativeTolerance, "support tolerance must be >= 0");
  }
  double max_abs = 0.0;
  for (const auto& c : s.coefficients()) max_abs = std::max(max_abs, std::abs(c));
  const double threshold = tau * std::max(1.0, max_abs);
  SupportSet out;
  out.tolerance = tau;
  for (ElementIndex a = 0; a < static_cast<ElementIndex>(s.size()); ++a) {
    if (std::abs(s[a]) > threshold) out.members.push_back(a);
  }
  return out;
}

SupportSet SupportOfFunction(const GroupFunction& f, double tau) {
  if (const Spectrum* s = f.declared_spectrum()) {
    SupportSet out = SupportOf(*s, 0.0);
    out.declared = true;
    return out;
  }
  return SupportOf(FourierTransform(f), tau);
}

InducedFunction Induce(const GroupFunction& f, const Subgroup& h, double tau) {
  const FiniteAbelianGroup& g = f.group();
  if (!(h.group() == g)) {
    Fail(ErrorCode::kGroupMismatch, "subgroup carrier differs from function");
  }
  const Spectrum spectrum = SpectrumOf(f);
  const SupportSet support = SupportOfFunction(f, tau);
  QuotientGroup quotient(Annihilator(h));

  const double tol = 1e-9 * std::max(1.0, f.MaxAbs());
  std::vector<Complex> values(static_cast<std::size_t>(quotient.num_cosets()));
  std::vector<Complex> transported(values.size());
  for (std::int64_t c = 0; c < quotient.num_cosets(); ++c) {
    const ElementIndex rep = quotient.Representative(c);
    values[static_cast<std::size_t>(c)] = f[rep];
    Complex acc = 0.0;
    for (ElementIndex chi : support.members) {
      acc += spectrum[chi] * CharEval(g, chi, rep);
    }
    transported[static_cast<std::size_t>(c)] = acc;
    if (std::abs(acc - f[rep]) > tol) {
      Fail(ErrorCode::kNotConstantOnCosets,
           "transported expansion disagrees with f at coset " +
               std::to_string(c));
    }
  }
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const auto c = quotient.Project(x);
    if (std::abs(f[x] - values[static_cast<std::size_t>(c)]) > tol) {
      Fail(ErrorCode::kNotConstantOnCosets,
           "f varies on the coset of element " + std::to_string(x));
    }
  }
  return InducedFunction{std::move(quotient), std::move(values),
                         std::move(transported)};
}

Complex InnerProduct(std::span<const Complex> f, std::span<const Complex> g) {
  if (f.size() != g.size()) {
    Fail(ErrorCode::kLengthMismatch, "inner product of unequal lengths");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return acc / static_cast<double>(f.size());
}

}  // namespace abelspec
