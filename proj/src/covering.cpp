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

#include "abelspec/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abelspec/error.hpp"
#include "abelspec/posdef.hpp"

namespace abelspec {
namespace {

constexpr double kPi = std::numbers::pi;

double SumOf(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

void CheckPairingShape(const SupportPairing& p) {
  const auto& g = p.group;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  auto claim = [&](ElementIndex chi) {
    g.CheckIndex(chi);
    if (seen[static_cast<std::size_t>(chi)]) {
      Fail(ErrorCode::kArityMismatch,
           "character " + std::to_string(chi) + " appears twice in pairing");
    }
    seen[static_cast<std::size_t>(chi)] = true;
  };
  for (ElementIndex chi : p.reps) {
    if (g.IsInvolution(chi)) {
      Fail(ErrorCode::kArityMismatch, "pair representative is an involution");
    }
    claim(chi);
    claim(g.Negate(chi));
  }
  for (ElementIndex chi : p.involutions) {
    if (!g.IsInvolution(chi)) {
      Fail(ErrorCode::kArityMismatch, "listed involution has order > 2");
    }
    claim(chi);
  }
}

void CheckM(const SupportPairing& p, const std::vector<std::int64_t>& m) {
  if (p.r() == 0) Fail(ErrorCode::kRZero, "no conjugate pairs in support (r = 0)");
  if (m.size() != p.r()) {
    Fail(ErrorCode::kArityMismatch, "m has " + std::to_string(m.size()) +
                                        " entries, r = " + std::to_string(p.r()));
  }
  for (std::int64_t mi : m) {
    if (mi < 2) Fail(ErrorCode::kBadM, "every m_i must be >= 2");
  }
}

BoundReport BaseReport(const GroupFunction& f, const SupportPairing& p) {
  BoundReport rep;
  rep.r = p.r();
  rep.t = p.t();
  rep.s = p.s();
  rep.nu1 = f[0].real();
  const Subgroup h = SpanIndices(
      p.group, [&] {
        std::vector<ElementIndex> gens(p.reps);
        gens.insert(gens.end(), p.involutions.begin(), p.involutions.end());
        return gens;
      }());
  rep.nu1_multiplicity = p.group.order() / h.order();
  return rep;
}

// m^2 (|G| - box), the weak-form objective scaled by |G|.
__int128 WeakObjective(std::int64_t order, std::int64_t m, std::int64_t box) {
  return static_cast<__int128>(m) * m * (order - box);
}

}  // namespace

ElementIndex SupportPairing::Generator(std::size_t i) const {
  return i < reps.size() ? reps[i] : involutions.at(i - reps.size());
}

double SupportPairing::PairCoefficientSum() const {
  return SumOf(rep_coefficients);
}

double SupportPairing::InvolutionCoefficientSum() const {
  return SumOf(involution_coefficients);
}

SupportPairing PairSupport(const GroupFunction& f, double tau) {
  if (!f.IsReal()) Fail(ErrorCode::kNotRealValued, "f must be real-valued");
  const PosDefCertificate cert = IsPositiveDefinite(f, tau);
  if (!cert.verdict) {
    Fail(ErrorCode::kNotPositiveDefinite,
         "coefficient at character " + std::to_string(cert.min_real_at) +
             " is negative or complex");
  }
  const SupportSet support = SupportOfFunction(f, tau);
  if (support.members.empty()) Fail(ErrorCode::kEmptySupport, "f^ is zero");
  const Spectrum s = SpectrumOf(f);
  double scale = 0.0;
  for (const auto& c : s.coefficients()) scale = std::max(scale, std::abs(c));

  const auto& g = f.group();
  SupportPairing p{g, {}, {}, {}, {}, {}, support.tolerance};
  for (ElementIndex chi : support.members) {
    if (g.IsInvolution(chi)) {
      p.involutions.push_back(chi);
      p.involution_coefficients.push_back(s[chi].real());
      continue;
    }
    const ElementIndex neg = g.Negate(chi);
    if (neg < chi) continue;
    if (!support.Contains(neg)) {
      Fail(ErrorCode::kNotRealValued,
           "support is not closed under conjugation at " + std::to_string(chi));
    }
    const double a = s[chi].real();
    const double b = s[neg].real();
    if (std::abs(a - b) > 1e-9 * std::max(1.0, scale)) {
      Fail(ErrorCode::kNotRealValued, "f^(chi) != f^(-chi) at " +
                                          std::to_string(chi));
    }
    p.reps.push_back(chi);
    p.rep_coefficients.push_back(a);
    p.conj_coefficients.push_back(b);
  }
  return p;
}

SupportPairing MakePairing(const FiniteAbelianGroup& group,
                           std::vector<ElementIndex> reps,
                           std::vector<double> rep_coefficients,
                           std::vector<double> conj_coefficients,
                           std::vector<ElementIndex> involutions,
                           std::vector<double> involution_coefficients) {
  if (rep_coefficients.size() != reps.size() ||
      conj_coefficients.size() != reps.size() ||
      involution_coefficients.size() != involutions.size()) {
    Fail(ErrorCode::kArityMismatch, "coefficient lists do not match characters");
  }
  SupportPairing p{group,
                   std::move(reps),
                   std::move(involutions),
                   std::move(rep_coefficients),
                   std::move(conj_coefficients),
                   std::move(involution_coefficients),
                   0.0};
  CheckPairingShape(p);
  return p;
}

void LatticeFunction::Normalize(Point& z) const {
  if (z.size() != arity()) {
    Fail(ErrorCode::kArityMismatch, "lattice point has wrong arity");
  }
  for (std::size_t i = r_; i < z.size(); ++i) {
    z[i] = ((z[i] % 2) + 2) % 2;
  }
}

void LatticeFunction::Add(Point z, double value) {
  Normalize(z);
  entries_[std::move(z)] += value;
}

double LatticeFunction::At(Point z) const {
  Normalize(z);
  const auto it = entries_.find(z);
  return it == entries_.end() ? 0.0 : it->second;
}

std::size_t LatticeFunction::SupportSize() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [](const auto& kv) { return kv.second != 0.0; }));
}

ElementIndex Eta(const SupportPairing& pairing, const LatticeFunction::Point& z) {
  if (z.size() != pairing.arity()) {
    Fail(ErrorCode::kArityMismatch, "lattice point arity != r + t");
  }
  const auto& g = pairing.group;
  ElementIndex out = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out = g.Add(out, g.Multiple(pairing.Generator(i), z[i]));
  }
  return out;
}

Spectrum EtaPushforward(const SupportPairing& pairing, const LatticeFunction& h) {
  if (h.r() != pairing.r() || h.t() != pairing.t()) {
    Fail(ErrorCode::kArityMismatch, "lattice function arity != pairing");
  }
  std::vector<Complex> v(static_cast<std::size_t>(pairing.group.order()));
  for (const auto& [z, value] : h.entries()) {
    v[static_cast<std::size_t>(Eta(pairing, z))] += value;
  }
  return Spectrum(pairing.group, std::move(v));
}

Spectrum ApplyMDual(const GroupFunction& f, const Spectrum& v) {
  if (!(f.group() == v.group())) {
    Fail(ErrorCode::kGroupMismatch, "operator and vector on different groups");
  }
  const Spectrum conv = ConvolveDual(SpectrumOf(f), v);
  std::vector<Complex> out(conv.coefficients());
  const double n = static_cast<double>(f.group().order());
  for (auto& c : out) c *= n;
  return Spectrum(f.group(), std::move(out));
}

LatticeFunction ApplyMLattice(const SupportPairing& pairing,
                              const LatticeFunction& h) {
  if (h.r() != pairing.r() || h.t() != pairing.t()) {
    Fail(ErrorCode::kArityMismatch, "lattice function arity != pairing");
  }
  LatticeFunction out(h.r(), h.t());
  // Output point z - w receives f^(-eta(w)) h(z).
  for (const auto& [z, value] : h.entries()) {
    for (std::size_t i = 0; i < pairing.r(); ++i) {
      auto zp = z;
      --zp[i];
      out.Add(zp, pairing.conj_coefficients[i] * value);
      auto zm = z;
      ++zm[i];
      out.Add(zm, pairing.rep_coefficients[i] * value);
    }
    for (std::size_t j = 0; j < pairing.t(); ++j) {
      auto zi = z;
      zi[pairing.r() + j] += 1;
      out.Add(zi, pairing.involution_coefficients[j] * value);
    }
  }
  return out;
}

LatticeFunction MakeH0(const SupportPairing& pairing,
                       const std::vector<std::int64_t>& m) {
  CheckM(pairing, m);
  const std::size_t r = pairing.r();
  const std::size_t t = pairing.t();
  LatticeFunction h(r, t);
  LatticeFunction::Point z(r + t, 0);
  for (std::size_t i = 0; i < r; ++i) z[i] = 1;
  // Odometer over the box and the involution cube.
  while (true) {
    double value = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
      value *= std::sin(kPi * static_cast<double>(z[i]) /
                        static_cast<double>(m[i]));
    }
    h.Add(z, value);
    std::size_t i = r + t;
    while (i > 0) {
      --i;
      const std::int64_t hi = i < r ? m[i] - 1 : 1;
      const std::int64_t lo = i < r ? 1 : 0;
      if (z[i] < hi) {
        ++z[i];
        break;
      }
      z[i] = lo;
      if (i == 0) return h;
    }
    if (r + t == 0) return h;
  }
}

double RayleighFloor(const SupportPairing& pairing,
                     const std::vector<std::int64_t>& m) {
  CheckM(pairing, m);
  double c = pairing.InvolutionCoefficientSum();
  for (std::size_t i = 0; i < pairing.r(); ++i) {
    c += 2.0 * std::cos(kPi / static_cast<double>(m[i])) *
         pairing.rep_coefficients[i];
  }
  return c;
}

std::optional<std::int64_t> BoxSize(std::size_t t,
                                    const std::vector<std::int64_t>& m,
                                    std::int64_t cap) {
  __int128 box = 1;
  for (std::size_t j = 0; j < t; ++j) {
    box *= 2;
    if (box >= cap) return std::nullopt;
  }
  for (std::int64_t mi : m) {
    box *= (mi - 1);
    if (box >= cap) return std::nullopt;
  }
  return static_cast<std::int64_t>(box);
}

std::string BoundFormName(BoundForm form) {
  switch (form) {
    case BoundForm::kSharp:
      return "sharp";
    case BoundForm::kWeak:
      return "weak";
    case BoundForm::kMulti:
      return "multi";
  }
  return "multi";
}

void AttachOracle(BoundReport& report, const GroupFunction& f) {
  const ValueProfile profile = ValueProfileOf(f);
  if (profile.sorted.size() >= 2) report.oracle_nu2 = profile.nu(2);
  report.oracle_nu2_distinct = profile.nu2_distinct;
}

BoundReport BoundMulti(const GroupFunction& f, const std::vector<std::int64_t>& m,
                       double tau) {
  return BoundMulti(f, PairSupport(f, tau), m);
}

BoundReport BoundMulti(const GroupFunction& f, const SupportPairing& pairing,
                       const std::vector<std::int64_t>& m) {
  CheckM(pairing, m);
  BoundReport rep = BaseReport(f, pairing);
  rep.form = BoundForm::kMulti;
  rep.m = m;
  rep.rayleigh_floor = RayleighFloor(pairing, m);
  const std::int64_t order = f.group().order();
  const auto box = BoxSize(pairing.t(), m, order);
  if (!box) return rep;  // support box not smaller than |G|
  rep.mu = *box;
  double sum = 0.0;
  for (std::size_t i = 0; i < pairing.r(); ++i) {
    const double sn = std::sin(kPi / (2.0 * static_cast<double>(m[i])));
    sum += pairing.rep_coefficients[i] * sn * sn;
  }
  const double g = static_cast<double>(order);
  rep.bound = rep.nu1 - 4.0 * g * sum / (g - static_cast<double>(*box));
  rep.valid = true;
  return rep;
}

UniformBound BoundUniform(const GroupFunction& f, std::int64_t m, double tau) {
  return BoundUniform(f, PairSupport(f, tau), m);
}

UniformBound BoundUniform(const GroupFunction& f, const SupportPairing& pairing,
                          std::int64_t m) {
  const std::vector<std::int64_t> mv(pairing.r(), m);
  CheckM(pairing, mv);
  const std::int64_t order = f.group().order();
  const auto box = BoxSize(pairing.t(), mv, order);
  if (!box) {
    Fail(ErrorCode::kMTooLarge, "2^t (m-1)^r >= |G| for m = " + std::to_string(m));
  }
  UniformBound out{BaseReport(f, pairing), {}};
  BoundReport& sharp = out.sharp;
  sharp.m = mv;
  sharp.mu = *box;
  sharp.rayleigh_floor = RayleighFloor(pairing, mv);
  sharp.valid = true;
  out.weak = sharp;
  sharp.form = BoundForm::kSharp;
  out.weak.form = BoundForm::kWeak;

  const double g = static_cast<double>(order);
  const double md = static_cast<double>(m);
  const double den = g - static_cast<double>(*box);
  const double sn = std::sin(kPi / (2.0 * md));
  sharp.bound = sharp.nu1 - 4.0 * g * sn * sn * pairing.PairCoefficientSum() / den;
  out.weak.bound = out.weak.nu1 * (1.0 - kPi * kPi * g / (2.0 * md * md * den));
  return out;
}

double Theta(double x, double c, double d) {
  return x * x * (1.0 - c * std::pow(x - 1.0, d));
}

double Kappa(std::int64_t order, std::size_t r, std::size_t t) {
  const double base = std::ldexp(static_cast<double>(order), 1 - static_cast<int>(t)) /
                      static_cast<double>(2 + r);
  return std::pow(base, 1.0 / static_cast<double>(r));
}

bool KappaIsIntegral(std::int64_t order, std::size_t r, std::size_t t) {
  const double kappa = Kappa(order, r, t);
  const auto k = static_cast<std::int64_t>(std::llround(kappa));
  if (k < 1) return false;
  __int128 lhs = static_cast<__int128>(2 + r);
  const __int128 rhs = static_cast<__int128>(order) * 2;
  for (std::size_t j = 0; j < t; ++j) {
    lhs *= 2;
    if (lhs > rhs) return false;
  }
  for (std::size_t i = 0; i < r; ++i) {
    lhs *= k;
    if (lhs > rhs) return false;
  }
  return lhs == rhs;
}

std::int64_t MaxUniformM(std::int64_t order, std::size_t r, std::size_t t) {
  std::int64_t m = 1;
  while (BoxSize(t, std::vector<std::int64_t>(r, m + 1), order)) ++m;
  return m;
}

std::int64_t GridBestWeakM(std::int64_t order, std::size_t r, std::size_t t) {
  const std::int64_t hi = MaxUniformM(order, r, t);
  std::int64_t best = 0;
  __int128 best_value = 0;
  for (std::int64_t m = 2; m <= hi; ++m) {
    const auto box = BoxSize(t, std::vector<std::int64_t>(r, m), order);
    const __int128 value = WeakObjective(order, m, *box);
    if (best == 0 || value > best_value) {
      best = m;
      best_value = value;
    }
  }
  return best;
}

SelectMResult SelectM(const GroupFunction& f, double tau) {
  const SupportPairing pairing = PairSupport(f, tau);
  if (pairing.r() == 0) Fail(ErrorCode::kRZero, "no conjugate pairs in support (r = 0)");
  const std::int64_t order = f.group().order();
  const std::size_t r = pairing.r();
  const std::size_t t = pairing.t();
  SelectMResult out;
  out.kappa = Kappa(order, r, t);
  out.kappa_integral = KappaIsIntegral(order, r, t);
  const auto ceil_kappa = static_cast<std::int64_t>(std::ceil(out.kappa));
  if (out.kappa_integral || ceil_kappa < 2) {
    out.grid_fallback = true;
    out.m_star = GridBestWeakM(order, r, t);
    if (out.m_star == 0) {
      Fail(ErrorCode::kMTooLarge, "no m >= 2 satisfies 2^t (m-1)^r < |G|");
    }
    out.m_best = out.m_star;
  } else {
    out.m_star = ceil_kappa;
    out.m_best = out.m_star;
    const auto box_star = BoxSize(t, std::vector<std::int64_t>(r, out.m_star), order);
    const auto box_next =
        BoxSize(t, std::vector<std::int64_t>(r, out.m_star + 1), order);
    if (box_star && box_next &&
        WeakObjective(order, out.m_star + 1, *box_next) >
            WeakObjective(order, out.m_star, *box_star)) {
      out.m_best = out.m_star + 1;
    }
  }
  out.prop_optimal = out.m_star == out.m_best;
  out.report = BoundUniform(f, pairing, out.m_star);
  out.best_report = BoundUniform(f, pairing, out.m_best);
  for (auto* rep : {&out.report.sharp, &out.report.weak, &out.best_report.sharp,
                    &out.best_report.weak}) {
    rep->kappa = out.kappa;
  }
  return out;
}

BestBoundResult BestBoundSearch(const GroupFunction& f, std::int64_t budget,
                                double tau) {
  const SupportPairing pairing = PairSupport(f, tau);
  if (pairing.r() == 0) Fail(ErrorCode::kRZero, "no conjugate pairs in support (r = 0)");
  const std::int64_t order = f.group().order();
  const std::size_t r = pairing.r();
  const std::size_t t = pairing.t();
  const std::int64_t hi = MaxUniformM(order, r, t);
  if (hi < 2) Fail(ErrorCode::kMTooLarge, "no m >= 2 satisfies 2^t (m-1)^r < |G|");

  BestBoundResult out;
  for (std::int64_t m = 2; m <= hi; ++m) {
    const UniformBound u = BoundUniform(f, pairing, m);
    if (!out.uniform_sharp.valid || *u.sharp.bound > *out.uniform_sharp.bound) {
      out.uniform_sharp = u.sharp;
    }
    if (!out.uniform_weak.valid || *u.weak.bound > *out.uniform_weak.bound) {
      out.uniform_weak = u.weak;
    }
  }

  // Lexicographic enumeration of m-vectors with 2^t prod(m_i - 1) < |G|.
  const double g = static_cast<double>(order);
  const double nu1 = f[0].real();
  std::vector<std::int64_t> m(r, 2);
  std::vector<std::int64_t> best_m;
  double best_value = 0.0;
  std::int64_t count = 0;
  const std::int64_t base = *BoxSize(t, {}, order + 1);
  std::vector<std::int64_t> prefix(r + 1, base);  // box of m[0..i)
  auto recurse = [&](auto&& self, std::size_t i, double sum) -> bool {
    if (i == r) {
      if (++count > budget) return false;
      const double value = nu1 - 4.0 * g * sum / (g - static_cast<double>(prefix[r]));
      if (best_m.empty() || value > best_value) {
        best_value = value;
        best_m = m;
      }
      return true;
    }
    for (std::int64_t mi = 2; prefix[i] * (mi - 1) < order; ++mi) {
      m[i] = mi;
      prefix[i + 1] = prefix[i] * (mi - 1);
      const double sn = std::sin(kPi / (2.0 * static_cast<double>(mi)));
      if (!self(self, i + 1, sum + pairing.rep_coefficients[i] * sn * sn)) {
        return false;
      }
    }
    return true;
  };
  out.budget_exceeded = !recurse(recurse, 0, 0.0);
  out.candidates = std::min(count, budget);
  if (!out.budget_exceeded) out.multi = BoundMulti(f, pairing, best_m);
  return out;
}

}  // namespace abelspec
