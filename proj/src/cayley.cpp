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

#include "abelspec/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "abelspec/error.hpp"
#include "abelspec/posdef.hpp"

namespace abelspec {
namespace {

constexpr double kPi = std::numbers::pi;

void CheckLength(const WeightedGraph& g, const std::vector<double>& u) {
  if (u.size() != g.size()) {
    Fail(ErrorCode::kLengthMismatch, "vertex function has length " +
                                         std::to_string(u.size()) + ", graph has " +
                                         std::to_string(g.size()) + " vertices");
  }
}

double MinEigenvalue(const SymmetricMatrix& h) {
  if (h.size() == 0) return 0.0;
  return JacobiEigen(h).values.front();
}

double TolScale(const WeightedGraph& g) {
  const double d = g.MaxDegree();
  return std::max(1.0, d * d);
}

CdResult RandomizedCheck(const WeightedGraph& g, double tol, std::size_t samples,
                         std::uint64_t seed) {
  CdResult out;
  out.mode = CdMode::kRandomized;
  out.samples = samples;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  bool first = true;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> u(g.size());
    double norm2 = 0.0;
    for (auto& x : u) {
      x = normal(rng);
      norm2 += x * x;
    }
    const auto gv = GammaForms(g, u, u);
    for (std::size_t x = 0; x < g.size(); ++x) {
      const double v = gv.gamma2[x] / norm2;
      if (first || v < out.min_eigenvalue) {
        out.min_eigenvalue = v;
        out.worst_vertex = x;
        first = false;
      }
    }
  }
  out.verdict = out.min_eigenvalue >= -tol * TolScale(g);
  return out;
}

}  // namespace

WeightedGraph::WeightedGraph(SymmetricMatrix weights)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {
  const std::size_t n = weights_.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const double w = weights_(x, y);
      if (w < 0.0) {
        Fail(ErrorCode::kNegativeWeight, "edge (" + std::to_string(x) + ", " +
                                             std::to_string(y) + ") has negative weight");
      }
      if (w != 0.0) adjacency_[x].push_back(y);
    }
  }
}

double WeightedGraph::Degree(std::size_t x) const {
  double d = 0.0;
  for (std::size_t y : adjacency_[x]) d += weights_(x, y);
  return d;
}

double WeightedGraph::MaxDegree() const {
  double d = 0.0;
  for (std::size_t x = 0; x < size(); ++x) d = std::max(d, Degree(x));
  return d;
}

SymmetricMatrix WeightedGraph::LaplacianMatrix() const {
  SymmetricMatrix l(size());
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y : adjacency_[x]) {
      l(x, y) = weights_(x, y);
      l(x, x) -= weights_(x, y);
    }
  }
  return l;
}

CayleyGraph::CayleyGraph(FiniteAbelianGroup group, std::vector<double> w)
    : group_(std::move(group)), w_(std::move(w)) {
  for (std::size_t x = 1; x < w_.size(); ++x) degree_ += w_[x];
}

GroupFunction CayleyGraph::Phi() const {
  const Spectrum s = FourierTransform(GroupFunction::FromReal(group_, w_));
  std::vector<Complex> v(s.coefficients());
  const double n = static_cast<double>(group_.order());
  for (auto& c : v) c *= n;
  return GroupFunction(group_, std::move(v));
}

SymmetricMatrix CayleyGraph::AdjacencyMatrix() const {
  const auto n = static_cast<std::size_t>(group_.order());
  SymmetricMatrix a(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      a(x, y) = w_[static_cast<std::size_t>(group_.Subtract(
          static_cast<ElementIndex>(y), static_cast<ElementIndex>(x)))];
    }
  }
  return a;
}

WeightedGraph CayleyGraph::ToWeightedGraph() const {
  SymmetricMatrix a = AdjacencyMatrix();
  for (std::size_t x = 0; x < a.size(); ++x) a(x, x) = 0.0;
  return WeightedGraph(std::move(a));
}

bool CayleyGraph::IsConnected() const {
  std::vector<ElementIndex> gens;
  for (std::size_t x = 1; x < w_.size(); ++x) {
    if (w_[x] != 0.0) gens.push_back(static_cast<ElementIndex>(x));
  }
  return SpanIndices(group_, gens).order() == group_.order();
}

CayleyGraph BuildCayley(const GroupFunction& w) {
  const auto& g = w.group();
  const std::vector<double> values = w.RealValues();
  const double scale = std::max(1.0, w.MaxAbs());
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const double a = values[static_cast<std::size_t>(x)];
    const double b = values[static_cast<std::size_t>(g.Negate(x))];
    if (std::abs(a - b) > 1e-12 * scale) {
      Fail(ErrorCode::kAsymmetricWeight,
           "w(x) != w(-x) at element " + std::to_string(x));
    }
    if (x != 0 && a < -1e-12 * scale) {
      Fail(ErrorCode::kNegativeWeight,
           "w is negative at element " + std::to_string(x));
    }
  }
  // Symmetrize exactly so the adjacency matrix is bitwise symmetric.
  std::vector<double> sym(values.size());
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const auto i = static_cast<std::size_t>(x);
    const auto j = static_cast<std::size_t>(g.Negate(x));
    sym[i] = i <= j ? values[i] : values[j];
    if (i != 0 && sym[i] < 0.0) sym[i] = 0.0;  // roundoff below -1e-12 * scale was rejected
  }
  return CayleyGraph(g, std::move(sym));
}

CayleyGraph PhiInverse(const GroupFunction& f) {
  const Spectrum s = SpectrumOf(f);
  return BuildCayley(GroupFunction(f.group(), s.coefficients()));
}

std::vector<double> LaplacianApply(const WeightedGraph& g,
                                   const std::vector<double>& u) {
  CheckLength(g, u);
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double s = 0.0;
    for (std::size_t y : g.neighbors(x)) s += g.weights()(x, y) * (u[y] - u[x]);
    out[x] = s;
  }
  return out;
}

namespace {

std::vector<double> Gamma(const WeightedGraph& g, const std::vector<double>& u,
                          const std::vector<double>& v,
                          const std::vector<double>& lu,
                          const std::vector<double>& lv) {
  std::vector<double> uv(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) uv[i] = u[i] * v[i];
  const std::vector<double> luv = LaplacianApply(g, uv);
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = 0.5 * (luv[i] - u[i] * lv[i] - lu[i] * v[i]);
  }
  return out;
}

}  // namespace

GammaValues GammaForms(const WeightedGraph& g, const std::vector<double>& u,
                       const std::vector<double>& v) {
  CheckLength(g, u);
  CheckLength(g, v);
  const auto lu = LaplacianApply(g, u);
  const auto lv = LaplacianApply(g, v);
  GammaValues out;
  out.gamma = Gamma(g, u, v, lu, lv);
  const auto l_gamma = LaplacianApply(g, out.gamma);
  const auto llv = LaplacianApply(g, lv);
  const auto llu = LaplacianApply(g, lu);
  const auto g_u_lv = Gamma(g, u, lv, lu, llv);
  const auto g_lu_v = Gamma(g, lu, v, llu, lv);
  out.gamma2.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.gamma2[i] = 0.5 * (l_gamma[i] - g_u_lv[i] - g_lu_v[i]);
  }
  return out;
}

SymmetricMatrix Gamma2LocalForm(const WeightedGraph& g, std::size_t x,
                                std::vector<std::size_t>* ball) {
  std::vector<std::size_t> verts{x};
  for (std::size_t y : g.neighbors(x)) verts.push_back(y);
  for (std::size_t y : g.neighbors(x)) {
    for (std::size_t z : g.neighbors(y)) verts.push_back(z);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  const std::size_t n = verts.size();
  const auto& w = g.weights();
  SymmetricMatrix h(n);

  // Adds c * G_z where G_z = sum_y omega(z,y) (e_y - e_z)(e_y - e_z)^T.
  auto add_carre = [&](std::size_t z, double c) {
    const std::size_t lz = local(z);
    for (std::size_t y : g.neighbors(z)) {
      const double cw = c * w(z, y);
      const std::size_t ly = local(y);
      h(ly, ly) += cw;
      h(lz, lz) += cw;
      h(ly, lz) -= cw;
      h(lz, ly) -= cw;
    }
  };
  // L e_v as a local vector.
  auto lap_column = [&](std::size_t v) {
    std::vector<double> col(n, 0.0);
    const std::size_t lv = local(v);
    for (std::size_t y : g.neighbors(v)) {
      col[local(y)] += w(y, v);
      col[lv] -= w(y, v);
    }
    return col;
  };

  const std::vector<double> lx = lap_column(x);
  const std::size_t ix = local(x);
  for (std::size_t y : g.neighbors(x)) {
    const double wxy = w(x, y);
    add_carre(y, 0.25 * wxy);
    add_carre(x, -0.25 * wxy);
    // b = L (e_y - e_x); subtract (wxy / 4)(a b^T + b a^T), a = e_y - e_x.
    std::vector<double> b = lap_column(y);
    for (std::size_t i = 0; i < n; ++i) b[i] -= lx[i];
    const std::size_t iy = local(y);
    for (std::size_t i = 0; i < n; ++i) {
      const double c = 0.25 * wxy * b[i];
      h(iy, i) -= c;
      h(i, iy) -= c;
      h(ix, i) += c;
      h(i, ix) += c;
    }
  }
  if (ball != nullptr) *ball = std::move(verts);
  return h;
}

CdResult CdZeroCheck(const WeightedGraph& g, double tol, CdMode mode,
                     std::size_t samples, std::uint64_t seed) {
  if (mode == CdMode::kAuto) {
    mode = g.size() <= kCdExactCap ? CdMode::kExact : CdMode::kRandomized;
  }
  if (mode == CdMode::kRandomized) return RandomizedCheck(g, tol, samples, seed);
  CdResult out;
  out.mode = CdMode::kExact;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const double lam = MinEigenvalue(Gamma2LocalForm(g, x, nullptr));
    if (x == 0 || lam < out.min_eigenvalue) {
      out.min_eigenvalue = lam;
      out.worst_vertex = x;
    }
  }
  out.verdict = out.min_eigenvalue >= -tol * TolScale(g);
  return out;
}

CdResult CdZeroCheck(const CayleyGraph& g, double tol, CdMode mode,
                     std::size_t samples, std::uint64_t seed) {
  const WeightedGraph wg = g.ToWeightedGraph();
  if (mode == CdMode::kAuto) {
    mode = wg.size() <= kCdExactCap ? CdMode::kExact : CdMode::kRandomized;
  }
  if (mode == CdMode::kRandomized) return RandomizedCheck(wg, tol, samples, seed);
  CdResult out;
  out.mode = CdMode::kExact;
  out.worst_vertex = 0;
  out.min_eigenvalue = MinEigenvalue(Gamma2LocalForm(wg, 0, nullptr));
  out.verdict = out.min_eigenvalue >= -tol * TolScale(wg);
  return out;
}

SpectrumCheck CayleySpectrumCheck(const CayleyGraph& g) {
  if (static_cast<std::size_t>(g.group().order()) > kSpectrumCheckCap) {
    Fail(ErrorCode::kTooLarge, "spectrum check limited to |G| <= " +
                                   std::to_string(kSpectrumCheckCap));
  }
  SpectrumCheck out;
  out.jacobi = JacobiEigen(g.AdjacencyMatrix()).values;
  std::reverse(out.jacobi.begin(), out.jacobi.end());
  const GroupFunction phi = g.Phi();
  for (const auto& c : phi.values()) out.fourier.push_back(c.real());
  std::sort(out.fourier.begin(), out.fourier.end(), std::greater<>());
  for (std::size_t i = 0; i < out.jacobi.size(); ++i) {
    out.max_deviation =
        std::max(out.max_deviation, std::abs(out.jacobi[i] - out.fourier[i]));
  }
  return out;
}

double CurvatureConstant() {
  const double e = std::numbers::e;
  const double c = 20.0 * std::numbers::sqrt2 * e / (e - 1.0);
  return c * c;
}

EigenComparison CheckEigenComparison(const WeightedGraph& g) {
  SymmetricMatrix neg = g.LaplacianMatrix();
  for (std::size_t i = 0; i < neg.size(); ++i) {
    for (std::size_t j = 0; j < neg.size(); ++j) neg(i, j) = -neg(i, j);
  }
  const std::vector<double> lam = JacobiEigen(neg).values;
  EigenComparison out;
  if (lam.size() < 2) return out;
  out.lambda2 = lam[1];
  if (out.lambda2 <= 1e-10 * std::max(1.0, g.MaxDegree())) {
    Fail(ErrorCode::kNotGenerating, "graph is disconnected (lambda_2 = 0)");
  }
  const double c = CurvatureConstant();
  const double d = g.MaxDegree();
  for (std::size_t k = 2; k <= lam.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double ratio = lam[k - 1] / (c * d * kk * kk * out.lambda2);
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_k = k;
    }
  }
  out.holds = out.worst_ratio <= 1.0 + 1e-12;
  return out;
}

namespace {

// C k^2 pi^2 |G| nu1^2 / (2 m^2 (|G| - box)).
double NuKGap(const GroupFunction& f, std::size_t k, std::int64_t m, double tau,
              std::size_t* r, std::size_t* t, std::int64_t* mu) {
  const SupportPairing p = PairSupport(f, tau);
  if (p.r() == 0) Fail(ErrorCode::kRZero, "no conjugate pairs in support (r = 0)");
  if (m < 2) Fail(ErrorCode::kBadM, "m must be >= 2");
  const std::int64_t order = f.group().order();
  const auto box = BoxSize(p.t(), std::vector<std::int64_t>(p.r(), m), order);
  if (!box) {
    Fail(ErrorCode::kMTooLarge, "2^t (m-1)^r >= |G| for m = " + std::to_string(m));
  }
  if (r != nullptr) *r = p.r();
  if (t != nullptr) *t = p.t();
  if (mu != nullptr) *mu = *box;
  const double g = static_cast<double>(order);
  const double kk = static_cast<double>(k);
  const double md = static_cast<double>(m);
  const double nu1 = f[0].real();
  return CurvatureConstant() * kk * kk * kPi * kPi * g * nu1 * nu1 /
         (2.0 * md * md * (g - static_cast<double>(*box)));
}

}  // namespace

NuKBound NuKLower(const GroupFunction& f, std::size_t k, std::int64_t m,
                  double tau) {
  if (k < 2) Fail(ErrorCode::kKTooSmall, "k must be >= 2");
  if (k > static_cast<std::size_t>(f.group().order())) {
    Fail(ErrorCode::kBadK, "k exceeds |G|");
  }
  NuKBound out;
  out.k = k;
  out.m = m;
  out.curvature_constant = CurvatureConstant();
  const double gap = NuKGap(f, k, m, tau, &out.r, &out.t, &out.mu);
  out.value = f[0].real() - gap;
  out.oracle = ValueProfileOf(f).nu(k);
  out.note = "r counts conjugate pairs of supp(f^): r = (s - t) / 2";
  return out;
}

NuKSandwich NuKSandwichOf(const GroupFunction& f, std::size_t k, std::int64_t m1,
                          std::int64_t m2, double tau) {
  const auto n = static_cast<std::size_t>(f.group().order());
  if (k < 3) Fail(ErrorCode::kKTooSmall, "k must be >= 3");
  if (k > n) Fail(ErrorCode::kBadK, "k exceeds |G|");
  const PosNegSplit split = SplitPosNeg(f, tau);
  NuKSandwich out;
  out.k = k;
  out.f_identity = f[0].real();
  const bool has_pos = !SupportOfFunction(split.positive, 0.0).members.empty();
  const bool has_neg = !SupportOfFunction(split.negative, 0.0).members.empty();
  if (has_pos) {
    out.lower = out.f_identity - NuKGap(split.positive, k, m1, tau, nullptr,
                                        nullptr, nullptr);
  }
  if (has_neg) {
    const std::size_t j = n - k + 1;
    const double term =
        j >= 2 ? NuKGap(split.negative, j, m2, tau, nullptr, nullptr, nullptr)
               : 0.0;
    out.upper = out.f_identity + term;
  }
  out.oracle = ValueProfileOf(f).nu(k);
  return out;
}

}  // namespace abelspec
