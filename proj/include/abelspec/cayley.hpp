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

#ifndef ABELSPEC_CAYLEY_HPP_
#define ABELSPEC_CAYLEY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelspec/covering.hpp"
#include "abelspec/fourier.hpp"
#include "abelspec/linalg.hpp"

namespace abelspec {

// Undirected graph with symmetric nonnegative weights omega(x, y). Self
// weights are stored but never contribute to the Laplacian.
class WeightedGraph {
 public:
  explicit WeightedGraph(SymmetricMatrix weights);

  std::size_t size() const { return weights_.size(); }
  const SymmetricMatrix& weights() const { return weights_; }
  // Off-diagonal neighbours with nonzero weight, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t x) const {
    return adjacency_[x];
  }
  double Degree(std::size_t x) const;
  double MaxDegree() const;
  // Dense Laplacian L with (L u)(x) = sum_y omega(x,y) (u(y) - u(x)).
  SymmetricMatrix LaplacianMatrix() const;

 private:
  SymmetricMatrix weights_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Cay(G, w): omega(x, y) = w(y - x). Edges come from supp(w) minus identity.
class CayleyGraph {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<double>& weights() const { return w_; }
  double degree() const { return degree_; }  // d_G = sum_{x != 0} w(x)
  // Phi(Cay(G, w)) = |G| w^ as a function on the dual carrier.
  GroupFunction Phi() const;
  // Includes the diagonal w(0).
  SymmetricMatrix AdjacencyMatrix() const;
  WeightedGraph ToWeightedGraph() const;
  bool IsConnected() const;

 private:
  friend CayleyGraph BuildCayley(const GroupFunction& w);
  CayleyGraph(FiniteAbelianGroup group, std::vector<double> w);

  FiniteAbelianGroup group_;
  std::vector<double> w_;
  double degree_ = 0.0;
};

// Requires w real, w(x) = w(-x), and w >= 0 away from the identity.
CayleyGraph BuildCayley(const GroupFunction& w);
// Phi^{-1}(f) = Cay(G, f^) for f on the dual.
CayleyGraph PhiInverse(const GroupFunction& f);

std::vector<double> LaplacianApply(const WeightedGraph& g,
                                   const std::vector<double>& u);

struct GammaValues {
  std::vector<double> gamma;
  std::vector<double> gamma2;
};

// Gamma(u,v) = (Delta(uv) - u Delta v - v Delta u) / 2,
// Gamma2(u,v) = (Delta Gamma(u,v) - Gamma(u, Delta v) - Gamma(Delta u, v)) / 2.
GammaValues GammaForms(const WeightedGraph& g, const std::vector<double>& u,
                       const std::vector<double>& v);

// Local matrix H_x with u^T H_x u = Gamma2(u,u)(x), restricted to the ball of
// radius 2 around x. `ball` receives the global vertex of each local index.
SymmetricMatrix Gamma2LocalForm(const WeightedGraph& g, std::size_t x,
                                std::vector<std::size_t>* ball);

enum class CdMode { kAuto, kExact, kRandomized };
inline constexpr std::size_t kCdExactCap = 256;

struct CdResult {
  bool verdict = false;  // randomized: no counterexample found
  CdMode mode = CdMode::kExact;
  std::size_t worst_vertex = 0;
  double min_eigenvalue = 0.0;  // exact: min over H_x; randomized: min Gamma2
  std::size_t samples = 0;
};

// Gamma2(u) >= 0 pointwise for every u, up to -tol * max(1, d_max^2).
CdResult CdZeroCheck(const WeightedGraph& g, double tol = 1e-8,
                     CdMode mode = CdMode::kAuto, std::size_t samples = 64,
                     std::uint64_t seed = 0xcd0);
// Cayley graphs are vertex-transitive, so exact mode inspects the identity.
CdResult CdZeroCheck(const CayleyGraph& g, double tol = 1e-8,
                     CdMode mode = CdMode::kAuto, std::size_t samples = 64,
                     std::uint64_t seed = 0xcd0);

inline constexpr std::size_t kSpectrumCheckCap = 512;

struct SpectrumCheck {
  std::vector<double> jacobi;   // descending
  std::vector<double> fourier;  // descending values of Phi
  double max_deviation = 0.0;
};

SpectrumCheck CayleySpectrumCheck(const CayleyGraph& g);

// C = (20 sqrt(2) e / (e - 1))^2.
double CurvatureConstant();

struct EigenComparison {
  bool holds = true;
  std::size_t worst_k = 0;
  double worst_ratio = 0.0;  // max_k lambda_k / (C d_G k^2 lambda_2)
  double lambda2 = 0.0;
};

// lambda_k(-Delta) <= C d_G k^2 lambda_2(-Delta) for every k. Requires a
// connected graph (lambda_2 > 0).
EigenComparison CheckEigenComparison(const WeightedGraph& g);

struct NuKBound {
  double value = 0.0;
  std::size_t k = 0;
  std::int64_t m = 0;
  std::size_t r = 0;  // conjugate pairs in supp(f^)
  std::size_t t = 0;
  std::int64_t mu = 0;
  double curvature_constant = 0.0;
  std::optional<double> oracle;  // nu_k(f)
  std::string note;
};

// nu_k(f) >= nu1 - C k^2 pi^2 |G| nu1^2 / (2 m^2 (|G| - 2^t (m-1)^r)).
NuKBound NuKLower(const GroupFunction& f, std::size_t k, std::int64_t m,
                  double tau = kDefaultSupportTolerance);

struct NuKSandwich {
  std::size_t k = 0;
  double f_identity = 0.0;
  std::optional<double> lower;  // bound on nu_k(f), absent when f1 = 0
  std::optional<double> upper;  // absent when f2 = 0
  std::optional<double> oracle;
};

NuKSandwich NuKSandwichOf(const GroupFunction& f, std::size_t k, std::int64_t m1,
                          std::int64_t m2, double tau = kDefaultSupportTolerance);

}  // namespace abelspec

#endif  // ABELSPEC_CAYLEY_HPP_
