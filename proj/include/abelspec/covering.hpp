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

#ifndef ABELSPEC_COVERING_HPP_
#define ABELSPEC_COVERING_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelspec/fourier.hpp"

namespace abelspec {

// supp(f^) = {chi_1, -chi_1, ..., chi_r, -chi_r, chi_{r+1}, ..., chi_{r+t}}.
// reps[i] is the smaller index of {chi, -chi}; involutions satisfy 2 chi = 0.
struct SupportPairing {
  FiniteAbelianGroup group;
  std::vector<ElementIndex> reps;
  std::vector<ElementIndex> involutions;
  std::vector<double> rep_coefficients;   // f^(chi_i)
  std::vector<double> conj_coefficients;  // f^(-chi_i)
  std::vector<double> involution_coefficients;
  double tolerance = 0.0;

  std::size_t r() const { return reps.size(); }
  std::size_t t() const { return involutions.size(); }
  std::size_t s() const { return 2 * reps.size() + involutions.size(); }
  std::size_t arity() const { return r() + t(); }
  // chi_i for 0 <= i < r + t.
  ElementIndex Generator(std::size_t i) const;
  double PairCoefficientSum() const;
  double InvolutionCoefficientSum() const;
};

// Requires f real and positive definite with nonempty support.
SupportPairing PairSupport(const GroupFunction& f,
                           double tau = kDefaultSupportTolerance);

// Builds a pairing from explicit characters and coefficients; used for
// synthetic instances. Throws when the characters do not form a valid pairing.
SupportPairing MakePairing(const FiniteAbelianGroup& group,
                           std::vector<ElementIndex> reps,
                           std::vector<double> rep_coefficients,
                           std::vector<double> conj_coefficients,
                           std::vector<ElementIndex> involutions,
                           std::vector<double> involution_coefficients);

// Finitely supported real function on Z^r x (Z/2)^t. The last t coordinates
// are stored reduced mod 2.
class LatticeFunction {
 public:
  using Point = std::vector<std::int64_t>;

  LatticeFunction(std::size_t r, std::size_t t) : r_(r), t_(t) {}

  std::size_t r() const { return r_; }
  std::size_t t() const { return t_; }
  std::size_t arity() const { return r_ + t_; }

  void Add(Point z, double value);
  double At(Point z) const;
  const std::map<Point, double>& entries() const { return entries_; }
  std::size_t SupportSize() const;  // entries with nonzero value

 private:
  void Normalize(Point& z) const;

  std::size_t r_;
  std::size_t t_;
  std::map<Point, double> entries_;
};

// eta(z) = sum_i z_i chi_i.
ElementIndex Eta(const SupportPairing& pairing, const LatticeFunction::Point& z);
// eta_*(h)(chi) = sum over eta(z) = chi of h(z).
Spectrum EtaPushforward(const SupportPairing& pairing, const LatticeFunction& h);

// M_f^G(v) = |G| f^ * v.
Spectrum ApplyMDual(const GroupFunction& f, const Spectrum& v);
// [M(h)](z) = sum_{w in S} f^(-eta(w)) h(z + w),
// S = {+-e_1, ..., +-e_r, e_{r+1}, ..., e_{r+t}}.
LatticeFunction ApplyMLattice(const SupportPairing& pairing,
                              const LatticeFunction& h);

// h0(x) = prod_{i<=r} sin(pi x_i / m_i) on 1 <= x_i <= m_i - 1; free in the
// involution coordinates.
LatticeFunction MakeH0(const SupportPairing& pairing,
                       const std::vector<std::int64_t>& m);

// 2 sum_i cos(pi/m_i) f^(chi_i) + sum_j f^(chi_{r+j}); M(h0) >= floor * h0.
double RayleighFloor(const SupportPairing& pairing,
                     const std::vector<std::int64_t>& m);

// 2^t prod (m_i - 1), or nullopt once it reaches `cap`.
std::optional<std::int64_t> BoxSize(std::size_t t,
                                    const std::vector<std::int64_t>& m,
                                    std::int64_t cap);

enum class BoundForm { kSharp, kWeak, kMulti };
std::string BoundFormName(BoundForm form);

struct BoundReport {
  bool valid = false;
  std::optional<double> bound;  // absent when !valid
  BoundForm form = BoundForm::kMulti;
  std::vector<std::int64_t> m;
  std::size_t r = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  std::optional<std::int64_t> mu;  // 2^t prod (m_i - 1)
  std::optional<double> kappa;
  double rayleigh_floor = 0.0;
  double nu1 = 0.0;
  std::int64_t nu1_multiplicity = 1;  // > 1 means nu2 == nu1 with multiplicity
  std::optional<double> oracle_nu2;   // with multiplicity
  std::optional<double> oracle_nu2_distinct;
};

// Fills oracle_nu2 and oracle_nu2_distinct from the exhaustive value profile.
void AttachOracle(BoundReport& report, const GroupFunction& f);

// nu1 - 4|G| sum_i f^(chi_i) sin^2(pi/(2 m_i)) / (|G| - 2^t prod(m_i - 1)).
// Reports valid = false when the box is not smaller than |G|.
BoundReport BoundMulti(const GroupFunction& f, const std::vector<std::int64_t>& m,
                       double tau = kDefaultSupportTolerance);
BoundReport BoundMulti(const GroupFunction& f, const SupportPairing& pairing,
                       const std::vector<std::int64_t>& m);

struct UniformBound {
  BoundReport sharp;
  BoundReport weak;
};

// Throws MTooLarge unless 2^t (m-1)^r < |G|.
UniformBound BoundUniform(const GroupFunction& f, std::int64_t m,
                          double tau = kDefaultSupportTolerance);
UniformBound BoundUniform(const GroupFunction& f, const SupportPairing& pairing,
                          std::int64_t m);

// theta(x) = x^2 (1 - c (x-1)^d).
double Theta(double x, double c, double d);
// kappa = (2^{1-t} |G| / (2 + r))^{1/r}.
double Kappa(std::int64_t order, std::size_t r, std::size_t t);
// Exact test of kappa^r (2 + r) 2^t == 2|G| for an integer kappa.
bool KappaIsIntegral(std::int64_t order, std::size_t r, std::size_t t);
// Largest m with 2^t (m-1)^r < |G|, or 1 if none.
std::int64_t MaxUniformM(std::int64_t order, std::size_t r, std::size_t t);

struct SelectMResult {
  double kappa = 0.0;
  bool kappa_integral = false;
  std::int64_t m_star = 0;  // ceil(kappa), or the grid optimum as fallback
  bool grid_fallback = false;
  std::int64_t m_best = 0;  // weak-form optimum over {ceil, ceil + 1}
  bool prop_optimal = true;  // m_star == m_best
  UniformBound report;       // at m_star
  UniformBound best_report;  // at m_best
};

SelectMResult SelectM(const GroupFunction& f,
                      double tau = kDefaultSupportTolerance);

// Grid optimum of the weak form over every valid uniform m.
std::int64_t GridBestWeakM(std::int64_t order, std::size_t r, std::size_t t);

struct BestBoundResult {
  BoundReport uniform_sharp;
  BoundReport uniform_weak;
  std::optional<BoundReport> multi;  // absent when the budget was exceeded
  bool budget_exceeded = false;
  std::int64_t candidates = 0;
};

inline constexpr std::int64_t kDefaultSearchBudget = 1'000'000;

// Exhaustive search; ties keep the lexicographically smallest m.
BestBoundResult BestBoundSearch(const GroupFunction& f,
                                std::int64_t budget = kDefaultSearchBudget,
                                double tau = kDefaultSupportTolerance);

}  // namespace abelspec

#endif  // ABELSPEC_COVERING_HPP_
