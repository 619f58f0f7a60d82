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

#ifndef ABELSPEC_LINALG_HPP_
#define ABELSPEC_LINALG_HPP_

#include <cstddef>
#include <vector>

namespace abelspec {

// Dense real symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  // Throws NotSymmetric when |a_ij - a_ji| > 1e-12.
  static SymmetricMatrix FromDense(std::size_t n, std::vector<double> a);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  // Writes (i, j) and (j, i).
  void Set(std::size_t i, std::size_t j, double v);
  void AddSym(std::size_t i, std::size_t j, double v);
  const std::vector<double>& data() const { return a_; }
  double FrobeniusNorm() const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

struct EigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k at [i * n + k], empty unless asked
  int sweeps = 0;
};

inline constexpr std::size_t kJacobiMaxSize = 1024;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F; throws NoConvergence after kJacobiMaxSweeps.
EigenResult JacobiEigen(const SymmetricMatrix& m, bool want_vectors = false);

// ||M - Q diag(values) Q^T||_F.
double ReconstructionError(const SymmetricMatrix& m, const EigenResult& e);

}  // namespace abelspec

#endif  // ABELSPEC_LINALG_HPP_
