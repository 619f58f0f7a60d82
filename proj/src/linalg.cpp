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

#include "abelspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "abelspec/error.hpp"

namespace abelspec {

SymmetricMatrix SymmetricMatrix::FromDense(std::size_t n, std::vector<double> a) {
  if (a.size() != n * n) Fail(ErrorCode::kLengthMismatch, "matrix data is not n*n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-12) {
        Fail(ErrorCode::kNotSymmetric, "entry (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ") is asymmetric");
      }
    }
  }
  SymmetricMatrix m(n);
  m.a_ = std::move(a);
  return m;
}

void SymmetricMatrix::Set(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

void SymmetricMatrix::AddSym(std::size_t i, std::size_t j, double v) {
  a_[i * n_ + j] += v;
  if (i != j) a_[j * n_ + i] += v;
}

double SymmetricMatrix::FrobeniusNorm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

EigenResult JacobiEigen(const SymmetricMatrix& m, bool want_vectors) {
  const std::size_t n = m.size();
  if (n > kJacobiMaxSize) {
    Fail(ErrorCode::kTooLarge, "Jacobi limited to n <= " +
                                   std::to_string(kJacobiMaxSize));
  }
  std::vector<double> a = m.data();
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  const double norm = m.FrobeniusNorm();
  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
  };

  EigenResult out;
  while (off() > 1e-12 * norm) {
    if (out.sweeps == kJacobiMaxSweeps) {
      Fail(ErrorCode::kNoConvergence, "Jacobi did not converge in " +
                                          std::to_string(kJacobiMaxSweeps) +
                                          " sweeps");
    }
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i] < a[j * n + j];
  });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[order[k] * n + order[k]];
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) out.vectors[i * n + k] = v[i * n + order[k]];
    }
  }
  return out;
}

double ReconstructionError(const SymmetricMatrix& m, const EigenResult& e) {
  const std::size_t n = m.size();
  if (e.vectors.size() != n * n) {
    Fail(ErrorCode::kLengthMismatch, "eigenvectors were not computed");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double r = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        r += e.vectors[i * n + k] * e.values[k] * e.vectors[j * n + k];
      }
      const double d = m(i, j) - r;
      s += d * d;
    }
  }
  return std::sqrt(s);
}

}  // namespace abelspec
