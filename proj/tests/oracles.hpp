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

// Brute-force reference implementations. They share no code with the library:
// everything works on raw moduli lists and value arrays, with the library's
// index convention (last coordinate fastest).

#ifndef ABELSPEC_TESTS_ORACLES_HPP_
#define ABELSPEC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Moduli = std::vector<std::int64_t>;

inline std::int64_t Order(const Moduli& m) {
  return std::accumulate(m.begin(), m.end(), std::int64_t{1}, std::multiplies<>());
}

inline std::vector<std::int64_t> Decode(const Moduli& m, std::int64_t i) {
  std::vector<std::int64_t> x(m.size());
  for (std::size_t j = m.size(); j-- > 0;) {
    x[j] = i % m[j];
    i /= m[j];
  }
  return x;
}

inline std::int64_t Encode(const Moduli& m, const std::vector<std::int64_t>& x) {
  std::int64_t i = 0;
  for (std::size_t j = 0; j < m.size(); ++j) i = i * m[j] + ((x[j] % m[j]) + m[j]) % m[j];
  return i;
}

inline std::int64_t AddIdx(const Moduli& m, std::int64_t a, std::int64_t b) {
  auto x = Decode(m, a), y = Decode(m, b);
  for (std::size_t j = 0; j < m.size(); ++j) x[j] += y[j];
  return Encode(m, x);
}

inline std::int64_t NegIdx(const Moduli& m, std::int64_t a) {
  auto x = Decode(m, a);
  for (auto& v : x) v = -v;
  return Encode(m, x);
}

// chi_a(x) = exp(2 pi i sum_j a_j x_j / m_j)
inline C Char(const Moduli& m, std::int64_t a, std::int64_t x) {
  const auto av = Decode(m, a), xv = Decode(m, x);
  double t = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    t += static_cast<double>((av[j] * xv[j]) % m[j]) / static_cast<double>(m[j]);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

// f^(a) = |G|^-1 sum_x f(x) conj(chi_a(x))
inline std::vector<C> Dft(const Moduli& m, const std::vector<C>& f) {
  const auto n = Order(m);
  std::vector<C> out(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    C s = 0.0;
    for (std::int64_t x = 0; x < n; ++x) s += f[static_cast<std::size_t>(x)] * std::conj(Char(m, a, x));
    out[static_cast<std::size_t>(a)] = s / static_cast<double>(n);
  }
  return out;
}

// f(x) = sum_a c(a) chi_a(x)
inline std::vector<C> Synthesize(const Moduli& m, const std::vector<C>& c) {
  const auto n = Order(m);
  std::vector<C> out(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    C s = 0.0;
    for (std::int64_t a = 0; a < n; ++a) s += c[static_cast<std::size_t>(a)] * Char(m, a, x);
    out[static_cast<std::size_t>(x)] = s;
  }
  return out;
}

// (f * g)(x) = |G|^-1 sum_y f(y) g(x - y)
inline std::vector<C> Convolve(const Moduli& m, const std::vector<C>& f,
                               const std::vector<C>& g) {
  const auto n = Order(m);
  std::vector<C> out(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    C s = 0.0;
    for (std::int64_t y = 0; y < n; ++y) {
      s += f[static_cast<std::size_t>(y)] *
           g[static_cast<std::size_t>(AddIdx(m, x, NegIdx(m, y)))];
    }
    out[static_cast<std::size_t>(x)] = s / static_cast<double>(n);
  }
  return out;
}

inline std::vector<double> SortedDesc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Second largest value counted with multiplicity.
inline double Nu2(const std::vector<double>& v) { return SortedDesc(v).at(1); }

// Closure of the generators under addition.
inline std::set<std::int64_t> Span(const Moduli& m, const std::vector<std::int64_t>& gens) {
  std::set<std::int64_t> h{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto x : frontier) {
      for (auto g : gens) {
        const auto y = AddIdx(m, x, g);
        if (h.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return h;
}

inline std::set<std::int64_t> Sumset(const Moduli& m, const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b) {
  std::set<std::int64_t> out;
  for (auto x : a) {
    for (auto y : b) out.insert(AddIdx(m, x, y));
  }
  return out;
}

// Law of the walk after l steps from 0, by repeated one-step updates.
inline std::vector<double> StepLaw(const Moduli& m, const std::vector<double>& p,
                                   std::int64_t l) {
  const auto n = Order(m);
  std::vector<double> cur(static_cast<std::size_t>(n), 0.0);
  cur[0] = 1.0;
  for (std::int64_t s = 0; s < l; ++s) {
    std::vector<double> nxt(cur.size(), 0.0);
    for (std::int64_t x = 0; x < n; ++x) {
      if (cur[static_cast<std::size_t>(x)] == 0.0) continue;
      for (std::int64_t y = 0; y < n; ++y) {
        nxt[static_cast<std::size_t>(AddIdx(m, x, y))] +=
            cur[static_cast<std::size_t>(x)] * p[static_cast<std::size_t>(y)];
      }
    }
    cur = std::move(nxt);
  }
  return cur;
}

inline double Tv(const std::vector<double>& law) {
  const double u = 1.0 / static_cast<double>(law.size());
  double s = 0.0;
  for (double v : law) s += std::abs(v - u);
  return 0.5 * s;
}

// Smallest l with TV(P^l, uniform) <= eps, stepping one at a time.
inline std::int64_t MixingTime(const Moduli& m, const std::vector<double>& p, double eps,
                               std::int64_t cap) {
  const auto n = Order(m);
  std::vector<double> cur(static_cast<std::size_t>(n), 0.0);
  cur[0] = 1.0;
  for (std::int64_t l = 0; l <= cap; ++l) {
    if (Tv(cur) <= eps) return l;
    std::vector<double> nxt(cur.size(), 0.0);
    for (std::int64_t x = 0; x < n; ++x) {
      if (cur[static_cast<std::size_t>(x)] == 0.0) continue;
      for (std::int64_t y = 0; y < n; ++y) {
        nxt[static_cast<std::size_t>(AddIdx(m, x, y))] +=
            cur[static_cast<std::size_t>(x)] * p[static_cast<std::size_t>(y)];
      }
    }
    cur = std::move(nxt);
  }
  return -1;
}

// Graph calculus from the definitions; w is a dense n x n weight matrix.
inline std::vector<double> Lap(const std::vector<double>& w, const std::vector<double>& u) {
  const std::size_t n = u.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x) out[x] += w[x * n + y] * (u[y] - u[x]);
    }
  }
  return out;
}

// Gamma(u, v) = (L(uv) - u Lv - v Lu) / 2
inline std::vector<double> Gamma(const std::vector<double>& w, const std::vector<double>& u,
                                 const std::vector<double>& v) {
  const std::size_t n = u.size();
  std::vector<double> uv(n);
  for (std::size_t i = 0; i < n; ++i) uv[i] = u[i] * v[i];
  const auto luv = Lap(w, uv), lu = Lap(w, u), lv = Lap(w, v);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (luv[i] - u[i] * lv[i] - v[i] * lu[i]);
  return out;
}

// Gamma2(u) = (L Gamma(u, u) - 2 Gamma(u, Lu)) / 2
inline std::vector<double> Gamma2(const std::vector<double>& w, const std::vector<double>& u) {
  const auto g = Gamma(w, u, u);
  const auto lg = Lap(w, g);
  const auto gl = Gamma(w, u, Lap(w, u));
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = 0.5 * lg[i] - gl[i];
  return out;
}

// Power sums of eigenvalues from traces: sum lambda^k = tr(M^k).
inline double TracePower(const std::vector<double>& a, std::size_t n, int k) {
  std::vector<double> p(a);
  for (int s = 1; s < k; ++s) {
    std::vector<double> q(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) q[i * n + j] += p[i * n + l] * a[l * n + j];
      }
    }
    p = std::move(q);
  }
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += p[i * n + i];
  return t;
}

}  // namespace oracle

#endif  // ABELSPEC_TESTS_ORACLES_HPP_
