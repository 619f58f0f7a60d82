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

#include "abelspec/abelspec.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "abelspec/covering.hpp"
#include "abelspec/error.hpp"
#include "abelspec/fourier.hpp"
#include "abelspec/group.hpp"
#include "abelspec/posdef.hpp"
#include "abelspec/problem.hpp"

struct abelspec_group {
  abelspec::FiniteAbelianGroup group;
};

struct abelspec_function {
  abelspec::GroupFunction function;
};

namespace {

using abelspec::ErrorCode;

thread_local std::string g_last_error;

abelspec_status Record(ErrorCode code, const std::string& message) {
  g_last_error = message;
  return static_cast<abelspec_status>(code);
}

// Runs `body`, mapping every exception to a status. No exception crosses the C boundary.
template <typename Body>
abelspec_status Guard(Body&& body) {
  try {
    body();
    return ABELSPEC_OK;
  } catch (const abelspec::Error& e) {
    return Record(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return Record(ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return Record(ErrorCode::kInternal, e.what());
  } catch (...) {
    return Record(ErrorCode::kInternal, "unknown exception");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) abelspec::Fail(ErrorCode::kInvalidArgument, what);
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void CheckCount(const abelspec::FiniteAbelianGroup& g, size_t count) {
  if (count != static_cast<size_t>(g.order())) {
    abelspec::Fail(ErrorCode::kLengthMismatch,
                   "expected " + std::to_string(g.order()) + " entries");
  }
}

void CopyOut(const std::vector<abelspec::Complex>& v, double* re, double* im) {
  for (size_t i = 0; i < v.size(); ++i) {
    re[i] = v[i].real();
    if (im != nullptr) im[i] = v[i].imag();
  }
}

}  // namespace

extern "C" {

const char* abelspec_version(void) { return "1.0.0"; }

const char* abelspec_last_error(void) { return g_last_error.c_str(); }

const char* abelspec_status_name(abelspec_status status) {
  // ErrorName returns views into static literals, so data() is NUL-terminated.
  return abelspec::ErrorName(static_cast<ErrorCode>(status)).data();
}

void abelspec_string_free(char* s) { std::free(s); }

abelspec_status abelspec_group_create(const int64_t* moduli, size_t rank,
                                      abelspec_group** out) {
  return Guard([&] {
    Require(out != nullptr && (moduli != nullptr || rank == 0), "null argument");
    *out = nullptr;
    auto g = abelspec::FiniteAbelianGroup::Make(
        std::vector<std::int64_t>(moduli, moduli + rank));
    *out = new abelspec_group{std::move(g)};
  });
}

void abelspec_group_destroy(abelspec_group* g) { delete g; }

int64_t abelspec_group_order(const abelspec_group* g) {
  return g == nullptr ? 0 : g->group.order();
}

size_t abelspec_group_rank(const abelspec_group* g) {
  return g == nullptr ? 0 : g->group.rank();
}

abelspec_status abelspec_group_index_of(const abelspec_group* g, const int64_t* residues,
                                        size_t rank, int64_t* index) {
  return Guard([&] {
    Require(g != nullptr && residues != nullptr && index != nullptr, "null argument");
    if (rank != g->group.rank()) abelspec::Fail(ErrorCode::kLengthMismatch, "rank mismatch");
    *index = g->group.IndexOf({std::vector<std::int64_t>(residues, residues + rank)});
  });
}

abelspec_status abelspec_group_element_at(const abelspec_group* g, int64_t index,
                                          int64_t* residues, size_t rank) {
  return Guard([&] {
    Require(g != nullptr && residues != nullptr, "null argument");
    if (rank != g->group.rank()) abelspec::Fail(ErrorCode::kLengthMismatch, "rank mismatch");
    const auto e = g->group.ElementAt(index);
    for (size_t i = 0; i < rank; ++i) residues[i] = e.residues[i];
  });
}

abelspec_status abelspec_function_from_values(const abelspec_group* g, const double* real,
                                              const double* imag, size_t count,
                                              abelspec_function** out) {
  return Guard([&] {
    Require(g != nullptr && real != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    CheckCount(g->group, count);
    std::vector<abelspec::Complex> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = {real[i], imag ? imag[i] : 0.0};
    *out = new abelspec_function{abelspec::GroupFunction(g->group, std::move(v))};
  });
}

abelspec_status abelspec_function_from_terms(const abelspec_group* g, const int64_t* chars,
                                             const double* coefs, size_t count,
                                             abelspec_function** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    Require(count == 0 || (chars != nullptr && coefs != nullptr), "null argument");
    *out = nullptr;
    const size_t rank = g->group.rank();
    std::vector<abelspec::SpectralTerm> terms;
    for (size_t i = 0; i < count; ++i) {
      terms.push_back({{std::vector<std::int64_t>(chars + i * rank, chars + (i + 1) * rank)},
                       coefs[i]});
    }
    *out = new abelspec_function{abelspec::GroupFunction::FromTerms(g->group, terms)};
  });
}

void abelspec_function_destroy(abelspec_function* f) { delete f; }

abelspec_status abelspec_function_values(const abelspec_function* f, double* real,
                                         double* imag, size_t count) {
  return Guard([&] {
    Require(f != nullptr && real != nullptr, "null argument");
    CheckCount(f->function.group(), count);
    CopyOut(f->function.values(), real, imag);
  });
}

abelspec_status abelspec_function_spectrum(const abelspec_function* f, double* real,
                                           double* imag, size_t count) {
  return Guard([&] {
    Require(f != nullptr && real != nullptr, "null argument");
    CheckCount(f->function.group(), count);
    CopyOut(abelspec::SpectrumOf(f->function).coefficients(), real, imag);
  });
}

abelspec_status abelspec_is_positive_definite(const abelspec_function* f, double tol,
                                              int* verdict) {
  return Guard([&] {
    Require(f != nullptr && verdict != nullptr, "null argument");
    *verdict = abelspec::IsPositiveDefinite(f->function, tol).verdict ? 1 : 0;
  });
}

abelspec_status abelspec_value_profile_of(const abelspec_function* f, double tol_distinct,
                                          abelspec_value_profile* out) {
  return Guard([&] {
    Require(f != nullptr && out != nullptr, "null argument");
    const auto p = abelspec::ValueProfileOf(
        f->function, tol_distinct < 0 ? std::nullopt : std::optional<double>(tol_distinct));
    out->nu1 = p.nu1();
    out->nu2 = p.sorted.size() > 1 ? p.nu(2) : std::numeric_limits<double>::quiet_NaN();
    out->has_nu2_distinct = p.nu2_distinct.has_value() ? 1 : 0;
    out->nu2_distinct = p.nu2_distinct.value_or(std::numeric_limits<double>::quiet_NaN());
    out->argmax_size = static_cast<int64_t>(p.argmax.size());
  });
}

abelspec_status abelspec_nu_k(const abelspec_function* f, size_t k, double* out) {
  return Guard([&] {
    Require(f != nullptr && out != nullptr, "null argument");
    *out = abelspec::ValueProfileOf(f->function).nu(k);
  });
}

abelspec_status abelspec_bound_uniform(const abelspec_function* f, int64_t m, double tol,
                                       abelspec_uniform_bound* out) {
  return Guard([&] {
    Require(f != nullptr && out != nullptr, "null argument");
    const auto u = abelspec::BoundUniform(f->function, m, tol);
    out->sharp = *u.sharp.bound;
    out->weak = *u.weak.bound;
    out->mu = *u.sharp.mu;
    out->rayleigh_floor = u.sharp.rayleigh_floor;
  });
}

abelspec_status abelspec_bound_multi(const abelspec_function* f, const int64_t* m, size_t r,
                                     double tol, int* valid, double* bound) {
  return Guard([&] {
    Require(f != nullptr && m != nullptr && valid != nullptr && bound != nullptr,
            "null argument");
    const auto b =
        abelspec::BoundMulti(f->function, std::vector<std::int64_t>(m, m + r), tol);
    *valid = b.valid ? 1 : 0;
    *bound = b.bound.value_or(std::numeric_limits<double>::quiet_NaN());
  });
}

abelspec_status abelspec_select_m(const abelspec_function* f, double tol,
                                  abelspec_select_m_result* out) {
  return Guard([&] {
    Require(f != nullptr && out != nullptr, "null argument");
    const auto s = abelspec::SelectM(f->function, tol);
    out->kappa = s.kappa;
    out->kappa_integral = s.kappa_integral ? 1 : 0;
    out->m_star = s.m_star;
    out->grid_fallback = s.grid_fallback ? 1 : 0;
    out->m_best = s.m_best;
    out->prop_optimal = s.prop_optimal ? 1 : 0;
    out->weak_at_m_star = *s.report.weak.bound;
    out->weak_at_m_best = *s.best_report.weak.bound;
  });
}

abelspec_status abelspec_run_problem(const char* problem_json,
                                     const abelspec_run_options* options, char** report,
                                     char** diagnostics, int* exit_code) {
  return Guard([&] {
    Require(problem_json != nullptr && exit_code != nullptr, "null argument");
    abelspec::RunOptions ro;
    if (options != nullptr) {
      ro.oracle = options->oracle != 0;
      if (options->has_tol) ro.tol = options->tol;
      if (options->has_tol_distinct) ro.tol_distinct = options->tol_distinct;
      if (options->m != nullptr) {
        ro.m = std::vector<std::int64_t>(options->m, options->m + options->m_count);
      }
      if (options->eps != nullptr) {
        ro.eps = std::vector<double>(options->eps, options->eps + options->eps_count);
      }
    }
    const auto outcome = abelspec::RunProblem(problem_json, ro);
    char* r = report ? Duplicate(outcome.report) : nullptr;
    char* d = nullptr;
    try {
      d = diagnostics ? Duplicate(outcome.diagnostics) : nullptr;
    } catch (...) {
      std::free(r);
      throw;
    }
    if (report) *report = r;
    if (diagnostics) *diagnostics = d;
    *exit_code = outcome.exit_code;
  });
}

}  // extern "C"
