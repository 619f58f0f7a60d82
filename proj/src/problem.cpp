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

#include "abelspec/problem.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string_view>

#include "abelspec/cayley.hpp"
#include "abelspec/covering.hpp"
#include "abelspec/error.hpp"
#include "abelspec/linalg.hpp"
#include "abelspec/posdef.hpp"
#include "json.hpp"

namespace abelspec {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kProblemVersion = 1;

// ---------------------------------------------------------------- parsing

[[noreturn]] void Schema(const std::string& path, const std::string& msg) {
  Fail(ErrorCode::kSchemaError, path + ": " + msg);
}

std::string Join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void CheckKeys(const Json& obj, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) Schema(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      Fail(ErrorCode::kUnknownField, "unknown field '" + Join(path, item.key()) + "'");
    }
  }
}

const Json& Require(const Json& obj, const std::string& path, std::string_view key) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) Schema(Join(path, key), "required field is missing");
  return *it;
}

std::int64_t GetInt(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) Schema(path, "expected an integer");
  return v.get<std::int64_t>();
}

double GetNum(const Json& v, const std::string& path) {
  if (!v.is_number()) Schema(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Schema(path, "expected a finite number");
  return d;
}

bool GetBool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) Schema(path, "expected true or false");
  return v.get<bool>();
}

std::string GetString(const Json& v, const std::string& path) {
  if (!v.is_string()) Schema(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::int64_t> GetIntArray(const Json& v, const std::string& path) {
  if (!v.is_array()) Schema(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(GetInt(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<double> GetNumArray(const Json& v, const std::string& path) {
  if (!v.is_array()) Schema(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(GetNum(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FiniteAbelianGroup ParseGroup(const Json& v, const std::string& path) {
  CheckKeys(v, path, {"moduli"});
  return FiniteAbelianGroup::Make(GetIntArray(Require(v, path, "moduli"),
                                              Join(path, "moduli")));
}

ElementIndex ParseElement(const Json& v, const FiniteAbelianGroup& g,
                          const std::string& path) {
  const auto residues = GetIntArray(v, path);
  if (residues.size() != g.rank()) {
    Schema(path, "element needs " + std::to_string(g.rank()) + " residues");
  }
  return g.IndexOf(GroupElement{residues});
}

GroupFunction ParseFunction(const Json& v, const FiniteAbelianGroup& g,
                            const std::string& path, std::string* mode_out) {
  if (!v.is_object()) Schema(path, "expected a function object");
  const std::string mode = GetString(Require(v, path, "mode"), Join(path, "mode"));
  if (v.contains("group")) {
    const auto inner = ParseGroup(v["group"], Join(path, "group"));
    if (!(inner == g)) Schema(Join(path, "group"), "differs from the problem group");
  }
  if (mode_out != nullptr) *mode_out = mode;
  if (mode == "spectral") {
    CheckKeys(v, path, {"mode", "group", "terms"});
    const Json& terms = Require(v, path, "terms");
    const std::string tpath = Join(path, "terms");
    if (!terms.is_array()) Schema(tpath, "expected an array of terms");
    std::vector<Complex> coef(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string ipath = tpath + "[" + std::to_string(i) + "]";
      CheckKeys(terms[i], ipath, {"char", "coef"});
      const ElementIndex chi =
          ParseElement(Require(terms[i], ipath, "char"), g, Join(ipath, "char"));
      coef[static_cast<std::size_t>(chi)] +=
          GetNum(Require(terms[i], ipath, "coef"), Join(ipath, "coef"));
    }
    return GroupFunction::FromSpectrum(Spectrum(g, std::move(coef)));
  }
  if (mode == "pointwise") {
    CheckKeys(v, path, {"mode", "group", "values"});
    const Json& values = Require(v, path, "values");
    const std::string vpath = Join(path, "values");
    if (!values.is_array()) Schema(vpath, "expected an array of values");
    if (values.size() != static_cast<std::size_t>(g.order())) {
      Schema(vpath, "expected " + std::to_string(g.order()) + " values, got " +
                        std::to_string(values.size()));
    }
    std::vector<Complex> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string ipath = vpath + "[" + std::to_string(i) + "]";
      if (values[i].is_array()) {
        const auto pair = GetNumArray(values[i], ipath);
        if (pair.size() != 2) Schema(ipath, "expected [re, im]");
        out.emplace_back(pair[0], pair[1]);
      } else {
        out.emplace_back(GetNum(values[i], ipath), 0.0);
      }
    }
    return GroupFunction(g, std::move(out));
  }
  Schema(Join(path, "mode"), "unknown mode '" + mode + "' (spectral or pointwise)");
}

std::vector<ElementIndex> ParseElementList(const Json& v, const FiniteAbelianGroup& g,
                                           const std::string& path) {
  if (!v.is_array()) Schema(path, "expected an array of elements");
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ParseElement(v[i], g, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Position of byte offset `pos` as "line L, column C".
std::string LineColumn(const std::string& text, std::size_t pos) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const std::vector<std::string_view> kTasks = {
    "fourier", "nu2-bound", "values", "cayley-check", "walk", "sumset", "selftest"};

}  // namespace

Problem ParseProblem(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorCode::kSchemaError,
         "malformed JSON at " + LineColumn(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!root.is_object()) Schema("<root>", "expected an object");
  Problem p;
  p.version = static_cast<int>(GetInt(Require(root, "", "version"), "version"));
  if (p.version != kProblemVersion) {
    Schema("version", "unsupported version " + std::to_string(p.version));
  }
  p.task = GetString(Require(root, "", "task"), "task");
  if (std::find(kTasks.begin(), kTasks.end(), p.task) == kTasks.end()) {
    Fail(ErrorCode::kUnknownTask, "unknown task '" + p.task + "'");
  }

  if (p.task == "fourier" || p.task == "values") {
    CheckKeys(root, "", {"version", "task", "group", "function", "oracle", "tol",
                         "tol_distinct", "expect"});
  } else if (p.task == "nu2-bound") {
    CheckKeys(root, "", {"version", "task", "group", "function", "m", "budget",
                         "oracle", "tol", "tol_distinct", "expect"});
  } else if (p.task == "cayley-check") {
    CheckKeys(root, "", {"version", "task", "group", "weights", "oracle", "tol",
                         "tol_distinct", "expect"});
  } else if (p.task == "walk") {
    CheckKeys(root, "", {"version", "task", "group", "p", "eps", "m", "condition",
                         "product", "sweep", "csv", "oracle", "tol", "tol_distinct",
                         "expect"});
  } else if (p.task == "sumset") {
    CheckKeys(root, "", {"version", "task", "group", "A", "B", "m", "weights",
                         "integers", "oracle", "tol", "tol_distinct", "expect"});
  } else {
    CheckKeys(root, "", {"version", "task", "oracle", "expect"});
  }

  if (root.contains("oracle")) p.oracle = GetBool(root["oracle"], "oracle");
  if (root.contains("tol")) {
    p.tol = GetNum(root["tol"], "tol");
    if (*p.tol < 0.0) Fail(ErrorCode::kNegativeTolerance, "tol must be >= 0");
  }
  if (root.contains("tol_distinct")) {
    p.tol_distinct = GetNum(root["tol_distinct"], "tol_distinct");
  }
  if (root.contains("group")) p.group = ParseGroup(root["group"], "group");

  auto need_group = [&](const std::string& why) -> const FiniteAbelianGroup& {
    if (!p.group) Schema("group", "required for " + why);
    return *p.group;
  };

  if (p.task == "fourier" || p.task == "values" || p.task == "nu2-bound") {
    p.function = ParseFunction(Require(root, "", "function"), need_group(p.task),
                               "function", &p.function_mode);
  }
  if (p.task == "nu2-bound" || p.task == "walk") {
    if (root.contains("m")) {
      if (root["m"].is_array()) {
        p.m = GetIntArray(root["m"], "m");
      } else {
        p.m = std::vector<std::int64_t>{GetInt(root["m"], "m")};
      }
    }
  }
  if (p.task == "nu2-bound" && root.contains("budget")) {
    p.budget = GetInt(root["budget"], "budget");
  }
  if (p.task == "cayley-check") {
    p.function = ParseFunction(Require(root, "", "weights"), need_group(p.task),
                               "weights", &p.function_mode);
  }
  if (p.task == "walk") {
    if (root.contains("p")) {
      p.function = ParseFunction(root["p"], need_group("walk.p"), "p", &p.function_mode);
    } else if (!root.contains("sweep") && !root.contains("product")) {
      Schema("p", "required unless a sweep or product is given");
    }
    p.eps = root.contains("eps") ? GetNumArray(root["eps"], "eps")
                                 : std::vector<double>{0.25, 0.1};
    if (root.contains("condition")) {
      const std::string c = GetString(root["condition"], "condition");
      if (c == "literal") {
        p.condition = GenerationMode::kLiteral;
      } else if (c == "irreducible") {
        p.condition = GenerationMode::kIrreducible;
      } else {
        Schema("condition", "expected 'literal' or 'irreducible'");
      }
    }
    if (root.contains("product")) {
      const Json& prod = root["product"];
      CheckKeys(prod, "product", {"components", "weights"});
      const Json& comps = Require(prod, "product", "components");
      if (!comps.is_array() || comps.empty()) {
        Schema("product.components", "expected a nonempty array");
      }
      WalkProduct wp;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string cpath = "product.components[" + std::to_string(i) + "]";
        CheckKeys(comps[i], cpath, {"group", "p"});
        const auto g = ParseGroup(Require(comps[i], cpath, "group"), Join(cpath, "group"));
        wp.components.push_back(
            ParseFunction(Require(comps[i], cpath, "p"), g, Join(cpath, "p"), nullptr));
      }
      wp.weights = GetNumArray(Require(prod, "product", "weights"), "product.weights");
      p.product = std::move(wp);
    }
    if (root.contains("sweep")) {
      const Json& s = root["sweep"];
      CheckKeys(s, "sweep", {"family", "from", "to", "step"});
      if (GetString(Require(s, "sweep", "family"), "sweep.family") != "cycle") {
        Schema("sweep.family", "only 'cycle' is supported");
      }
      WalkSweep w;
      w.from = GetInt(Require(s, "sweep", "from"), "sweep.from");
      w.to = GetInt(Require(s, "sweep", "to"), "sweep.to");
      if (s.contains("step")) w.step = GetInt(s["step"], "sweep.step");
      if (w.from < 3 || w.to < w.from || w.step < 1) {
        Schema("sweep", "need 3 <= from <= to and step >= 1");
      }
      p.sweep = w;
    }
    if (root.contains("csv")) p.csv = GetBool(root["csv"], "csv");
  }
  if (p.task == "sumset") {
    if (root.contains("m")) p.sumset_m = GetInt(root["m"], "m");
    if (root.contains("integers")) {
      if (root.contains("A") || root.contains("B") || root.contains("group")) {
        Schema("integers", "integer mode excludes group, A and B");
      }
      p.integers = GetIntArray(root["integers"], "integers");
    } else {
      const auto& g = need_group("sumset");
      p.set_a = MakeSymmetricSet(g, ParseElementList(Require(root, "", "A"), g, "A"));
      p.set_b = MakeSymmetricSet(g, ParseElementList(Require(root, "", "B"), g, "B"));
      if (root.contains("weights")) {
        const Json& w = root["weights"];
        CheckKeys(w, "weights", {"A", "B"});
        if (w.contains("A")) p.weights_a = GetNumArray(w["A"], "weights.A");
        if (w.contains("B")) p.weights_b = GetNumArray(w["B"], "weights.B");
      }
    }
  }
  if (root.contains("expect")) {
    const Json& e = root["expect"];
    CheckKeys(e, "expect", {"tol", "values"});
    if (e.contains("tol")) p.expect_tol = GetNum(e["tol"], "expect.tol");
    const Json& values = Require(e, "expect", "values");
    if (!values.is_object()) Schema("expect.values", "expected an object");
    for (const auto& item : values.items()) {
      p.expect.emplace_back(item.key(),
                            GetNum(item.value(), "expect.values." + item.key()));
    }
  }
  return p;
}

namespace {

// ---------------------------------------------------------------- reports

Json Num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

Json OptNum(const std::optional<double>& x) {
  return x ? Num(*x) : Json(nullptr);
}

Json Element(const FiniteAbelianGroup& g, ElementIndex x) {
  return g.ElementAt(x).residues;
}

Json IntList(const std::vector<std::int64_t>& v) { return v; }

struct Context {
  const Problem& problem;
  bool oracle = false;
  double tau = kDefaultSupportTolerance;
  std::optional<double> tol_distinct;
  std::optional<std::vector<std::int64_t>> m;
  std::vector<double> eps;
  Json checks = Json::array();
  bool failed = false;

  void Check(const std::string& name, bool passed, Json detail = Json::object()) {
    Json c;
    c["name"] = name;
    c["passed"] = passed;
    for (auto& item : detail.items()) c[item.key()] = item.value();
    checks.push_back(std::move(c));
    if (!passed) failed = true;
  }
  // bound <= target + 1e-9 * max(1, |target|)
  void CheckBelow(const std::string& name, double bound, double target) {
    const bool ok = bound <= target + 1e-9 * std::max(1.0, std::abs(target));
    Check(name, ok, Json{{"bound", Num(bound)}, {"target", Num(target)}});
  }
};

Json ReportOf(const BoundReport& b) {
  Json j;
  j["bound"] = OptNum(b.bound);
  j["form"] = BoundFormName(b.form);
  j["m"] = IntList(b.m);
  j["r"] = b.r;
  j["t"] = b.t;
  j["s"] = b.s;
  j["mu"] = b.mu ? Json(*b.mu) : Json(nullptr);
  j["kappa"] = OptNum(b.kappa);
  j["rayleigh_floor"] = Num(b.rayleigh_floor);
  j["valid"] = b.valid;
  if (b.oracle_nu2) j["oracle_nu2"] = Num(*b.oracle_nu2);
  return j;
}

// ---------------------------------------------------------------- tasks

Json RunFourier(Context& ctx) {
  const GroupFunction& f = *ctx.problem.function;
  const auto& g = f.group();
  const Spectrum s = SpectrumOf(f);
  const SupportSet support = SupportOfFunction(f, ctx.tau);
  const PosDefCertificate cert = IsPositiveDefinite(f, ctx.tau);
  Json out;
  out["group"] = g.ToString();
  out["order"] = g.order();
  out["mode"] = ctx.problem.function_mode;
  out["support_tolerance"] = support.declared ? Json("declared") : Num(ctx.tau);
  Json list = Json::array();
  for (ElementIndex chi : support.members) {
    list.push_back(Json{{"char", Element(g, chi)},
                        {"coef", Json::array({Num(s[chi].real()), Num(s[chi].imag())})}});
  }
  out["support_size"] = support.size();
  out["support"] = std::move(list);
  out["real_valued"] = f.IsReal();
  out["positive_definite"] = cert.verdict;
  out["min_real_coefficient"] = Num(cert.min_real);
  if (ctx.oracle) {
    const Spectrum direct = FourierTransform(f);
    double lhs = InnerProduct(f.values(), f.values()).real();
    double rhs = 0.0;
    double dev = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i) {
      rhs += std::norm(direct.coefficients()[i]);
      dev = std::max(dev, std::abs(direct.coefficients()[i] - s.coefficients()[i]));
    }
    const double parseval = std::abs(lhs - rhs) / std::max(1.0, lhs);
    const GroupFunction back = InverseTransform(direct);
    double recon = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      recon = std::max(recon, std::abs(back[static_cast<ElementIndex>(i)] -
                                       f[static_cast<ElementIndex>(i)]));
    }
    recon /= std::max(1.0, f.MaxAbs());
    ctx.Check("parseval", parseval <= 1e-10, Json{{"relative_error", Num(parseval)}});
    ctx.Check("inverse_reconstruction", recon <= 1e-10,
              Json{{"relative_error", Num(recon)}});
    ctx.Check("declared_vs_transform", dev <= 1e-9 * std::max(1.0, f.MaxAbs()),
              Json{{"max_deviation", Num(dev)}});
  }
  return out;
}

Json RunValues(Context& ctx) {
  const GroupFunction& f = *ctx.problem.function;
  const auto& g = f.group();
  const ValueProfile profile = ValueProfileOf(f, ctx.tol_distinct);
  const PosDefCertificate cert = IsPositiveDefinite(f, ctx.tau);
  Json out;
  out["order"] = g.order();
  out["nu1"] = Num(profile.nu1());
  Json head = Json::array();
  for (std::size_t k = 1; k <= std::min<std::size_t>(10, profile.sorted.size()); ++k) {
    head.push_back(Num(profile.nu(k)));
  }
  out["nu_head"] = std::move(head);
  out["nu2"] = profile.sorted.size() > 1 ? Num(profile.nu(2)) : Json(nullptr);
  out["nu2_distinct"] = OptNum(profile.nu2_distinct);
  out["tol_distinct"] = Num(profile.tol_distinct);
  out["argmax_size"] = profile.argmax.size();
  Json argmax = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(32, profile.argmax.size()); ++i) {
    argmax.push_back(Element(g, profile.argmax[i]));
  }
  out["argmax"] = std::move(argmax);
  out["positive_definite"] = cert.verdict;
  if (cert.verdict) {
    const std::int64_t mult = Nu1Multiplicity(f, ctx.tau);
    out["nu1_multiplicity"] = mult;
    if (ctx.oracle) {
      ctx.Check("nu1_multiplicity_matches_argmax",
                mult == static_cast<std::int64_t>(profile.argmax.size()),
                Json{{"multiplicity", mult}, {"argmax_size", profile.argmax.size()}});
    }
  }
  if (ctx.oracle) {
    const RayleighCheck rc = MaxEqualsSupRayleigh(f);
    const double scale = std::max(1.0, std::abs(rc.max_value));
    ctx.Check("rayleigh_witness_equals_max",
              std::abs(rc.witness_rayleigh - rc.max_value) <= 1e-9 * scale,
              Json{{"max", Num(rc.max_value)}, {"witness", Num(rc.witness_rayleigh)}});
    ctx.Check("rayleigh_sup_not_above_max", rc.sup_rayleigh <= rc.max_value + 1e-9 * scale,
              Json{{"sup", Num(rc.sup_rayleigh)}});
  }
  return out;
}

Json RunNu2Bound(Context& ctx) {
  const GroupFunction& f = *ctx.problem.function;
  const auto& g = f.group();
  const SupportPairing pairing = PairSupport(f, ctx.tau);
  Json out;
  Json pj;
  pj["r"] = pairing.r();
  pj["t"] = pairing.t();
  pj["s"] = pairing.s();
  Json reps = Json::array(), invs = Json::array(), coefs = Json::array(),
       icoefs = Json::array();
  for (std::size_t i = 0; i < pairing.r(); ++i) {
    reps.push_back(Element(g, pairing.reps[i]));
    coefs.push_back(Num(pairing.rep_coefficients[i]));
  }
  for (std::size_t j = 0; j < pairing.t(); ++j) {
    invs.push_back(Element(g, pairing.involutions[j]));
    icoefs.push_back(Num(pairing.involution_coefficients[j]));
  }
  pj["reps"] = std::move(reps);
  pj["rep_coefficients"] = std::move(coefs);
  pj["involutions"] = std::move(invs);
  pj["involution_coefficients"] = std::move(icoefs);
  out["pairing"] = std::move(pj);
  out["nu1"] = Num(f[0].real());

  const SelectMResult sel = SelectM(f, ctx.tau);
  out["nu1_multiplicity"] = sel.report.sharp.nu1_multiplicity;
  out["select_m"] = Json{{"kappa", Num(sel.kappa)},
                         {"kappa_integral", sel.kappa_integral},
                         {"m_star", sel.m_star},
                         {"grid_fallback", sel.grid_fallback},
                         {"m_best", sel.m_best},
                         {"prop_optimal", sel.prop_optimal},
                         {"weak", OptNum(sel.report.weak.bound)},
                         {"best_weak", OptNum(sel.best_report.weak.bound)}};

  std::int64_t m_uniform = sel.m_star;
  std::optional<BoundReport> multi;
  if (ctx.m) {
    if (ctx.m->size() == 1) {
      m_uniform = ctx.m->front();
    } else {
      multi = BoundMulti(f, pairing, *ctx.m);
    }
  }
  const UniformBound uni = BoundUniform(f, pairing, m_uniform);
  out["uniform"] = Json{{"m", m_uniform},
                        {"sharp", OptNum(uni.sharp.bound)},
                        {"weak", OptNum(uni.weak.bound)},
                        {"mu", *uni.sharp.mu},
                        {"rayleigh_floor", Num(uni.sharp.rayleigh_floor)}};
  if (multi) out["multi"] = ReportOf(*multi);

  const BestBoundResult best = BestBoundSearch(f, ctx.problem.budget, ctx.tau);
  Json bj;
  bj["uniform_sharp"] = Json{{"m", best.uniform_sharp.m.front()},
                             {"bound", OptNum(best.uniform_sharp.bound)}};
  bj["uniform_weak"] = Json{{"m", best.uniform_weak.m.front()},
                            {"bound", OptNum(best.uniform_weak.bound)}};
  bj["multi"] = best.multi ? Json{{"m", IntList(best.multi->m)},
                                  {"bound", OptNum(best.multi->bound)}}
                           : Json(nullptr);
  bj["budget_exceeded"] = best.budget_exceeded;
  bj["candidates"] = best.candidates;
  out["best"] = std::move(bj);

  const std::vector<std::int64_t> mv(pairing.r(), m_uniform);
  const Spectrum v = EtaPushforward(pairing, MakeH0(pairing, mv));
  const NuNextBound nb = NuNextBoundOf(f, v, 1);
  out["test_vector"] = Json{{"m", m_uniform},
                            {"support", nb.mu},
                            {"rayleigh", Num(nb.rayleigh)},
                            {"floor", Num(uni.sharp.rayleigh_floor)},
                            {"bound", Num(nb.value)},
                            {"direction", nb.direction == BoundDirection::kLower
                                              ? "lower"
                                              : "upper"}};

  if (ctx.oracle) {
    const ValueProfile profile = ValueProfileOf(f, ctx.tol_distinct);
    const double nu2 = profile.nu(2);
    out["oracle"] = Json{{"nu2", Num(nu2)},
                         {"nu2_distinct", OptNum(profile.nu2_distinct)},
                         {"sense", "with-multiplicity"},
                         {"multiplicity_flag", sel.report.sharp.nu1_multiplicity > 1}};
    ctx.CheckBelow("uniform_sharp_le_nu2", *uni.sharp.bound, nu2);
    ctx.CheckBelow("uniform_weak_le_nu2", *uni.weak.bound, nu2);
    ctx.CheckBelow("select_m_weak_le_nu2", *sel.report.weak.bound, nu2);
    ctx.CheckBelow("best_uniform_sharp_le_nu2", *best.uniform_sharp.bound, nu2);
    if (best.multi) ctx.CheckBelow("best_multi_le_nu2", *best.multi->bound, nu2);
    if (multi && multi->valid) ctx.CheckBelow("multi_le_nu2", *multi->bound, nu2);
    ctx.CheckBelow("test_vector_le_nu2", nb.value, nu2);
    ctx.Check("rayleigh_floor",
              nb.rayleigh >= uni.sharp.rayleigh_floor -
                                 1e-9 * std::max(1.0, std::abs(uni.sharp.rayleigh_floor)),
              Json{{"rayleigh", Num(nb.rayleigh)}, {"floor", Num(uni.sharp.rayleigh_floor)}});
  }
  return out;
}

Json RunCayley(Context& ctx) {
  const CayleyGraph graph = BuildCayley(*ctx.problem.function);
  const auto& g = graph.group();
  Json out;
  out["order"] = g.order();
  out["degree"] = Num(graph.degree());
  out["connected"] = graph.IsConnected();
  out["curvature_constant"] = Num(CurvatureConstant());
  if (static_cast<std::size_t>(g.order()) <= kSpectrumCheckCap) {
    const SpectrumCheck sc = CayleySpectrumCheck(graph);
    Json top = Json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(8, sc.fourier.size()); ++i) {
      top.push_back(Num(sc.fourier[i]));
    }
    out["spectrum"] = Json{{"max_deviation", Num(sc.max_deviation)}, {"top", top}};
    ctx.Check("spectrum_matches_fourier", sc.max_deviation <= 1e-8,
              Json{{"max_deviation", Num(sc.max_deviation)}});
  }
  const CdResult cd = CdZeroCheck(graph);
  out["cd"] = Json{{"verdict", cd.verdict},
                   {"mode", cd.mode == CdMode::kExact ? "exact" : "randomized"},
                   {"min_eigenvalue", Num(cd.min_eigenvalue)},
                   {"worst_vertex", cd.worst_vertex}};
  ctx.Check("cd_zero", cd.verdict, Json{{"min_eigenvalue", Num(cd.min_eigenvalue)}});
  if (graph.IsConnected() && g.order() > 1 &&
      static_cast<std::size_t>(g.order()) <= kJacobiMaxSize) {
    const EigenComparison ec = CheckEigenComparison(graph.ToWeightedGraph());
    out["eigen_comparison"] = Json{{"holds", ec.holds},
                                   {"worst_ratio", Num(ec.worst_ratio)},
                                   {"worst_k", ec.worst_k},
                                   {"lambda2", Num(ec.lambda2)}};
    ctx.Check("eigenvalue_comparison", ec.holds,
              Json{{"worst_ratio", Num(ec.worst_ratio)}});
  }
  return out;
}

Json TimesJson(const ChainTimes& t) {
  Json j;
  j["lambda2"] = Num(t.lambda2);
  j["lambda_min"] = Num(t.lambda_min);
  j["t_rel"] = Num(t.t_rel);
  j["t_rel_star"] = Num(t.t_rel_star);
  j["periodic"] = t.periodic;
  Json mix = Json::array();
  for (std::size_t i = 0; i < t.eps.size(); ++i) {
    mix.push_back(Json{{"eps", Num(t.eps[i])},
                       {"steps", t.t_mix[i] ? Json(*t.t_mix[i]) : Json(nullptr)}});
  }
  j["t_mix"] = std::move(mix);
  return j;
}

Json TrelJson(const TrelBound& b) {
  return Json{{"bound", Num(b.bound)},   {"m", b.m},
              {"sharp", Num(b.sharp_bound)}, {"sharp_m", b.sharp_m},
              {"fallback", b.fallback},  {"r", b.r},
              {"t", b.t},                {"s", b.s},
              {"cardinality_ok", b.cardinality_ok}};
}

std::optional<std::int64_t> SingleM(const Context& ctx) {
  if (!ctx.m) return std::nullopt;
  if (ctx.m->size() != 1) Fail(ErrorCode::kArityMismatch, "walk takes a single m");
  return ctx.m->front();
}

Json RunWalk(Context& ctx) {
  const Problem& p = ctx.problem;
  Json out;
  if (p.function) {
    const WalkSpec spec = ValidateWalk(*p.function, p.condition);
    out["conditions"] = Json{
        {"mode", p.condition == GenerationMode::kLiteral ? "literal" : "irreducible"},
        {"a", spec.condition_a},
        {"b_literal", spec.condition_b_literal},
        {"b_literal_failure", spec.literal_failure
                                  ? Element(spec.group, *spec.literal_failure)
                                  : Json(nullptr)},
        {"generates", spec.generates}};
    const ChainTimes times = ComputeChainTimes(spec, ctx.eps);
    out["times"] = TimesJson(times);
    const TrelBound tb = TrelLowerBound(spec, SingleM(ctx));
    out["trel_bound"] = TrelJson(tb);
    Json tmix = Json::array();
    if (!times.periodic) {
      for (double e : ctx.eps) {
        tmix.push_back(Json{{"eps", Num(e)},
                            {"bound", Num(TmixLowerBound(spec, e, SingleM(ctx)))}});
      }
    }
    out["tmix_bound"] = std::move(tmix);
    if (ctx.oracle) {
      ctx.CheckBelow("trel_bound_le_trel", tb.bound, times.t_rel);
      ctx.CheckBelow("trel_sharp_le_trel", tb.sharp_bound, times.t_rel);
      if (!times.periodic) {
        for (std::size_t i = 0; i < ctx.eps.size(); ++i) {
          ctx.CheckBelow("tmix_bound_le_tmix", TmixLowerBound(spec, ctx.eps[i], SingleM(ctx)),
                         static_cast<double>(*times.t_mix[i]));
        }
      }
      if (spec.group.order() <= 128) {
        const auto n = static_cast<std::size_t>(spec.group.order());
        SymmetricMatrix k(n);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            k(x, y) = spec.p[static_cast<std::size_t>(spec.group.Subtract(
                static_cast<ElementIndex>(y), static_cast<ElementIndex>(x)))];
          }
        }
        auto jac = JacobiEigen(k).values;
        std::reverse(jac.begin(), jac.end());
        const auto ws = WalkSpectrum(spec);
        double dev = 0.0;
        for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(jac[i] - ws[i].lambda));
        ctx.Check("spectrum_matches_matrix", dev <= 1e-8, Json{{"max_deviation", Num(dev)}});
      }
    }
  }
  if (p.product) {
    const ProductChain pc =
        MakeProductChain(p.product->components, p.product->weights, p.condition);
    Json bounds = Json::array();
    for (double b : pc.component_bounds) bounds.push_back(Num(b));
    out["product"] = Json{{"order", pc.spec.group.order()},
                          {"formula_t_rel", Num(pc.formula_t_rel)},
                          {"direct_t_rel", Num(pc.direct_t_rel)},
                          {"component_bounds", std::move(bounds)},
                          {"dlogd_refinement", "not-evaluated"}};
    if (ctx.oracle) {
      ctx.Check("product_formula_matches_direct",
                std::abs(pc.formula_t_rel - pc.direct_t_rel) <=
                    1e-9 * std::max(1.0, pc.direct_t_rel),
                Json{{"formula", Num(pc.formula_t_rel)}, {"direct", Num(pc.direct_t_rel)}});
      for (double b : pc.component_bounds) {
        ctx.CheckBelow("product_component_bound_le_trel", b, pc.direct_t_rel);
      }
    }
  }
  if (p.sweep) {
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "n,t_rel,t_rel_closed_form,bound,bound_m,ratio,gap_scaled";
    for (double e : ctx.eps) csv << ",t_mix_" << e << ",tmix_bound_" << e;
    csv << "\n";
    for (std::int64_t n = p.sweep->from; n <= p.sweep->to; n += p.sweep->step) {
      const WalkSpec spec = ValidateWalk(CycleWalk(n), GenerationMode::kIrreducible);
      const ChainTimes times = ComputeChainTimes(spec, ctx.eps);
      const TrelBound tb = TrelLowerBound(spec);
      const double closed =
          1.0 / (1.0 - std::cos(2.0 * std::numbers::pi / static_cast<double>(n)));
      const double ratio = times.t_rel / tb.bound;
      const double nd = static_cast<double>(n);
      const double gap_scaled = (1.0 - times.lambda2) * nd * nd;
      Json row{{"n", n},           {"t_rel", Num(times.t_rel)},
               {"t_rel_closed_form", Num(closed)}, {"bound", Num(tb.bound)},
               {"bound_m", tb.m},  {"ratio", Num(ratio)},
               {"gap_scaled", Num(gap_scaled)}};
      csv << n << ',' << Num(times.t_rel).dump() << ',' << Num(closed).dump() << ','
          << Num(tb.bound).dump() << ',' << tb.m << ',' << Num(ratio).dump() << ','
          << Num(gap_scaled).dump();
      Json mix = Json::array();
      for (std::size_t i = 0; i < ctx.eps.size(); ++i) {
        // Periodic chains never mix, so there is no bound to report.
        const bool has_bound = !times.periodic;
        const double bound = has_bound ? TmixLowerBound(spec, ctx.eps[i]) : 0.0;
        mix.push_back(Json{{"eps", Num(ctx.eps[i])},
                           {"t_mix", times.t_mix[i] ? Json(*times.t_mix[i]) : Json(nullptr)},
                           {"bound", has_bound ? Num(bound) : Json(nullptr)}});
        csv << ',' << (times.t_mix[i] ? std::to_string(*times.t_mix[i]) : "")
            << ',' << (has_bound ? Num(bound).dump() : "");
        if (ctx.oracle && has_bound) {
          ctx.CheckBelow("sweep_tmix_bound_le_tmix", bound,
                         static_cast<double>(*times.t_mix[i]));
        }
      }
      csv << "\n";
      row["mixing"] = std::move(mix);
      rows.push_back(std::move(row));
      if (ctx.oracle) {
        ctx.CheckBelow("sweep_trel_bound_le_trel", tb.bound, times.t_rel);
        ctx.Check("sweep_trel_closed_form",
                  std::abs(times.t_rel - closed) <= 1e-9 * closed,
                  Json{{"n", n}});
        ctx.Check("sweep_ratio_le_10", ratio <= 10.0, Json{{"n", n}, {"ratio", Num(ratio)}});
        ctx.Check("sweep_gap_scaled_in_range", gap_scaled >= 0.5 && gap_scaled <= 25.0,
                  Json{{"n", n}, {"gap_scaled", Num(gap_scaled)}});
      }
    }
    out["sweep"] = std::move(rows);
    if (p.csv) out["csv"] = csv.str();
  }
  return out;
}

Json CertificateJson(const SumsetCertificate& c) {
  return Json{{"sumset_size", c.sumset_size},
              {"size_a", c.size_a},
              {"size_b", c.size_b},
              {"mu2_rule", Mu2RuleName(c.mu2_rule)},
              {"mu2", OptNum(c.mu2)},
              {"nu1_f", Num(c.nu1_f)},
              {"nu1_g", Num(c.nu1_g)},
              {"m", c.m},
              {"h_order", c.h_order},
              {"prime", c.prime ? Json(*c.prime) : Json(nullptr)},
              {"condition_value", Num(c.condition_value)},
              {"applicable", c.applicable},
              {"s_condition", c.s_condition},
              {"sum_generates", c.sum_generates},
              {"vacuous", c.vacuous},
              {"lower", OptNum(c.lower)},
              {"lower_ceiling", c.lower_ceiling ? Json(*c.lower_ceiling) : Json(nullptr)},
              {"upper", Num(c.upper)},
              {"product_rule", Json{{"mu2", OptNum(c.mu2_product)},
                                    {"mu2_induced", OptNum(c.mu2_induced)},
                                    {"lower", OptNum(c.lower_product)},
                                    {"lower_ceiling", c.lower_ceiling_product
                                                          ? Json(*c.lower_ceiling_product)
                                                          : Json(nullptr)},
                                    {"vacuous", c.vacuous_product}}}};
}

Json RunSumset(Context& ctx) {
  const Problem& p = ctx.problem;
  const std::int64_t m = ctx.m ? SingleM(ctx).value() : p.sumset_m;
  const SumsetCertificate c =
      p.integers ? IntegerSumsetBound(*p.integers, m)
                 : SumsetLowerBound(*p.set_a, *p.set_b, m,
                                    p.weights_a ? &*p.weights_a : nullptr,
                                    p.weights_b ? &*p.weights_b : nullptr);
  if (ctx.oracle) {
    ctx.Check("sumset_le_product", c.sumset_size <= c.size_a * c.size_b);
    if (c.applicable && c.lower_ceiling) {
      ctx.Check("lower_ceiling_le_sumset", *c.lower_ceiling <= c.sumset_size,
                Json{{"lower_ceiling", *c.lower_ceiling}, {"sumset_size", c.sumset_size}});
    }
    if (c.s_condition) {
      ctx.Check("upper_ge_sumset",
                static_cast<double>(c.sumset_size) <= c.upper + 1e-9,
                Json{{"upper", Num(c.upper)}, {"sumset_size", c.sumset_size}});
    }
    if (c.applicable && c.lower_ceiling_product) {
      ctx.Check("product_rule_ceiling_le_sumset", *c.lower_ceiling_product <= c.sumset_size);
    }
    if (c.mu2_product && c.mu2_induced) {
      ctx.Check("mu2_product_matches_induced",
                std::abs(*c.mu2_product - *c.mu2_induced) <=
                    1e-9 * std::max(1.0, *c.mu2_product));
    }
  }
  return CertificateJson(c);
}

// Built-in reproduction of the two worked examples plus identity spot checks.
Json RunSelftest(Context& ctx) {
  Json out;
  const auto z40 = FiniteAbelianGroup::Make({40});
  const std::vector<SpectralTerm> terms = {
      {{{1}}, 2.0}, {{{39}}, 2.0}, {{{5}}, 1.0}, {{{35}}, 1.0}};
  const GroupFunction f = GroupFunction::FromTerms(z40, terms);
  const ValueProfile prof = ValueProfileOf(f);
  auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };
  ctx.Check("z40_nu_profile",
            near(prof.nu(1), 6.0, 1e-9) && near(prof.nu(2), 5.364, 1e-3) &&
                near(prof.nu(3), 5.364, 1e-3) && near(prof.nu(4), 3.804, 1e-3) &&
                near(prof.nu(5), 3.804, 1e-3));
  const BoundReport multi = BoundMulti(f, {7, 4});
  ctx.Check("z40_multi_7_4", near(*multi.bound, 4.214, 1e-3),
            Json{{"bound", Num(*multi.bound)}});
  const UniformBound uni = BoundUniform(f, 5);
  ctx.Check("z40_weak_5", near(*uni.weak.bound, 4.026, 1e-3),
            Json{{"bound", Num(*uni.weak.bound)}});
  const SelectMResult sel = SelectM(f);
  ctx.Check("z40_select_m", near(sel.kappa, std::sqrt(20.0), 1e-12) && sel.m_star == 5,
            Json{{"kappa", Num(sel.kappa)}, {"m_star", sel.m_star}});
  const BestBoundResult best = BestBoundSearch(f);
  ctx.Check("z40_best_multi", best.multi && best.multi->m == std::vector<std::int64_t>{7, 4},
            Json{{"bound", OptNum(best.multi ? best.multi->bound : std::nullopt)}});

  const auto g17 = FiniteAbelianGroup::Make({17, 17});
  auto idx = [&](std::int64_t a, std::int64_t b) { return g17.IndexOf({{a, b}}); };
  const SymmetricSet a = MakeSymmetricSet(
      g17, {idx(1, 0), idx(16, 0), idx(9, 9), idx(8, 8)});
  const SymmetricSet b = MakeSymmetricSet(g17, {idx(2, 0), idx(15, 0)});
  const SumsetCertificate c = SumsetLowerBound(a, b, 5);
  ctx.Check("sumset_example",
            c.mu2 && near(*c.mu2, 5.71, 0.01) && c.lower_ceiling == 7 &&
                c.sumset_size == 8 && near(c.condition_value, 8.17, 0.01),
            Json{{"mu2", OptNum(c.mu2)}, {"sumset_size", c.sumset_size}});

  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (std::int64_t n : {12, 30}) {
    const auto g = FiniteAbelianGroup::Make({n});
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = {normal(rng), normal(rng)};
    const GroupFunction h(g, v);
    const Spectrum s = FourierTransform(h);
    double rhs = 0.0;
    for (const auto& x : s.coefficients()) rhs += std::norm(x);
    const double lhs = InnerProduct(h.values(), h.values()).real();
    worst = std::max(worst, std::abs(lhs - rhs) / lhs);
  }
  ctx.Check("parseval_random", worst <= 1e-10, Json{{"relative_error", Num(worst)}});
  out["checks_run"] = ctx.checks.size();
  return out;
}

const Json* Lookup(const Json& root, const std::string& path) {
  const Json* node = &root;
  std::size_t start = 0;
  while (start <= path.size()) {
    const std::size_t dot = path.find('.', start);
    const std::string key =
        path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (node->is_object()) {
      const auto it = node->find(key);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else if (node->is_array()) {
      char* end = nullptr;
      const long i = std::strtol(key.c_str(), &end, 10);
      if (end == key.c_str() || *end != '\0' || i < 0 ||
          static_cast<std::size_t>(i) >= node->size()) {
        return nullptr;
      }
      node = &(*node)[static_cast<std::size_t>(i)];
    } else {
      return nullptr;
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return node;
}

std::optional<double> AsNumber(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_boolean()) return v.get<bool>() ? 1.0 : 0.0;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  return std::nullopt;
}

Json ErrorJson(const std::string& stage, ErrorCode code, const std::string& msg) {
  return Json{{"stage", stage}, {"code", std::string(ErrorName(code))}, {"message", msg}};
}

}  // namespace

RunOutcome RunProblem(const std::string& text, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  std::optional<Problem> problem;
  try {
    problem = ParseProblem(text);
  } catch (const Error& e) {
    outcome.exit_code = kExitInput;
    outcome.diagnostics = e.what();
    Json r{{"status", "error"}, {"error", ErrorJson("parse", e.code(), e.what())}};
    outcome.report = r.dump(2) + "\n";
    return outcome;
  }

  Context ctx{*problem, false, kDefaultSupportTolerance, std::nullopt, std::nullopt, {}, Json::array(), false};
  ctx.oracle = options.oracle || problem->oracle;
  ctx.tau = options.tol.value_or(problem->tol.value_or(kDefaultSupportTolerance));
  ctx.tol_distinct = options.tol_distinct ? options.tol_distinct : problem->tol_distinct;
  ctx.m = options.m ? options.m : problem->m;
  ctx.eps = options.eps ? *options.eps : problem->eps;

  Json report;
  report["task"] = problem->task;
  report["status"] = "ok";
  try {
    Json results;
    const std::string& task = problem->task;
    if (task == "fourier") {
      results = RunFourier(ctx);
    } else if (task == "values") {
      results = RunValues(ctx);
    } else if (task == "nu2-bound") {
      results = RunNu2Bound(ctx);
    } else if (task == "cayley-check") {
      results = RunCayley(ctx);
    } else if (task == "walk") {
      results = RunWalk(ctx);
    } else if (task == "sumset") {
      results = RunSumset(ctx);
    } else {
      results = RunSelftest(ctx);
    }
    report["results"] = std::move(results);
  } catch (const Error& e) {
    outcome.exit_code = kExitComputation;
    outcome.diagnostics = std::string(problem->task) + ": " + e.what();
    report["status"] = "error";
    report["error"] = ErrorJson("run", e.code(), e.what());
  } catch (const std::exception& e) {
    outcome.exit_code = kExitComputation;
    outcome.diagnostics = std::string(problem->task) + ": " + e.what();
    report["status"] = "error";
    report["error"] = ErrorJson("run", ErrorCode::kInternal, e.what());
  }
  report["checks"] = ctx.checks;

  if (outcome.exit_code == kExitOk && !problem->expect.empty()) {
    Json expect = Json::array();
    for (const auto& [path, want] : problem->expect) {
      const Json* node = Lookup(report, path);
      const std::optional<double> got = node ? AsNumber(*node) : std::nullopt;
      const double actual = got.value_or(std::numeric_limits<double>::quiet_NaN());
      const bool ok = got && (actual == want ||
                              std::abs(actual - want) <=
                                  problem->expect_tol * std::max(1.0, std::abs(want)));
      expect.push_back(Json{{"path", path},
                            {"expected", Num(want)},
                            {"actual", got ? Num(actual) : Json(nullptr)},
                            {"passed", ok}});
      if (!ok) ctx.failed = true;
    }
    report["expect"] = std::move(expect);
  }
  if (outcome.exit_code == kExitOk && ctx.failed) {
    outcome.exit_code = kExitOracle;
    report["status"] = "oracle_violation";
    outcome.diagnostics = problem->task + ": oracle or expectation check failed";
  }

  report["provenance"] = Json{{"version", kProblemVersion},
                              {"support_tolerance", Num(ctx.tau)},
                              {"tol_distinct", OptNum(ctx.tol_distinct)},
                              {"oracle", ctx.oracle},
                              {"number_format", "12 significant digits"}};
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  report["timing"] = Json{{"elapsed_ms", Num(ms)}};
  outcome.report = report.dump(2) + "\n";
  return outcome;
}

}  // namespace abelspec
