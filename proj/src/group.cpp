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

#include "abelspec/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "abelspec/error.hpp"

namespace abelspec {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kEmptyModuli: return "EmptyModuli";
    case ErrorCode::kModulusTooSmall: return "ModulusTooSmall";
    case ErrorCode::kOrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::kElementNotInGroup: return "ElementNotInGroup";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kNegativeTolerance: return "NegativeTolerance";
    case ErrorCode::kNotConstantOnCosets: return "NotConstantOnCosets";
    case ErrorCode::kTransformCapExceeded: return "TransformCapExceeded";
    case ErrorCode::kNotRealValued: return "NotRealValued";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNegativeEntries: return "NegativeEntries";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kComplexCoefficients: return "ComplexCoefficients";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kRZero: return "RZero";
    case ErrorCode::kBadM: return "BadM";
    case ErrorCode::kMTooLarge: return "MTooLarge";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kAsymmetricWeight: return "AsymmetricWeight";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kNotProbability: return "NotProbability";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kIterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::kPeriodicChain: return "PeriodicChain";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kWeightNotSimplex: return "WeightNotSimplex";
    case ErrorCode::kNotSymmetricSet: return "NotSymmetricSet";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kConstantProduct: return "ConstantProduct";
    case ErrorCode::kMTooSmall: return "MTooSmall";
    case ErrorCode::kNoPrimeInRange: return "NoPrimeInRange";
    case ErrorCode::kConditionUnsatisfiable: return "ConditionUnsatisfiable";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kUnknownTask: return "UnknownTask";
    case ErrorCode::kUnknownField: return "UnknownField";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

FiniteAbelianGroup FiniteAbelianGroup::Make(std::vector<std::int64_t> moduli,
                                            std::int64_t order_cap) {
  if (moduli.empty()) Fail(ErrorCode::kEmptyModuli, "moduli list is empty");
  auto impl = std::make_shared<Impl>();
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] < 2) {
      Fail(ErrorCode::kModulusTooSmall,
           "modulus " + std::to_string(moduli[j]) + " at position " +
               std::to_string(j) + " is below 2");
    }
    if (impl->order > order_cap / moduli[j]) {
      Fail(ErrorCode::kOrderCapExceeded,
           "group order exceeds cap " + std::to_string(order_cap));
    }
    impl->order *= moduli[j];
    impl->exponent = std::lcm(impl->exponent, moduli[j]);
  }
  if (impl->order > order_cap) {
    Fail(ErrorCode::kOrderCapExceeded,
         "group order exceeds cap " + std::to_string(order_cap));
  }
  impl->strides.assign(moduli.size(), 1);
  for (std::size_t j = moduli.size() - 1; j > 0; --j) {
    impl->strides[j - 1] = impl->strides[j] * moduli[j];
  }
  impl->moduli = std::move(moduli);
  return FiniteAbelianGroup(std::move(impl));
}

bool FiniteAbelianGroup::Contains(const GroupElement& x) const {
  if (x.residues.size() != rank()) return false;
  for (std::size_t j = 0; j < rank(); ++j) {
    if (x.residues[j] < 0 || x.residues[j] >= impl_->moduli[j]) return false;
  }
  return true;
}

ElementIndex FiniteAbelianGroup::IndexOf(const GroupElement& x) const {
  if (!Contains(x)) {
    std::ostringstream os;
    os << "element (";
    for (std::size_t j = 0; j < x.residues.size(); ++j) {
      os << (j ? "," : "") << x.residues[j];
    }
    os << ") is not in " << ToString();
    Fail(ErrorCode::kElementNotInGroup, os.str());
  }
  ElementIndex index = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    index += x.residues[j] * impl_->strides[j];
  }
  return index;
}

void FiniteAbelianGroup::CheckIndex(ElementIndex i) const {
  if (i < 0 || i >= impl_->order) {
    Fail(ErrorCode::kElementNotInGroup,
         "index " + std::to_string(i) + " outside " + ToString());
  }
}

GroupElement FiniteAbelianGroup::ElementAt(ElementIndex i) const {
  CheckIndex(i);
  GroupElement x;
  x.residues.resize(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    x.residues[j] = (i / impl_->strides[j]) % impl_->moduli[j];
  }
  return x;
}

ElementIndex FiniteAbelianGroup::Add(ElementIndex x, ElementIndex y) const {
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t n = impl_->moduli[j];
    const std::int64_t s = impl_->strides[j];
    std::int64_t r = (x / s) % n + (y / s) % n;
    if (r >= n) r -= n;
    out += r * s;
  }
  return out;
}

ElementIndex FiniteAbelianGroup::Negate(ElementIndex x) const {
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t n = impl_->moduli[j];
    const std::int64_t s = impl_->strides[j];
    const std::int64_t r = (x / s) % n;
    out += (r == 0 ? 0 : n - r) * s;
  }
  return out;
}

ElementIndex FiniteAbelianGroup::Subtract(ElementIndex x,
                                          ElementIndex y) const {
  return Add(x, Negate(y));
}

ElementIndex FiniteAbelianGroup::Multiple(ElementIndex x,
                                          std::int64_t k) const {
  ElementIndex out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t n = impl_->moduli[j];
    const std::int64_t s = impl_->strides[j];
    const std::int64_t r = (x / s) % n;
    std::int64_t kr = ((k % n) * r) % n;
    if (kr < 0) kr += n;
    out += kr * s;
  }
  return out;
}

bool FiniteAbelianGroup::IsInvolution(ElementIndex x) const {
  return Add(x, x) == 0;
}

std::int64_t FiniteAbelianGroup::ElementOrder(ElementIndex x) const {
  std::int64_t ord = 1;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t n = impl_->moduli[j];
    const std::int64_t r = (x / impl_->strides[j]) % n;
    ord = std::lcm(ord, n / std::gcd(n, r));
  }
  return ord;
}

std::int64_t FiniteAbelianGroup::Phase(ElementIndex a, ElementIndex x) const {
  const std::int64_t l = impl_->exponent;
  std::int64_t phase = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t n = impl_->moduli[j];
    const std::int64_t s = impl_->strides[j];
    const std::int64_t aj = (a / s) % n;
    const std::int64_t xj = (x / s) % n;
    phase = (phase + ((aj * xj) % n) * (l / n)) % l;
  }
  return phase;
}

std::vector<std::int64_t> FiniteAbelianGroup::ScaledResidueTable() const {
  const std::size_t k = rank();
  std::vector<std::int64_t> table(static_cast<std::size_t>(order()) * k);
  for (ElementIndex i = 0; i < order(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t n = impl_->moduli[j];
      table[static_cast<std::size_t>(i) * k + j] =
          ((i / impl_->strides[j]) % n) * (impl_->exponent / n);
    }
  }
  return table;
}

std::string FiniteAbelianGroup::ToString() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < rank(); ++j) {
    os << (j ? " x " : "") << "Z/" << impl_->moduli[j];
  }
  return os.str();
}

Subgroup::Subgroup(FiniteAbelianGroup group,
                   std::vector<ElementIndex> generators,
                   std::vector<ElementIndex> elements)
    : group_(std::move(group)),
      generators_(std::move(generators)),
      elements_(std::move(elements)),
      member_(static_cast<std::size_t>(group_.order()), false) {
  std::sort(elements_.begin(), elements_.end());
  for (ElementIndex e : elements_) member_[static_cast<std::size_t>(e)] = true;

  // Greedy reduction: walk elements in index order and keep those outside
  // the running span.
  std::vector<bool> in_span(member_.size(), false);
  std::vector<ElementIndex> span_elems{0};
  in_span[0] = true;
  for (ElementIndex e : elements_) {
    if (in_span[static_cast<std::size_t>(e)]) continue;
    reduced_.push_back(e);
    const std::size_t base = span_elems.size();
    for (ElementIndex step = e; !in_span[static_cast<std::size_t>(step)];
         step = group_.Add(step, e)) {
      for (std::size_t i = 0; i < base; ++i) {
        const ElementIndex y = group_.Add(span_elems[i], step);
        in_span[static_cast<std::size_t>(y)] = true;
        span_elems.push_back(y);
      }
    }
  }
}

bool Subgroup::Contains(ElementIndex x) const {
  return x >= 0 && x < group_.order() && member_[static_cast<std::size_t>(x)];
}

bool Subgroup::IsSubsetOf(const Subgroup& other) const {
  if (!(group_ == other.group_)) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](ElementIndex e) { return other.Contains(e); });
}

Subgroup SpanIndices(const FiniteAbelianGroup& group,
                     std::span<const ElementIndex> gens) {
  std::vector<ElementIndex> unique_gens;
  for (ElementIndex g : gens) {
    group.CheckIndex(g);
    if (std::find(unique_gens.begin(), unique_gens.end(), g) ==
        unique_gens.end()) {
      unique_gens.push_back(g);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(group.order()), false);
  std::vector<ElementIndex> elements{0};
  seen[0] = true;
  std::deque<ElementIndex> queue{0};
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (ElementIndex g : unique_gens) {
      const ElementIndex y = group.Add(x, g);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        elements.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(group, std::move(unique_gens), std::move(elements));
}

Subgroup Span(const FiniteAbelianGroup& group,
              std::span<const GroupElement> gens) {
  std::vector<ElementIndex> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) idx.push_back(group.IndexOf(g));
  return SpanIndices(group, idx);
}

Subgroup WholeGroup(const FiniteAbelianGroup& group) {
  std::vector<ElementIndex> all(static_cast<std::size_t>(group.order()));
  std::iota(all.begin(), all.end(), ElementIndex{0});
  Subgroup h(group, {}, std::move(all));
  h.generators_ = h.reduced_;
  return h;
}

Subgroup Annihilator(const Subgroup& h) {
  const FiniteAbelianGroup& g = h.group();
  const auto& gens = h.reduced_generators();
  std::vector<ElementIndex> elements;
  for (ElementIndex a = 0; a < g.order(); ++a) {
    bool trivial = true;
    for (ElementIndex x : gens) {
      if (g.Phase(a, x) != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) elements.push_back(a);
  }
  Subgroup perp(g, {}, std::move(elements));
  perp.generators_ = perp.reduced_;
  return perp;
}

QuotientGroup::QuotientGroup(Subgroup h)
    : h_(std::move(h)),
      projection_(static_cast<std::size_t>(h_.group().order()), -1) {
  const FiniteAbelianGroup& g = h_.group();
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (projection_[static_cast<std::size_t>(x)] >= 0) continue;
    const auto coset = static_cast<std::int64_t>(representatives_.size());
    representatives_.push_back(x);
    for (ElementIndex e : h_.elements()) {
      projection_[static_cast<std::size_t>(g.Add(x, e))] = coset;
    }
  }
}

std::int64_t QuotientGroup::Project(ElementIndex x) const {
  parent().CheckIndex(x);
  return projection_[static_cast<std::size_t>(x)];
}

ElementIndex QuotientGroup::Representative(std::int64_t coset) const {
  if (coset < 0 || coset >= num_cosets()) {
    Fail(ErrorCode::kElementNotInGroup,
         "coset " + std::to_string(coset) + " out of range");
  }
  return representatives_[static_cast<std::size_t>(coset)];
}

std::int64_t QuotientGroup::AddCosets(std::int64_t a, std::int64_t b) const {
  return Project(parent().Add(Representative(a), Representative(b)));
}

}  // namespace abelspec
