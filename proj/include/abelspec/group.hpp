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

#ifndef ABELSPEC_GROUP_HPP_
#define ABELSPEC_GROUP_HPP_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace abelspec {

// Position of an element in the mixed-radix enumeration of a group.
using ElementIndex = std::int64_t;

// Residue vector of a group element. The same type is used for character
// exponent vectors, since the dual of Z/n1 x ... x Z/nk is carried by the same
// moduli (chi_a(x) = exp(2 pi i sum_j a_j x_j / n_j)).
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Z/n1 x ... x Z/nk with n_j >= 2. Multiplicative notation for characters is
// realized additively throughout: identity is the zero vector, inverse is
// negation, and "x^2 = 1" reads 2x = 0.
//
// Elements are enumerated in mixed radix with the first coordinate most
// significant, so (1,0,2) in Z/2 x Z/2 x Z/3 has index 1*6 + 0*3 + 2 = 8.
// Instances are immutable and cheap to copy.
class FiniteAbelianGroup {
 public:
  static constexpr std::int64_t kDefaultOrderCap = 1'000'000;

  static FiniteAbelianGroup Make(std::vector<std::int64_t> moduli,
                                 std::int64_t order_cap = kDefaultOrderCap);

  std::span<const std::int64_t> moduli() const { return impl_->moduli; }
  std::size_t rank() const { return impl_->moduli.size(); }
  std::int64_t order() const { return impl_->order; }
  // lcm of the moduli; every character takes values in the exponent()-th
  // roots of unity.
  std::int64_t exponent() const { return impl_->exponent; }

  bool Contains(const GroupElement& x) const;
  ElementIndex IndexOf(const GroupElement& x) const;  // throws if not in group
  GroupElement ElementAt(ElementIndex i) const;
  void CheckIndex(ElementIndex i) const;

  ElementIndex Add(ElementIndex x, ElementIndex y) const;
  ElementIndex Negate(ElementIndex x) const;
  ElementIndex Subtract(ElementIndex x, ElementIndex y) const;
  ElementIndex Multiple(ElementIndex x, std::int64_t k) const;
  bool IsInvolution(ElementIndex x) const;
  std::int64_t ElementOrder(ElementIndex x) const;

  // Integer phase p in [0, exponent()) with chi_a(x) = exp(2 pi i p / exponent()).
  std::int64_t Phase(ElementIndex a, ElementIndex x) const;

  // Residues scaled by exponent()/n_j, laid out index-major (order() * rank()).
  // Phase(a, x) = sum_j a_j * scaled_j(x) mod exponent().
  std::vector<std::int64_t> ScaledResidueTable() const;

  std::string ToString() const;

  friend bool operator==(const FiniteAbelianGroup& a,
                         const FiniteAbelianGroup& b) {
    return a.impl_ == b.impl_ || a.impl_->moduli == b.impl_->moduli;
  }

 private:
  struct Impl {
    std::vector<std::int64_t> moduli;
    std::vector<std::int64_t> strides;
    std::int64_t order = 1;
    std::int64_t exponent = 1;
  };
  explicit FiniteAbelianGroup(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// A subgroup stored by full enumeration, with a membership table over the
// parent. Elements are sorted by index.
class Subgroup {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t order() const {
    return static_cast<std::int64_t>(elements_.size());
  }
  const std::vector<ElementIndex>& elements() const { return elements_; }
  const std::vector<ElementIndex>& generators() const { return generators_; }
  // Greedy generating set: each entry is the smallest element not in the span
  // of the previous ones.
  const std::vector<ElementIndex>& reduced_generators() const {
    return reduced_;
  }
  bool Contains(ElementIndex x) const;
  bool IsSubsetOf(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  friend Subgroup SpanIndices(const FiniteAbelianGroup&,
                              std::span<const ElementIndex>);
  friend Subgroup Annihilator(const Subgroup&);
  friend Subgroup WholeGroup(const FiniteAbelianGroup&);
  Subgroup(FiniteAbelianGroup group, std::vector<ElementIndex> generators,
           std::vector<ElementIndex> elements);

  FiniteAbelianGroup group_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> elements_;
  std::vector<ElementIndex> reduced_;
  std::vector<bool> member_;
};

// Smallest subgroup containing gens (breadth-first closure). Span of the empty
// set is the trivial subgroup.
Subgroup Span(const FiniteAbelianGroup& group,
              std::span<const GroupElement> gens);
Subgroup SpanIndices(const FiniteAbelianGroup& group,
                     std::span<const ElementIndex> gens);
inline Subgroup Span(const FiniteAbelianGroup& group,
                     std::initializer_list<GroupElement> gens) {
  return Span(group, std::span<const GroupElement>(gens.begin(), gens.size()));
}
inline Subgroup SpanIndices(const FiniteAbelianGroup& group,
                            std::initializer_list<ElementIndex> gens) {
  return SpanIndices(group, std::span<const ElementIndex>(gens.begin(), gens.size()));
}
Subgroup WholeGroup(const FiniteAbelianGroup& group);

// H-perp: the characters (exponent vectors on the same carrier) that are
// trivial on H. |H| * |H-perp| = |G| and (H-perp)-perp = H.
Subgroup Annihilator(const Subgroup& h);

// G/H with the minimal element index of each coset as its representative.
class QuotientGroup {
 public:
  explicit QuotientGroup(Subgroup h);

  const FiniteAbelianGroup& parent() const { return h_.group(); }
  const Subgroup& subgroup() const { return h_; }
  std::int64_t num_cosets() const {
    return static_cast<std::int64_t>(representatives_.size());
  }
  std::int64_t Project(ElementIndex x) const;
  ElementIndex Representative(std::int64_t coset) const;
  const std::vector<ElementIndex>& representatives() const {
    return representatives_;
  }
  std::int64_t AddCosets(std::int64_t a, std::int64_t b) const;

 private:
  Subgroup h_;
  std::vector<std::int64_t> projection_;
  std::vector<ElementIndex> representatives_;
};

inline QuotientGroup Quotient(const Subgroup& h) { return QuotientGroup(h); }

}  // namespace abelspec

#endif  // ABELSPEC_GROUP_HPP_
