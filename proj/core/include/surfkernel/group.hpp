/*
 * Copyright (c) 2026, The surfkernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surfkernel {

/// Opaque handle of an element of a FiniteGroup. Index 0 is always the
/// identity.
struct GroupElement {
  std::uint32_t index = 0;

  static constexpr GroupElement identity() noexcept { return {0}; }
  constexpr bool is_identity() const noexcept { return index == 0; }

  friend constexpr auto operator<=>(GroupElement, GroupElement) = default;
};

/// A permutation of {0, .., degree-1} in one-line form: p[k] is the image of
/// point k.
using Permutation = std::vector<std::uint8_t>;

/// A finite group stored as its full multiplication table.
///
/// mul(g, h) is the product "g then h" in the written order, i.e. row g,
/// column h of the table. Instances are immutable once built and every
/// constructor validates the group axioms exhaustively.
class FiniteGroup {
 public:
  /// Largest order accepted by the constructors (the table is n*n entries).
  static constexpr std::size_t kMaxOrder = 4096;

  /// Validates `table` and builds the group. Element i is named `names[i]`
  /// when names are given, otherwise by its decimal index.
  ///
  /// Errors: kInvalidTable (not square / entry out of range), kCapacity,
  /// kNoIdentity (row/column 0 is not the identity), kNotInvertible,
  /// kNonAssociative.
  static FiniteGroup from_table(
      std::vector<std::vector<std::uint32_t>> const& table,
      std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }

  GroupElement mul(GroupElement g, GroupElement h) const noexcept {
    return {table_[static_cast<std::size_t>(g.index) * order_ + h.index]};
  }
  GroupElement inverse(GroupElement g) const noexcept {
    return {inverse_[g.index]};
  }
  std::uint32_t element_order(GroupElement g) const noexcept {
    return element_order_[g.index];
  }
  /// g^k for any integer k (negative powers use the inverse).
  GroupElement power(GroupElement g, std::int64_t k) const noexcept;
  /// [g, h] = g h g^-1 h^-1.
  GroupElement commutator(GroupElement g, GroupElement h) const noexcept;
  GroupElement conjugate(GroupElement by, GroupElement g) const noexcept;

  bool is_abelian() const noexcept { return abelian_; }

  std::vector<GroupElement> elements() const;

  /// Subgroup generated by `gens`, as a membership mask indexed by element.
  std::vector<bool> generated_subgroup(std::span<const GroupElement> gens) const;

  std::string const& name(GroupElement g) const { return names_[g.index]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  /// Same group with new element labels (one per element, distinct, without
  /// whitespace or square brackets). Errors: kShape.
  FiniteGroup with_names(std::vector<std::string> names) const;

  /// Resolves an element label: an exact name, or, for symmetric groups,
  /// any cycle notation such as "(1,2)(3,4)", "(1 2 3)", "()" or "id".
  std::optional<GroupElement> find(std::string_view label) const;

  /// One-line permutation of an element; only for groups from
  /// make_symmetric.
  std::optional<Permutation> permutation(GroupElement g) const;

  bool operator==(FiniteGroup const& other) const noexcept {
    return table_ == other.table_;
  }

 private:
  friend FiniteGroup make_symmetric(std::size_t degree);

  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<std::string> names_;
  std::vector<Permutation> permutations_;
  bool abelian_ = true;
};

/// Z_n with element i*j = (i + j) mod n. Errors: kInvalidOrder for n = 0,
/// kCapacity above kMaxOrder.
FiniteGroup make_cyclic(std::size_t n);

/// The symmetric group on {1, .., degree}.
///
/// Products compose right to left: (p q)(k) = p(q(k)). Elements are
/// enumerated breadth-first through the Cayley graph whose generators are all
/// transpositions (i, j), i < j, ordered by (j - i, i), each applied by right
/// multiplication. For degree 3 this yields
///   0 = (), 1 = (1,2), 2 = (2,3), 3 = (1,3), 4 = (1,2,3), 5 = (1,3,2).
/// Elements are named by canonical cycle notation, each cycle starting at its
/// smallest point, cycles sorted by first point, "()" for the identity.
///
/// Errors: kInvalidOrder for degree 0, kCapacity when degree! > kMaxOrder.
FiniteGroup make_symmetric(std::size_t degree);

/// True iff g is a power of h.
bool in_cyclic_span(GroupElement g, GroupElement h, FiniteGroup const& grp);

/// Canonical cycle notation of a one-line permutation (points are 1-based in
/// the output).
std::string cycle_notation(Permutation const& p);

/// Parses cycle notation over {1, .., degree}; std::nullopt if malformed.
std::optional<Permutation> parse_cycles(std::string_view text,
                                        std::size_t degree);

}  // namespace surfkernel
