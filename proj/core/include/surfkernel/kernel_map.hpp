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
#include <cstdint>
#include <string>
#include <vector>

#include "surfkernel/group.hpp"
#include "surfkernel/presentation.hpp"

namespace surfkernel {

/// Images (A_1..A_g0, B_1..B_g0, xi_1..xi_r) of the canonical generators
/// under a homomorphism from the orbifold group onto a finite group.
struct GeneratingVector {
  std::vector<GroupElement> a;
  std::vector<GroupElement> b;
  std::vector<GroupElement> xi;

  /// Errors: kDomain if s has no image in this vector.
  GroupElement image(GenSymbol s) const;
  GroupElement& image(GenSymbol s);

  friend auto operator<=>(GeneratingVector const&,
                          GeneratingVector const&) = default;
};

/// Image of w in G. Errors: kDomain if w uses a symbol without an image.
GroupElement evaluate(GeneratingVector const& phi, Word const& w,
                      FiniteGroup const& grp);

struct ValidationReport {
  bool long_relation_ok = false;
  /// period_orders_ok[j-1]: order of xi_j equals m_j.
  std::vector<bool> period_orders_ok;
  bool surjective = false;

  bool valid() const;
  /// One line per failed condition; empty when valid.
  std::vector<std::string> failures() const;
};

/// Errors: kShape if the vector lengths do not match (g0, g0, r).
ValidationReport validate(OrbifoldSignature const& sig, FiniteGroup const& grp,
                          GeneratingVector const& phi);

/// Genus g of the kernel surface from 2g - 2 = n(2 g0 - 2) +
/// n sum_j (1 - 1/m_j). Errors: kGenusInconsistent if g is not a nonnegative
/// integer.
std::uint64_t kernel_genus(OrbifoldSignature const& sig, std::uint64_t n);

/// "(A1,B1,...; xi1,...)" using element names.
std::string to_string(GeneratingVector const& phi, FiniteGroup const& grp);

}  // namespace surfkernel
