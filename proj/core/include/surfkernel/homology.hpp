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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfkernel/group.hpp"
#include "surfkernel/kernel_map.hpp"
#include "surfkernel/presentation.hpp"
#include "surfkernel/schreier.hpp"

namespace surfkernel {

/// Dense square integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  std::int64_t at(std::size_t row, std::size_t col) const {
    return data_[row * n_ + col];
  }
  std::vector<std::int64_t> column(std::size_t col) const;

  friend IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Live generators of a simplified presentation ordered by (symbol, coset):
/// hyperbolic lifts first, then the elliptic ones.
struct HomologyBasis {
  std::vector<KernelGen> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(KernelGen s) const;
};

HomologyBasis homology_basis(KernelPresentation const& simplified);

/// matrices[g.index]: column k is the image of basis element k under g.
struct HomologyAction {
  HomologyBasis basis;
  std::vector<IntMatrix> matrices;

  IntMatrix const& matrix(GroupElement g) const { return matrices.at(g.index); }
};

/// Coset translation S_{U,v} -> S_{gU,v}.
KernelGen act_on_generator(GroupElement g, KernelGen s, FiniteGroup const& grp);

/// Image of basis element k under g: with X the representative of g and W
/// the orbifold word of the generator, tau(X W X^-1) rewritten into live
/// generators.
KernelWord act_on_basis(GroupElement g, std::size_t k,
                        KernelPresentation const& simplified,
                        SchreierTransversal const& t, FiniteGroup const& grp,
                        GeneratingVector const& phi);

/// Exponent sums of a word over basis generators. Errors: kShape if the word
/// uses a generator outside the basis.
std::vector<std::int64_t> abelianize(KernelWord const& w,
                                     HomologyBasis const& basis);

/// Integer matrices of the action on first homology for every element.
/// Errors: kShape if the presentation's relation does not abelianize to zero.
HomologyAction homology_matrices(KernelPresentation const& simplified,
                                 SchreierTransversal const& t,
                                 FiniteGroup const& grp,
                                 GeneratingVector const& phi);

/// True iff matrices[id] = I and matrices[g] matrices[h] = matrices[gh] for
/// all pairs. Since then matrices[g] matrices[g^-1] = I over the integers,
/// every determinant is +1 or -1.
bool check_representation(HomologyAction const& h, FiniteGroup const& grp);

enum class AdaptedCase : std::uint8_t {
  kFreeOrbit = 1,
  kCyclicSum = 2,
  kCyclicTranslate = 3,
  kStabilized = 4,
  kUnclassified = 0,
};

std::string to_string(AdaptedCase c);

struct AdaptedReport {
  bool adapted = false;
  /// Per basis element.
  std::vector<AdaptedCase> cases;
  /// First unclassified basis element, with the reason.
  std::optional<std::size_t> witness;
  std::string reason;
};

/// Classifies each basis element gamma:
///   1  every g(gamma) is a basis element and g(gamma) != gamma for g != 1
///   2  for some h of order m >= 2, gamma, h(gamma), ..., h^(m-2)(gamma) are
///      basis elements, h^(m-1)(gamma) = -(gamma + ... + h^(m-2)(gamma)), and
///      every coset of <h> has a representative g_h with g_h h^j(gamma)
///      basis elements for j <= m-2
///   3  gamma = +-g(gamma0) for a case 2 element gamma0
///   4  gamma has a nontrivial stabilizer (or G is trivial) and every
///      g(gamma) is + or - a basis element
AdaptedReport adapted_check(HomologyAction const& h, FiniteGroup const& grp);

struct BlockReport {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// For g0 >= 1: each matrix is block diagonal with a permutation matrix on
/// the 2 n g0 hyperbolic lifts (all of which must survive simplification),
/// zero off-diagonal blocks, and an elliptic block equal entrywise to the
/// matrices of the g0 = 0 computation with the same elliptic images.
/// Errors: kOrdering if a hyperbolic lift follows an elliptic one in the
/// basis; kDomain if g0 = 0.
BlockReport block_structure_check(HomologyAction const& h,
                                  OrbifoldSignature const& sig,
                                  FiniteGroup const& grp,
                                  GeneratingVector const& phi);

}  // namespace surfkernel
