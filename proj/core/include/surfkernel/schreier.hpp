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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surfkernel/error.hpp"
#include "surfkernel/group.hpp"
#include "surfkernel/kernel_map.hpp"
#include "surfkernel/presentation.hpp"

namespace surfkernel {

/// Right coset representatives of the kernel, one word per group element
/// (cosets are identified with their images in G).
class SchreierTransversal {
 public:
  Word const& rep(GroupElement g) const { return reps_.at(g.index); }
  std::vector<Word> const& representatives() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }

 private:
  explicit SchreierTransversal(std::vector<Word> reps) : reps_(std::move(reps)) {}

  friend SchreierTransversal minimal_transversal(FiniteGroup const&,
                                                 GeneratingVector const&,
                                                 OrbifoldSignature const&);
  friend SchreierTransversal transversal_from(FiniteGroup const&,
                                              GeneratingVector const&,
                                              OrbifoldSignature const&,
                                              std::vector<Word>);

  std::vector<Word> reps_;
};

/// Breadth-first search from the identity, extending by right
/// multiplication with a1, b1, ..., x_r and then their inverses, queue FIFO;
/// the first word reaching a coset is its representative.
/// Errors: kUnreachableCoset if phi is not onto.
SchreierTransversal minimal_transversal(FiniteGroup const& grp,
                                        GeneratingVector const& phi,
                                        OrbifoldSignature const& sig);

/// Checks a user-supplied transversal (reps[i] represents element i): each
/// word must evaluate to its element, the set must be prefix closed and each
/// word must have minimal length. Errors: kInvalidTransversal.
SchreierTransversal transversal_from(FiniteGroup const& grp,
                                     GeneratingVector const& phi,
                                     OrbifoldSignature const& sig,
                                     std::vector<Word> reps);

/// Distance of each element from the identity in the coset graph whose
/// edges are right multiplication by the images of the generators and their
/// inverses.
std::vector<std::size_t> coset_distances(FiniteGroup const& grp,
                                         GeneratingVector const& phi,
                                         OrbifoldSignature const& sig);

/// Schreier generator S_{K,v} = K v (rep of Kv)^-1, K a coset.
struct KernelGen {
  GroupElement coset;
  GenSymbol symbol;

  friend auto operator<=>(KernelGen const&, KernelGen const&) = default;
};

using KernelWord = FreeWord<KernelGen>;
using KernelLetter = Letter<KernelGen>;

/// The rewriting process: letter d^+1 read at coset P contributes
/// S_{P,d}, letter d^-1 contributes S_{P phi(d)^-1, d}^-1.
/// Errors: kNotInKernel if w does not evaluate to the identity.
KernelWord rewrite_tau(Word const& w, SchreierTransversal const& t,
                       FiniteGroup const& grp, GeneratingVector const& phi);

/// S_{K,v} as a word in the orbifold generators.
Word expand(KernelGen s, SchreierTransversal const& t, FiniteGroup const& grp,
            GeneratingVector const& phi);
Word expand(KernelWord const& w, SchreierTransversal const& t,
            FiniteGroup const& grp, GeneratingVector const& phi);

/// True iff expand(s) freely reduces to the empty word.
bool is_freely_trivial(KernelGen s, SchreierTransversal const& t,
                       FiniteGroup const& grp, GeneratingVector const& phi);

/// w with all freely trivial generators deleted.
KernelWord drop_trivial(KernelWord const& w, SchreierTransversal const& t,
                        FiniteGroup const& grp, GeneratingVector const& phi);

enum class RelationKind : std::uint8_t { kLong, kElliptic, kTrivialGenerator };

std::string_view to_string(RelationKind kind) noexcept;

struct KernelRelation {
  RelationKind kind = RelationKind::kLong;
  KernelWord word;

  friend bool operator==(KernelRelation const&, KernelRelation const&) = default;
};

/// `generator` was replaced by `value` during simplification.
struct Elimination {
  KernelGen generator;
  KernelWord value;

  friend bool operator==(Elimination const&, Elimination const&) = default;
};

struct KernelPresentation {
  /// Live generators in (coset, symbol) order.
  std::vector<KernelGen> generators;
  std::vector<KernelRelation> relations;
  /// Elimination log in the order the eliminations happened.
  std::vector<Elimination> eliminated;
  std::uint64_t genus_expected = 0;

  friend bool operator==(KernelPresentation const&,
                         KernelPresentation const&) = default;
};

/// Presentation of the kernel with all n(2 g0 + r) generators S_{K,v} and the
/// relations: tau(K R K^-1) per coset K (R the long relation), one
/// tau(K x_j^m_j K^-1) per cycle of right multiplication by xi_j on cosets
/// (based at the cycle's least element index), and S_{K,v} = 1 for each
/// freely trivial generator.
KernelPresentation raw_presentation(OrbifoldSignature const& sig,
                                    FiniteGroup const& grp,
                                    GeneratingVector const& phi,
                                    SchreierTransversal const& t);

/// Thrown by simplify when it stalls before reaching the surface shape.
class SimplificationIncomplete : public Error {
 public:
  SimplificationIncomplete(std::string const& what, KernelPresentation partial)
      : Error(ErrorCode::kSimplificationIncomplete, what),
        partial_(std::move(partial)) {}

  KernelPresentation const& partial() const noexcept { return partial_; }

 private:
  KernelPresentation partial_;
};

/// Tietze simplification. First every freely trivial generator is deleted.
/// Then, repeatedly, among relations containing a generator exactly once the
/// shortest is chosen (ties: the least such generator in (coset, symbol)
/// order), solved for that generator, removed, and the solution substituted
/// into all other relations, which are kept cyclically reduced; empty
/// relations are dropped.
///
/// The result must have 2g live generators and a single relation using each
/// of them once with each sign (or, for g = 0, no generators and no
/// relations). Errors: SimplificationIncomplete carrying the partial result.
KernelPresentation simplify(KernelPresentation const& p);

/// Rewrites words over all Schreier generators into live generators by
/// replaying an elimination log (memoised).
class LiveRewriter {
 public:
  explicit LiveRewriter(KernelPresentation const& p);

  KernelWord rewrite(KernelGen s) const;
  KernelWord rewrite(KernelWord const& w) const;

 private:
  std::map<KernelGen, KernelWord> values_;
  mutable std::map<KernelGen, KernelWord> memo_;
};

/// True iff p has one relation in which every generator occurs once with
/// each sign and every generator is linked with some partner, i.e. the
/// chords joining u to u^-1 and v to v^-1 cross.
/// Errors: kShape unless p has exactly one non-empty relation.
bool linkedness_check(KernelPresentation const& p);

struct PresentationCounts {
  std::uint64_t generators = 0;
  std::uint64_t relations = 0;

  friend bool operator==(PresentationCounts, PresentationCounts) = default;
};

/// (2 n g0 + n r, 1 + sum_j n / m_j). Errors: kInvalidPeriod if some m_j
/// does not divide n.
PresentationCounts count_check(OrbifoldSignature const& sig,
                               FiniteGroup const& grp);

/// Counts of a raw presentation comparable with count_check: (generators,
/// long - trivial-generator + elliptic relations).
PresentationCounts raw_counts(KernelPresentation const& p);

/// "S[<coset-name>,<symbol>]".
std::string to_string(KernelGen s, FiniteGroup const& grp);
/// Space-separated generators with "^-1" for inverses; "1" when empty.
std::string to_string(KernelWord const& w, FiniteGroup const& grp);

/// Line-oriented dump:
///   genus <g>
///   generators <N>
///   S[K,v]                      (N lines)
///   relations <M>
///   <kind>: <word>              (M lines, kind long|elliptic|trivial)
///   eliminated <E>
///   S[K,v] = <word>             (E lines)
std::string dump(KernelPresentation const& p, FiniteGroup const& grp);

/// Inverse of dump. Errors: kParse.
KernelPresentation parse_dump(std::string_view text, FiniteGroup const& grp);

}  // namespace surfkernel
