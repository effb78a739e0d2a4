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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surfkernel/free_word.hpp"

namespace surfkernel {

enum class GenKind : std::uint8_t { kA, kB, kX };

/// A canonical generator of the orbifold group: a_i, b_i (hyperbolic) or
/// x_j (elliptic), indices 1-based.
///
/// Symbols are ordered as the alphabet a1, b1, a2, b2, ..., x1, ..., xr.
struct GenSymbol {
  GenKind kind = GenKind::kA;
  std::uint32_t index = 1;

  static constexpr GenSymbol a(std::uint32_t i) { return {GenKind::kA, i}; }
  static constexpr GenSymbol b(std::uint32_t i) { return {GenKind::kB, i}; }
  static constexpr GenSymbol x(std::uint32_t j) { return {GenKind::kX, j}; }

  bool is_hyperbolic() const noexcept { return kind != GenKind::kX; }

  friend constexpr bool operator==(GenSymbol, GenSymbol) = default;
  friend constexpr std::strong_ordering operator<=>(GenSymbol l, GenSymbol r) {
    bool const lx = l.kind == GenKind::kX;
    bool const rx = r.kind == GenKind::kX;
    if (lx != rx) {
      return lx <=> rx;
    }
    if (l.index != r.index) {
      return l.index <=> r.index;
    }
    return l.kind <=> r.kind;
  }
};

using Word = FreeWord<GenSymbol>;
using WordLetter = Letter<GenSymbol>;

/// Signature (g0; m_1, ..., m_r) of the quotient orbifold.
class OrbifoldSignature {
 public:
  OrbifoldSignature() = default;
  /// Errors: kInvalidSignature if some period is < 2.
  OrbifoldSignature(std::uint32_t genus, std::vector<std::uint32_t> periods);

  std::uint32_t genus() const noexcept { return genus_; }
  std::vector<std::uint32_t> const& periods() const noexcept { return periods_; }
  std::uint32_t r() const noexcept {
    return static_cast<std::uint32_t>(periods_.size());
  }
  /// Period of x_j (1-based).
  std::uint32_t period(std::uint32_t j) const { return periods_.at(j - 1); }

  /// a1, b1, ..., a_g0, b_g0, x1, ..., xr: 2 g0 + r symbols.
  std::vector<GenSymbol> alphabet() const;
  bool contains(GenSymbol s) const noexcept;
  /// Position of s in alphabet().
  std::size_t rank(GenSymbol s) const;

  friend bool operator==(OrbifoldSignature const&,
                         OrbifoldSignature const&) = default;

 private:
  std::uint32_t genus_ = 0;
  std::vector<std::uint32_t> periods_;
};

std::string to_string(OrbifoldSignature const& sig);

/// An endomorphism of the free group on a signature's alphabet, given by the
/// images of the generators. Unset generators map to themselves.
class Substitution {
 public:
  static Substitution identity(OrbifoldSignature const& sig);

  /// Errors: kDomain if s is outside the signature's alphabet.
  void set(GenSymbol s, Word image);
  Word const& image(GenSymbol s) const;

  std::map<GenSymbol, Word> const& images() const noexcept { return images_; }

 private:
  std::map<GenSymbol, Word> images_;
};

/// Image of w under s, freely reduced. Errors: kDomain.
Word apply_substitution(Word const& w, Substitution const& s);

/// (prod_i [a_i, b_i]) x_1 ... x_r with [v, w] = v w v^-1 w^-1.
Word long_relation(OrbifoldSignature const& sig);

/// [v, w] = v w v^-1 w^-1, reduced.
Word commutator(Word const& v, Word const& w);

/// Word syntax: whitespace-separated tokens `a1`, `b2`, `x3`, each optionally
/// followed by `^-1` (or `^1`); "1" or an empty string is the empty word.
/// Errors: kParse.
Word parse_word(std::string_view text);

std::string to_string(GenSymbol s);
/// Inverse of parse_word; the empty word prints as "1".
std::string to_string(Word const& w);

/// Parses a single symbol token such as "a1" or "x12". Errors: kParse.
GenSymbol parse_symbol(std::string_view token);

}  // namespace surfkernel
