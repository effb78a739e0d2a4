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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace surfkernel {

/// One signed letter s^exponent of a free-group word, exponent in {+1, -1}.
template <class Symbol>
struct Letter {
  Symbol symbol{};
  int exponent = 1;

  Letter inverse() const { return {symbol, -exponent}; }
  bool cancels(Letter const& other) const {
    return symbol == other.symbol && exponent == -other.exponent;
  }

  friend auto operator<=>(Letter const&, Letter const&) = default;
};

/// Element of the free group on `Symbol`, stored as a flat, always freely
/// reduced letter sequence.
template <class Symbol>
class FreeWord {
 public:
  using letter_type = Letter<Symbol>;

  FreeWord() = default;
  FreeWord(std::initializer_list<letter_type> letters) {
    for (auto const& l : letters) {
      push_back(l);
    }
  }
  explicit FreeWord(std::span<const letter_type> letters) {
    for (auto const& l : letters) {
      push_back(l);
    }
  }

  static FreeWord generator(Symbol s, int exponent = 1) {
    FreeWord w;
    w.letters_.push_back({s, exponent});
    return w;
  }

  /// Appends one letter, cancelling it against the last letter if possible.
  void push_back(letter_type l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  void append(FreeWord const& w) {
    for (auto const& l : w.letters_) {
      push_back(l);
    }
  }

  FreeWord inverse() const {
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.letters_.push_back(it->inverse());
    }
    return out;
  }

  friend FreeWord operator*(FreeWord lhs, FreeWord const& rhs) {
    lhs.append(rhs);
    return lhs;
  }

  /// Strips matching inverse letters from both ends; the result is a
  /// conjugate of this word.
  FreeWord cyclically_reduced() const {
    std::size_t lo = 0;
    std::size_t hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
      ++lo;
      --hi;
    }
    FreeWord out;
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                        letters_.begin() + static_cast<std::ptrdiff_t>(hi));
    return out;
  }

  /// Cyclic rotation starting at letter `start`; the result is freely
  /// reduced only when this word is cyclically reduced.
  FreeWord rotated(std::size_t start) const {
    FreeWord out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      out.push_back(letters_[(start + i) % letters_.size()]);
    }
    return out;
  }

  std::size_t occurrences(Symbol const& s) const {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(),
        [&](letter_type const& l) { return l.symbol == s; }));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  letter_type const& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::vector<letter_type> const& letters() const noexcept { return letters_; }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;
  friend auto operator<=>(FreeWord const& a, FreeWord const& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<letter_type> letters_;
};

template <class Symbol>
FreeWord<Symbol> free_reduce(std::span<const Letter<Symbol>> letters) {
  return FreeWord<Symbol>(letters);
}

/// True iff u and v are conjugate in the free group.
template <class Symbol>
bool are_conjugate(FreeWord<Symbol> const& u, FreeWord<Symbol> const& v) {
  FreeWord<Symbol> const cu = u.cyclically_reduced();
  FreeWord<Symbol> const cv = v.cyclically_reduced();
  if (cu.size() != cv.size()) {
    return false;
  }
  if (cu.empty()) {
    return true;
  }
  for (std::size_t shift = 0; shift < cu.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < cu.size() && match; ++i) {
      match = cu[(shift + i) % cu.size()] == cv[i];
    }
    if (match) {
      return true;
    }
  }
  return false;
}

}  // namespace surfkernel
