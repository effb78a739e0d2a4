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
#include "surfkernel/presentation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "surfkernel/error.hpp"

namespace surfkernel {

OrbifoldSignature::OrbifoldSignature(std::uint32_t genus,
                                     std::vector<std::uint32_t> periods)
    : genus_(genus), periods_(std::move(periods)) {
  for (std::size_t j = 0; j < periods_.size(); ++j) {
    if (periods_[j] < 2) {
      throw Error(ErrorCode::kInvalidSignature,
                  "period m" + std::to_string(j + 1) + " = " +
                      std::to_string(periods_[j]) + " must be at least 2");
    }
  }
}

std::vector<GenSymbol> OrbifoldSignature::alphabet() const {
  std::vector<GenSymbol> out;
  out.reserve(2 * genus_ + periods_.size());
  for (std::uint32_t i = 1; i <= genus_; ++i) {
    out.push_back(GenSymbol::a(i));
    out.push_back(GenSymbol::b(i));
  }
  for (std::uint32_t j = 1; j <= r(); ++j) {
    out.push_back(GenSymbol::x(j));
  }
  return out;
}

bool OrbifoldSignature::contains(GenSymbol s) const noexcept {
  if (s.index == 0) {
    return false;
  }
  return s.kind == GenKind::kX ? s.index <= r() : s.index <= genus_;
}

std::size_t OrbifoldSignature::rank(GenSymbol s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::kDomain,
                "symbol " + to_string(s) + " not in signature " +
                    to_string(*this));
  }
  switch (s.kind) {
    case GenKind::kA:
      return 2 * (s.index - 1);
    case GenKind::kB:
      return 2 * (s.index - 1) + 1;
    case GenKind::kX:
      break;
  }
  return 2 * genus_ + s.index - 1;
}

std::string to_string(OrbifoldSignature const& sig) {
  std::string out = "(" + std::to_string(sig.genus()) + ";";
  if (sig.periods().empty()) {
    out += " -";
  }
  for (std::size_t j = 0; j < sig.periods().size(); ++j) {
    out += (j == 0 ? " " : ",") + std::to_string(sig.periods()[j]);
  }
  return out + ")";
}

Substitution Substitution::identity(OrbifoldSignature const& sig) {
  Substitution s;
  for (GenSymbol const v : sig.alphabet()) {
    s.images_[v] = Word::generator(v);
  }
  return s;
}

void Substitution::set(GenSymbol s, Word image) {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw Error(ErrorCode::kDomain,
                "symbol " + to_string(s) + " outside substitution domain");
  }
  it->second = std::move(image);
}

Word const& Substitution::image(GenSymbol s) const {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw Error(ErrorCode::kDomain,
                "symbol " + to_string(s) + " outside substitution domain");
  }
  return it->second;
}

Word apply_substitution(Word const& w, Substitution const& s) {
  Word out;
  for (WordLetter const& l : w) {
    Word const& img = s.image(l.symbol);
    out.append(l.exponent > 0 ? img : img.inverse());
  }
  return out;
}

Word commutator(Word const& v, Word const& w) {
  return v * w * v.inverse() * w.inverse();
}

Word long_relation(OrbifoldSignature const& sig) {
  Word out;
  for (std::uint32_t i = 1; i <= sig.genus(); ++i) {
    out.append(commutator(Word::generator(GenSymbol::a(i)),
                          Word::generator(GenSymbol::b(i))));
  }
  for (std::uint32_t j = 1; j <= sig.r(); ++j) {
    out.push_back({GenSymbol::x(j), 1});
  }
  return out;
}

GenSymbol parse_symbol(std::string_view token) {
  if (token.size() < 2) {
    throw Error(ErrorCode::kParse, "bad generator '" + std::string(token) + "'");
  }
  GenKind kind{};
  switch (token[0]) {
    case 'a':
      kind = GenKind::kA;
      break;
    case 'b':
      kind = GenKind::kB;
      break;
    case 'x':
      kind = GenKind::kX;
      break;
    default:
      throw Error(ErrorCode::kParse,
                  "bad generator '" + std::string(token) + "'");
  }
  std::uint32_t index = 0;
  auto const* first = token.data() + 1;
  auto const* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc{} || ptr != last || index == 0) {
    throw Error(ErrorCode::kParse, "bad generator '" + std::string(token) + "'");
  }
  return {kind, index};
}

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  bool saw_one = false;
  bool saw_letter = false;
  while (in >> token) {
    if (token == "1") {
      saw_one = true;
      continue;
    }
    saw_letter = true;
    int exponent = 1;
    auto const caret = token.find('^');
    std::string_view name = token;
    if (caret != std::string::npos) {
      std::string_view const exp = std::string_view(token).substr(caret + 1);
      if (exp == "-1") {
        exponent = -1;
      } else if (exp != "1") {
        throw Error(ErrorCode::kParse, "unsupported exponent in '" + token + "'");
      }
      name = std::string_view(token).substr(0, caret);
    }
    out.push_back({parse_symbol(name), exponent});
  }
  if (saw_one && saw_letter) {
    throw Error(ErrorCode::kParse, "'1' only denotes the empty word on its own");
  }
  return out;
}

std::string to_string(GenSymbol s) {
  char const prefix = s.kind == GenKind::kA ? 'a' : s.kind == GenKind::kB ? 'b' : 'x';
  return prefix + std::to_string(s.index);
}

std::string to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (WordLetter const& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(l.symbol);
    if (l.exponent < 0) {
      out += "^-1";
    }
  }
  return out;
}

}  // namespace surfkernel
