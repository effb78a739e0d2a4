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
#include "surfkernel/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "surfkernel/error.hpp"

namespace surfkernel {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
  }
  return names;
}

void check_names(std::vector<std::string> const& names, std::size_t n) {
  if (names.size() != n) {
    throw Error(ErrorCode::kShape, "expected " + std::to_string(n) +
                                       " element names, got " +
                                       std::to_string(names.size()));
  }
  std::set<std::string> seen;
  for (auto const& name : names) {
    bool const bad_char = std::any_of(name.begin(), name.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']';
    });
    if (name.empty() || bad_char || !seen.insert(name).second) {
      throw Error(ErrorCode::kShape,
                  "element names must be distinct, non-empty and free of "
                  "whitespace and brackets: '" +
                      name + "'");
    }
  }
}

Permutation compose(Permutation const& p, Permutation const& q) {
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] = p[q[k]];
  }
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(
    std::vector<std::vector<std::uint32_t>> const& table,
    std::vector<std::string> names) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidTable, "multiplication table is empty");
  }
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kCapacity,
                "group order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxOrder));
  }
  FiniteGroup grp;
  grp.order_ = n;
  grp.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::kInvalidTable, "multiplication table row " +
                                                std::to_string(i) +
                                                " has wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorCode::kInvalidTable,
                    "table entry out of range at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
      grp.table_[i * n + j] = table[i][j];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (grp.table_[i] != i || grp.table_[i * n] != i) {
      throw Error(ErrorCode::kNoIdentity,
                  "element 0 is not a two-sided identity (fails at " +
                      std::to_string(i) + ")");
    }
  }

  grp.inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (grp.table_[i * n + j] == 0 && grp.table_[j * n + i] == 0) {
        grp.inverse_[i] = static_cast<std::uint32_t>(j);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kNotInvertible,
                  "element " + std::to_string(i) + " has no inverse");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t const ij = grp.table_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (grp.table_[ij * n + k] != grp.table_[i * n + grp.table_[j * n + k]]) {
          throw Error(ErrorCode::kNonAssociative,
                      "associativity fails for (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }

  grp.element_order_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t acc = static_cast<std::uint32_t>(i);
    std::uint32_t k = 1;
    while (acc != 0) {
      acc = grp.table_[acc * n + i];
      ++k;
    }
    grp.element_order_[i] = k;
  }

  for (std::size_t i = 0; i < n && grp.abelian_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (grp.table_[i * n + j] != grp.table_[j * n + i]) {
        grp.abelian_ = false;
        break;
      }
    }
  }

  if (names.empty()) {
    names = default_names(n);
  }
  check_names(names, n);
  grp.names_ = std::move(names);
  return grp;
}

GroupElement FiniteGroup::power(GroupElement g, std::int64_t k) const noexcept {
  auto const ord = static_cast<std::int64_t>(element_order(g));
  k %= ord;
  if (k < 0) {
    k += ord;
  }
  GroupElement acc = GroupElement::identity();
  for (std::int64_t i = 0; i < k; ++i) {
    acc = mul(acc, g);
  }
  return acc;
}

GroupElement FiniteGroup::commutator(GroupElement g,
                                     GroupElement h) const noexcept {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

GroupElement FiniteGroup::conjugate(GroupElement by,
                                    GroupElement g) const noexcept {
  return mul(mul(by, g), inverse(by));
}

std::vector<GroupElement> FiniteGroup::elements() const {
  std::vector<GroupElement> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i] = {static_cast<std::uint32_t>(i)};
  }
  return out;
}

std::vector<bool> FiniteGroup::generated_subgroup(
    std::span<const GroupElement> gens) const {
  std::vector<bool> seen(order_, false);
  std::deque<GroupElement> queue{GroupElement::identity()};
  seen[0] = true;
  while (!queue.empty()) {
    GroupElement const g = queue.front();
    queue.pop_front();
    for (GroupElement const s : gens) {
      GroupElement const h = mul(g, s);
      if (!seen[h.index]) {
        seen[h.index] = true;
        queue.push_back(h);
      }
    }
  }
  return seen;
}

FiniteGroup FiniteGroup::with_names(std::vector<std::string> names) const {
  check_names(names, order_);
  FiniteGroup copy = *this;
  copy.names_ = std::move(names);
  return copy;
}

std::optional<GroupElement> FiniteGroup::find(std::string_view label) const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (names_[i] == label) {
      return GroupElement{static_cast<std::uint32_t>(i)};
    }
  }
  if (!permutations_.empty()) {
    auto const perm = parse_cycles(label, permutations_.front().size());
    if (perm) {
      auto const it = std::find(permutations_.begin(), permutations_.end(), *perm);
      if (it != permutations_.end()) {
        return GroupElement{
            static_cast<std::uint32_t>(it - permutations_.begin())};
      }
    }
  }
  return std::nullopt;
}

std::optional<Permutation> FiniteGroup::permutation(GroupElement g) const {
  if (permutations_.empty()) {
    return std::nullopt;
  }
  return permutations_[g.index];
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidOrder, "cyclic group order must be >= 1");
  }
  if (n > FiniteGroup::kMaxOrder) {
    throw Error(ErrorCode::kCapacity, "cyclic group order " +
                                          std::to_string(n) + " exceeds cap");
  }
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = static_cast<std::uint32_t>((i + j) % n);
    }
  }
  return FiniteGroup::from_table(table);
}

FiniteGroup make_symmetric(std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorCode::kInvalidOrder, "symmetric group degree must be >= 1");
  }
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= degree; ++k) {
    factorial *= k;
    if (factorial > FiniteGroup::kMaxOrder) {
      throw Error(ErrorCode::kCapacity,
                  "S_" + std::to_string(degree) + " exceeds the order cap " +
                      std::to_string(FiniteGroup::kMaxOrder));
    }
  }

  std::vector<Permutation> transpositions;
  for (std::size_t span = 1; span < degree; ++span) {
    for (std::size_t i = 0; i + span < degree; ++i) {
      Permutation t(degree);
      for (std::size_t k = 0; k < degree; ++k) {
        t[k] = static_cast<std::uint8_t>(k);
      }
      std::swap(t[i], t[i + span]);
      transpositions.push_back(std::move(t));
    }
  }

  Permutation id(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    id[k] = static_cast<std::uint8_t>(k);
  }
  std::vector<Permutation> elements{id};
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto const& t : transpositions) {
      Permutation next = compose(elements[head], t);
      if (index.emplace(next, static_cast<std::uint32_t>(elements.size())).second) {
        elements.push_back(std::move(next));
      }
    }
  }

  std::size_t const n = elements.size();
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = index.at(compose(elements[i], elements[j]));
    }
    names.push_back(cycle_notation(elements[i]));
  }
  FiniteGroup grp = FiniteGroup::from_table(table, std::move(names));
  grp.permutations_ = std::move(elements);
  return grp;
}

bool in_cyclic_span(GroupElement g, GroupElement h, FiniteGroup const& grp) {
  GroupElement acc = GroupElement::identity();
  for (std::uint32_t k = 0; k < grp.element_order(h); ++k) {
    if (acc == g) {
      return true;
    }
    acc = grp.mul(acc, h);
  }
  return false;
}

std::string cycle_notation(Permutation const& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) {
      continue;
    }
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) {
        out += ',';
      }
      out += std::to_string(k + 1);
      first = false;
      k = p[k];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::optional<Permutation> parse_cycles(std::string_view text,
                                        std::size_t degree) {
  Permutation p(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    p[k] = static_cast<std::uint8_t>(k);
  }
  if (text == "id" || text == "()" || text == "1") {
    return p;
  }
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  // Cycles are applied right to left, matching the group product.
  std::vector<std::vector<std::size_t>> cycles;
  skip_space();
  if (pos == text.size()) {
    return std::nullopt;
  }
  while (pos < text.size()) {
    if (text[pos] != '(') {
      return std::nullopt;
    }
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (!cycle.empty()) {
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_space();
        }
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0 || value == 0 || value > degree) {
        return std::nullopt;
      }
      if (std::find(cycle.begin(), cycle.end(), value - 1) != cycle.end()) {
        return std::nullopt;
      }
      cycle.push_back(value - 1);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(degree);
    for (std::size_t k = 0; k < degree; ++k) {
      c[k] = static_cast<std::uint8_t>(k);
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      c[(*it)[i]] = static_cast<std::uint8_t>((*it)[(i + 1) % it->size()]);
    }
    p = compose(c, p);
  }
  return p;
}

}  // namespace surfkernel
