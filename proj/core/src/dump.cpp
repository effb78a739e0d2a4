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
#include <charconv>
#include <sstream>

#include "surfkernel/schreier.hpp"

namespace surfkernel {

namespace {

[[noreturn]] void parse_fail(std::string const& what) {
  throw Error(ErrorCode::kParse, "presentation dump: " + what);
}

KernelGen parse_gen(std::string_view token, FiniteGroup const& grp) {
  if (!token.starts_with("S[") || !token.ends_with("]")) {
    parse_fail("bad generator '" + std::string(token) + "'");
  }
  std::string_view const body = token.substr(2, token.size() - 3);
  // Coset names may contain commas, the symbol never does.
  auto const comma = body.rfind(',');
  if (comma == std::string_view::npos) {
    parse_fail("bad generator '" + std::string(token) + "'");
  }
  auto const coset = grp.find(body.substr(0, comma));
  if (!coset) {
    parse_fail("unknown coset in '" + std::string(token) + "'");
  }
  return {*coset, parse_symbol(body.substr(comma + 1))};
}

KernelWord parse_kernel_word(std::string_view text, FiniteGroup const& grp) {
  std::istringstream in{std::string(text)};
  std::string token;
  KernelWord out;
  while (in >> token) {
    if (token == "1") {
      continue;
    }
    int exponent = 1;
    std::string_view name = token;
    if (name.ends_with("^-1")) {
      exponent = -1;
      name.remove_suffix(3);
    }
    out.push_back({parse_gen(name, grp), exponent});
  }
  return out;
}

std::size_t parse_header(std::string const& line, std::string_view key) {
  std::string_view view = line;
  if (!view.starts_with(key) || view.size() <= key.size() ||
      view[key.size()] != ' ') {
    parse_fail("expected '" + std::string(key) + " <count>', got '" + line + "'");
  }
  view.remove_prefix(key.size() + 1);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc{} || ptr != view.data() + view.size()) {
    parse_fail("bad count in '" + line + "'");
  }
  return value;
}

}  // namespace

std::string to_string(KernelGen s, FiniteGroup const& grp) {
  return "S[" + grp.name(s.coset) + "," + to_string(s.symbol) + "]";
}

std::string to_string(KernelWord const& w, FiniteGroup const& grp) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (KernelLetter const& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(l.symbol, grp);
    if (l.exponent < 0) {
      out += "^-1";
    }
  }
  return out;
}

std::string dump(KernelPresentation const& p, FiniteGroup const& grp) {
  std::ostringstream out;
  out << "genus " << p.genus_expected << '\n';
  out << "generators " << p.generators.size() << '\n';
  for (KernelGen const s : p.generators) {
    out << to_string(s, grp) << '\n';
  }
  out << "relations " << p.relations.size() << '\n';
  for (KernelRelation const& r : p.relations) {
    out << to_string(r.kind) << ": " << to_string(r.word, grp) << '\n';
  }
  out << "eliminated " << p.eliminated.size() << '\n';
  for (Elimination const& e : p.eliminated) {
    out << to_string(e.generator, grp) << " = " << to_string(e.value, grp)
        << '\n';
  }
  return out.str();
}

KernelPresentation parse_dump(std::string_view text, FiniteGroup const& grp) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next = [&]() -> std::string const& {
    if (!std::getline(in, line)) {
      parse_fail("unexpected end of input");
    }
    return line;
  };

  KernelPresentation p;
  p.genus_expected = parse_header(next(), "genus");
  std::size_t const gens = parse_header(next(), "generators");
  for (std::size_t i = 0; i < gens; ++i) {
    p.generators.push_back(parse_gen(next(), grp));
  }
  std::size_t const rels = parse_header(next(), "relations");
  for (std::size_t i = 0; i < rels; ++i) {
    std::string const& l = next();
    auto const colon = l.find(": ");
    if (colon == std::string::npos) {
      parse_fail("bad relation line '" + l + "'");
    }
    std::string_view const kind = std::string_view(l).substr(0, colon);
    KernelRelation r;
    if (kind == "long") {
      r.kind = RelationKind::kLong;
    } else if (kind == "elliptic") {
      r.kind = RelationKind::kElliptic;
    } else if (kind == "trivial") {
      r.kind = RelationKind::kTrivialGenerator;
    } else {
      parse_fail("unknown relation kind '" + std::string(kind) + "'");
    }
    r.word = parse_kernel_word(std::string_view(l).substr(colon + 2), grp);
    p.relations.push_back(std::move(r));
  }
  std::size_t const elims = parse_header(next(), "eliminated");
  for (std::size_t i = 0; i < elims; ++i) {
    std::string const& l = next();
    auto const eq = l.find(" = ");
    if (eq == std::string::npos) {
      parse_fail("bad elimination line '" + l + "'");
    }
    Elimination e;
    e.generator = parse_gen(std::string_view(l).substr(0, eq), grp);
    e.value = parse_kernel_word(std::string_view(l).substr(eq + 3), grp);
    p.eliminated.push_back(std::move(e));
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      parse_fail("trailing content '" + line + "'");
    }
  }
  return p;
}

}  // namespace surfkernel
