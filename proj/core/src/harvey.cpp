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
#include "surfkernel/harvey.hpp"

#include <charconv>
#include <deque>
#include <set>

#include "surfkernel/error.hpp"

namespace surfkernel {

namespace {

Word gen(GenSymbol s, int e = 1) { return Word::generator(s, e); }

Word conj(Word const& by, Word const& w) { return by * w * by.inverse(); }

void require_applicable(HarveyOp op, OrbifoldSignature const& sig) {
  if (!is_applicable(op, sig)) {
    throw Error(ErrorCode::kApplicability,
                to_string(op) + " does not apply to signature " + to_string(sig));
  }
}

}  // namespace

std::string to_string(HarveyOp op) {
  switch (op.tag) {
    case HarveyTag::kV1:
      return "V1";
    case HarveyTag::kV2:
      return "V2";
    case HarveyTag::kV3:
      return "V3";
    case HarveyTag::kV4:
      return "V4";
    case HarveyTag::kBhat:
      break;
  }
  return "Bhat:" + std::to_string(op.j);
}

HarveyOp parse_op(std::string_view token) {
  while (!token.empty() && token.front() == ' ') {
    token.remove_prefix(1);
  }
  while (!token.empty() && token.back() == ' ') {
    token.remove_suffix(1);
  }
  if (token == "V1") return {HarveyTag::kV1, 0};
  if (token == "V2") return {HarveyTag::kV2, 0};
  if (token == "V3") return {HarveyTag::kV3, 0};
  if (token == "V4") return {HarveyTag::kV4, 0};
  constexpr std::string_view kBhat = "Bhat:";
  if (token.starts_with(kBhat)) {
    std::uint32_t j = 0;
    auto const* first = token.data() + kBhat.size();
    auto const* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, j);
    if (ec == std::errc{} && ptr == last && j >= 1) {
      return {HarveyTag::kBhat, j};
    }
  }
  throw Error(ErrorCode::kParse, "unknown Harvey op '" + std::string(token) + "'");
}

std::vector<HarveyOp> parse_program(std::string_view text) {
  std::vector<HarveyOp> ops;
  if (text.find_first_not_of(' ') == std::string_view::npos) {
    return ops;
  }
  std::size_t start = 0;
  while (true) {
    auto const comma = text.find(',', start);
    ops.push_back(parse_op(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return ops;
}

bool is_applicable(HarveyOp op, OrbifoldSignature const& sig) noexcept {
  switch (op.tag) {
    case HarveyTag::kV1:
    case HarveyTag::kV2:
      return sig.genus() >= 1;
    case HarveyTag::kV3:
      return sig.genus() >= 2;
    case HarveyTag::kV4:
      return sig.genus() >= 1 && sig.r() >= 1;
    case HarveyTag::kBhat:
      break;
  }
  return op.j >= 1 && op.j < sig.genus();
}

Substitution substitution_of(HarveyOp op, OrbifoldSignature const& sig) {
  require_applicable(op, sig);
  Substitution s = Substitution::identity(sig);
  auto const a = [](std::uint32_t i) { return GenSymbol::a(i); };
  auto const b = [](std::uint32_t i) { return GenSymbol::b(i); };
  switch (op.tag) {
    case HarveyTag::kV1:
      s.set(a(1), gen(a(1)) * gen(b(1)));
      break;
    case HarveyTag::kV2:
      s.set(a(1), gen(a(1)) * gen(b(1)));
      s.set(b(1), gen(a(1), -1));
      break;
    case HarveyTag::kV3: {
      Word const a2 = gen(a(2));
      for (std::uint32_t j = 1; j <= sig.r(); ++j) {
        s.set(GenSymbol::x(j), conj(a2, gen(GenSymbol::x(j))));
      }
      s.set(a(1), a2 * gen(a(1)));
      s.set(a(2), conj(gen(b(1)), a2));
      s.set(b(2), a2 * gen(b(2)) * a2.inverse() * gen(b(1), -1));
      for (std::uint32_t i = 3; i <= sig.genus(); ++i) {
        s.set(a(i), conj(a2, gen(a(i))));
        s.set(b(i), conj(a2, gen(b(i))));
      }
      break;
    }
    case HarveyTag::kV4: {
      Word const a1 = gen(a(1));
      Word const xr = gen(GenSymbol::x(sig.r()));
      s.set(GenSymbol::x(sig.r()), conj(a1.inverse(), xr));
      s.set(a(1), commutator(a1.inverse(), xr.inverse()) * a1);
      s.set(b(1), gen(b(1)) * a1.inverse() * xr * a1);
      break;
    }
    case HarveyTag::kBhat: {
      std::uint32_t const j = op.j;
      Word const c = commutator(gen(a(j + 1)), gen(b(j + 1)));
      s.set(a(j), gen(a(j + 1)));
      s.set(b(j), gen(b(j + 1)));
      s.set(a(j + 1), conj(c.inverse(), gen(a(j))));
      s.set(b(j + 1), conj(c.inverse(), gen(b(j))));
      break;
    }
  }
  return s;
}

OpResult apply_op(HarveyOp op, GeneratingVector const& phi,
                  FiniteGroup const& grp) {
  if (phi.a.size() != phi.b.size()) {
    throw Error(ErrorCode::kShape, "generating vector has unequal A and B lists");
  }
  OrbifoldSignature const shape(
      static_cast<std::uint32_t>(phi.a.size()),
      std::vector<std::uint32_t>(phi.xi.size(), 2));
  require_applicable(op, shape);

  OpResult res{phi, true, std::nullopt};
  GeneratingVector& out = res.vector;
  auto const mul = [&](GroupElement g, GroupElement h) { return grp.mul(g, h); };
  auto const inv = [&](GroupElement g) { return grp.inverse(g); };
  switch (op.tag) {
    case HarveyTag::kV1:
      out.a[0] = mul(phi.a[0], phi.b[0]);
      break;
    case HarveyTag::kV2:
      out.a[0] = mul(phi.a[0], phi.b[0]);
      out.b[0] = inv(phi.a[0]);
      break;
    case HarveyTag::kV3: {
      GroupElement const a1 = phi.a[0];
      GroupElement const b1 = phi.b[0];
      GroupElement const a2 = phi.a[1];
      GroupElement const b2 = phi.b[1];
      out.a[0] = mul(a2, a1);
      out.a[1] = grp.conjugate(b1, a2);
      out.b[1] = mul(mul(a2, b2), mul(inv(a2), inv(b1)));
      for (std::size_t i = 2; i < phi.a.size(); ++i) {
        out.a[i] = grp.conjugate(a2, phi.a[i]);
        out.b[i] = grp.conjugate(a2, phi.b[i]);
      }
      for (std::size_t j = 0; j < phi.xi.size(); ++j) {
        out.xi[j] = grp.conjugate(a2, phi.xi[j]);
      }
      break;
    }
    case HarveyTag::kV4: {
      GroupElement const xr = phi.xi.back();
      if (!grp.is_abelian() && !in_cyclic_span(phi.a[0], xr, grp)) {
        return {phi, false,
                "V4 needs A1 in <xi_r>: " + grp.name(phi.a[0]) +
                    " is not a power of " + grp.name(xr)};
      }
      out.b[0] = mul(phi.b[0], xr);
      break;
    }
    case HarveyTag::kBhat: {
      std::size_t const j = op.j - 1;
      GroupElement const an = phi.a[j + 1];
      GroupElement const bn = phi.b[j + 1];
      if (!in_cyclic_span(an, bn, grp)) {
        return {phi, false,
                to_string(op) + " needs A" + std::to_string(op.j + 1) +
                    " in <B" + std::to_string(op.j + 1) + ">: " +
                    grp.name(an) + " is not a power of " + grp.name(bn)};
      }
      GroupElement const c = grp.commutator(an, bn);
      out.a[j] = an;
      out.b[j] = bn;
      out.a[j + 1] = grp.conjugate(c, phi.a[j]);
      out.b[j + 1] = grp.conjugate(c, phi.b[j]);
      break;
    }
  }
  return res;
}

bool verify_automorphism(HarveyOp op, OrbifoldSignature const& sig) {
  Substitution const s = substitution_of(op, sig);
  Word const rel = long_relation(sig);
  if (!are_conjugate(apply_substitution(rel, s), rel)) {
    return false;
  }
  for (std::uint32_t j = 1; j <= sig.r(); ++j) {
    Word const img = s.image(GenSymbol::x(j)).cyclically_reduced();
    if (img.size() != 1 || img[0].exponent != 1 ||
        img[0].symbol.kind != GenKind::kX ||
        sig.period(img[0].symbol.index) != sig.period(j)) {
      return false;
    }
  }
  return true;
}

bool consistency_check(HarveyOp op, GeneratingVector const& phi,
                       FiniteGroup const& grp, OrbifoldSignature const& sig) {
  OpResult const res = apply_op(op, phi, grp);
  if (!res.applied) {
    return false;
  }
  Substitution const s = substitution_of(op, sig);
  for (GenSymbol const v : sig.alphabet()) {
    if (evaluate(phi, s.image(v), grp) != res.vector.image(v)) {
      return false;
    }
  }
  return true;
}

OrbitResult enumerate_orbit(GeneratingVector const& phi,
                            std::vector<HarveyOp> const& ops,
                            FiniteGroup const& grp,
                            OrbifoldSignature const& sig, std::size_t cap) {
  std::set<GeneratingVector> seen{phi};
  std::deque<GeneratingVector> frontier{phi};
  bool truncated = false;
  while (!frontier.empty() && !truncated) {
    GeneratingVector const cur = frontier.front();
    frontier.pop_front();
    for (HarveyOp const op : ops) {
      if (!is_applicable(op, sig)) {
        continue;
      }
      OpResult res = apply_op(op, cur, grp);
      if (!res.applied || seen.contains(res.vector)) {
        continue;
      }
      if (seen.size() >= cap) {
        truncated = true;
        break;
      }
      seen.insert(res.vector);
      frontier.push_back(std::move(res.vector));
    }
  }
  return {std::vector<GeneratingVector>(seen.begin(), seen.end()), truncated};
}

}  // namespace surfkernel
