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
#include "surfkernel/schreier.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace surfkernel {

namespace {

/// Generator letters in breadth-first order: positives, then inverses.
std::vector<WordLetter> search_letters(OrbifoldSignature const& sig) {
  std::vector<WordLetter> out;
  for (int const e : {1, -1}) {
    for (GenSymbol const v : sig.alphabet()) {
      out.push_back({v, e});
    }
  }
  return out;
}

GroupElement step(GroupElement at, WordLetter l, FiniteGroup const& grp,
                  GeneratingVector const& phi) {
  GroupElement const g = phi.image(l.symbol);
  return grp.mul(at, l.exponent > 0 ? g : grp.inverse(g));
}

void check_shape(FiniteGroup const& grp, GeneratingVector const& phi,
                 OrbifoldSignature const& sig) {
  if (phi.a.size() != sig.genus() || phi.b.size() != sig.genus() ||
      phi.xi.size() != sig.r()) {
    throw Error(ErrorCode::kShape,
                "generating vector does not match signature " + to_string(sig));
  }
  (void)grp;
}

}  // namespace

std::vector<std::size_t> coset_distances(FiniteGroup const& grp,
                                         GeneratingVector const& phi,
                                         OrbifoldSignature const& sig) {
  check_shape(grp, phi, sig);
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(grp.order(), kUnset);
  std::deque<GroupElement> queue{GroupElement::identity()};
  dist[0] = 0;
  auto const letters = search_letters(sig);
  while (!queue.empty()) {
    GroupElement const g = queue.front();
    queue.pop_front();
    for (WordLetter const l : letters) {
      GroupElement const h = step(g, l, grp, phi);
      if (dist[h.index] == kUnset) {
        dist[h.index] = dist[g.index] + 1;
        queue.push_back(h);
      }
    }
  }
  return dist;
}

SchreierTransversal minimal_transversal(FiniteGroup const& grp,
                                        GeneratingVector const& phi,
                                        OrbifoldSignature const& sig) {
  check_shape(grp, phi, sig);
  std::vector<Word> reps(grp.order());
  std::vector<bool> found(grp.order(), false);
  found[0] = true;
  std::deque<GroupElement> queue{GroupElement::identity()};
  auto const letters = search_letters(sig);
  while (!queue.empty()) {
    GroupElement const g = queue.front();
    queue.pop_front();
    for (WordLetter const l : letters) {
      GroupElement const h = step(g, l, grp, phi);
      if (!found[h.index]) {
        found[h.index] = true;
        reps[h.index] = reps[g.index];
        reps[h.index].push_back(l);
        queue.push_back(h);
      }
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i]) {
      throw Error(ErrorCode::kUnreachableCoset,
                  "coset " + grp.name(GroupElement{static_cast<std::uint32_t>(i)}) +
                      " is not reached: the images do not generate the group");
    }
  }
  return SchreierTransversal(std::move(reps));
}

SchreierTransversal transversal_from(FiniteGroup const& grp,
                                     GeneratingVector const& phi,
                                     OrbifoldSignature const& sig,
                                     std::vector<Word> reps) {
  check_shape(grp, phi, sig);
  if (reps.size() != grp.order()) {
    throw Error(ErrorCode::kInvalidTransversal,
                "transversal needs one representative per group element");
  }
  auto const dist = coset_distances(grp, phi, sig);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    GroupElement const g{static_cast<std::uint32_t>(i)};
    Word const& w = reps[i];
    for (WordLetter const& l : w) {
      if (!sig.contains(l.symbol)) {
        throw Error(ErrorCode::kInvalidTransversal,
                    "representative of " + grp.name(g) + " uses " +
                        to_string(l.symbol) + " outside the signature");
      }
    }
    if (evaluate(phi, w, grp) != g) {
      throw Error(ErrorCode::kInvalidTransversal,
                  "representative " + to_string(w) + " does not evaluate to " +
                      grp.name(g));
    }
    if (w.size() != dist[i]) {
      throw Error(ErrorCode::kInvalidTransversal,
                  "representative " + to_string(w) + " of " + grp.name(g) +
                      " is not of minimal length " + std::to_string(dist[i]));
    }
    Word prefix;
    GroupElement at = GroupElement::identity();
    for (WordLetter const& l : w) {
      prefix.push_back(l);
      at = step(at, l, grp, phi);
      if (reps[at.index] != prefix) {
        throw Error(ErrorCode::kInvalidTransversal,
                    "prefix " + to_string(prefix) + " of " + to_string(w) +
                        " is not itself a representative");
      }
    }
  }
  return SchreierTransversal(std::move(reps));
}

KernelWord rewrite_tau(Word const& w, SchreierTransversal const& t,
                       FiniteGroup const& grp, GeneratingVector const& phi) {
  if (!evaluate(phi, w, grp).is_identity()) {
    throw Error(ErrorCode::kNotInKernel,
                "word " + to_string(w) + " is not in the kernel");
  }
  (void)t;
  KernelWord out;
  GroupElement at = GroupElement::identity();
  for (WordLetter const& l : w) {
    if (l.exponent > 0) {
      out.push_back({{at, l.symbol}, 1});
      at = step(at, l, grp, phi);
    } else {
      at = step(at, l, grp, phi);
      out.push_back({{at, l.symbol}, -1});
    }
  }
  return out;
}

Word expand(KernelGen s, SchreierTransversal const& t, FiniteGroup const& grp,
            GeneratingVector const& phi) {
  Word w = t.rep(s.coset);
  w.push_back({s.symbol, 1});
  return w * t.rep(step(s.coset, {s.symbol, 1}, grp, phi)).inverse();
}

Word expand(KernelWord const& w, SchreierTransversal const& t,
            FiniteGroup const& grp, GeneratingVector const& phi) {
  Word out;
  for (KernelLetter const& l : w) {
    Word const e = expand(l.symbol, t, grp, phi);
    out.append(l.exponent > 0 ? e : e.inverse());
  }
  return out;
}

bool is_freely_trivial(KernelGen s, SchreierTransversal const& t,
                       FiniteGroup const& grp, GeneratingVector const& phi) {
  return expand(s, t, grp, phi).empty();
}

KernelWord drop_trivial(KernelWord const& w, SchreierTransversal const& t,
                        FiniteGroup const& grp, GeneratingVector const& phi) {
  KernelWord out;
  for (KernelLetter const& l : w) {
    if (!is_freely_trivial(l.symbol, t, grp, phi)) {
      out.push_back(l);
    }
  }
  return out;
}

std::string_view to_string(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::kLong:
      return "long";
    case RelationKind::kElliptic:
      return "elliptic";
    case RelationKind::kTrivialGenerator:
      break;
  }
  return "trivial";
}

KernelPresentation raw_presentation(OrbifoldSignature const& sig,
                                    FiniteGroup const& grp,
                                    GeneratingVector const& phi,
                                    SchreierTransversal const& t) {
  check_shape(grp, phi, sig);
  KernelPresentation p;
  p.genus_expected = kernel_genus(sig, grp.order());
  auto const alphabet = sig.alphabet();
  for (GroupElement const k : grp.elements()) {
    for (GenSymbol const v : alphabet) {
      p.generators.push_back({k, v});
    }
  }

  Word const rel = long_relation(sig);
  for (GroupElement const k : grp.elements()) {
    Word const& rep = t.rep(k);
    p.relations.push_back(
        {RelationKind::kLong, rewrite_tau(rep * rel * rep.inverse(), t, grp, phi)});
  }

  for (std::uint32_t j = 1; j <= sig.r(); ++j) {
    GroupElement const xi = phi.xi[j - 1];
    std::vector<bool> seen(grp.order(), false);
    Word power;
    for (std::uint32_t e = 0; e < sig.period(j); ++e) {
      power.push_back({GenSymbol::x(j), 1});
    }
    for (GroupElement const k : grp.elements()) {
      if (seen[k.index]) {
        continue;
      }
      GroupElement c = k;
      do {
        seen[c.index] = true;
        c = grp.mul(c, xi);
      } while (c != k);
      Word const& rep = t.rep(k);
      p.relations.push_back({RelationKind::kElliptic,
                             rewrite_tau(rep * power * rep.inverse(), t, grp, phi)});
    }
  }

  for (KernelGen const s : p.generators) {
    if (is_freely_trivial(s, t, grp, phi)) {
      p.relations.push_back(
          {RelationKind::kTrivialGenerator, KernelWord::generator(s)});
    }
  }
  return p;
}

LiveRewriter::LiveRewriter(KernelPresentation const& p) {
  for (Elimination const& e : p.eliminated) {
    values_[e.generator] = e.value;
  }
}

KernelWord LiveRewriter::rewrite(KernelGen s) const {
  auto const v = values_.find(s);
  if (v == values_.end()) {
    return KernelWord::generator(s);
  }
  if (auto const m = memo_.find(s); m != memo_.end()) {
    return m->second;
  }
  KernelWord out = rewrite(v->second);
  memo_[s] = out;
  return out;
}

KernelWord LiveRewriter::rewrite(KernelWord const& w) const {
  KernelWord out;
  for (KernelLetter const& l : w) {
    KernelWord const r = rewrite(l.symbol);
    out.append(l.exponent > 0 ? r : r.inverse());
  }
  return out;
}

bool linkedness_check(KernelPresentation const& p) {
  if (p.relations.size() != 1 || p.relations.front().word.empty()) {
    throw Error(ErrorCode::kShape,
                "linkedness needs exactly one non-empty relation, got " +
                    std::to_string(p.relations.size()));
  }
  KernelWord const& rel = p.relations.front().word;
  struct Chord {
    std::size_t pos = 0;
    std::size_t neg = 0;
    int seen_pos = 0;
    int seen_neg = 0;
  };
  std::map<KernelGen, Chord> chords;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    Chord& c = chords[rel[i].symbol];
    if (rel[i].exponent > 0) {
      c.pos = i;
      ++c.seen_pos;
    } else {
      c.neg = i;
      ++c.seen_neg;
    }
  }
  for (KernelGen const s : p.generators) {
    if (!chords.contains(s)) {
      return false;
    }
  }
  for (auto const& [s, c] : chords) {
    if (c.seen_pos != 1 || c.seen_neg != 1) {
      return false;
    }
  }
  auto const inside = [](Chord const& c, std::size_t x) {
    auto const [lo, hi] = std::minmax(c.pos, c.neg);
    return lo < x && x < hi;
  };
  for (auto const& [u, cu] : chords) {
    bool linked = false;
    for (auto const& [v, cv] : chords) {
      if (!(u == v) && inside(cu, cv.pos) != inside(cu, cv.neg)) {
        linked = true;
        break;
      }
    }
    if (!linked) {
      return false;
    }
  }
  return true;
}

PresentationCounts count_check(OrbifoldSignature const& sig,
                               FiniteGroup const& grp) {
  std::uint64_t const n = grp.order();
  PresentationCounts c;
  c.generators = 2 * n * sig.genus() + n * sig.r();
  c.relations = 1;
  for (std::uint32_t j = 1; j <= sig.r(); ++j) {
    if (n % sig.period(j) != 0) {
      throw Error(ErrorCode::kInvalidPeriod,
                  "period m" + std::to_string(j) + " = " +
                      std::to_string(sig.period(j)) +
                      " does not divide the group order " + std::to_string(n));
    }
    c.relations += n / sig.period(j);
  }
  return c;
}

PresentationCounts raw_counts(KernelPresentation const& p) {
  std::int64_t relations = 0;
  for (KernelRelation const& r : p.relations) {
    switch (r.kind) {
      case RelationKind::kLong:
      case RelationKind::kElliptic:
        ++relations;
        break;
      case RelationKind::kTrivialGenerator:
        --relations;
        break;
    }
  }
  return {p.generators.size() + p.eliminated.size(),
          static_cast<std::uint64_t>(relations)};
}

}  // namespace surfkernel
