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
#include <map>
#include <optional>
#include <set>

#include "surfkernel/schreier.hpp"

namespace surfkernel {

namespace {

KernelWord substitute(KernelWord const& w, KernelGen s, KernelWord const& value) {
  KernelWord out;
  for (KernelLetter const& l : w) {
    if (l.symbol == s) {
      out.append(l.exponent > 0 ? value : value.inverse());
    } else {
      out.push_back(l);
    }
  }
  return out.cyclically_reduced();
}

void eliminate(std::vector<KernelRelation>& relations, KernelGen s,
               KernelWord const& value) {
  std::vector<KernelRelation> kept;
  kept.reserve(relations.size());
  for (KernelRelation& r : relations) {
    KernelWord w = substitute(r.word, s, value);
    if (!w.empty()) {
      kept.push_back({r.kind, std::move(w)});
    }
  }
  relations = std::move(kept);
}

struct Candidate {
  std::size_t length = 0;
  KernelGen generator;
  std::size_t relation = 0;
};

std::optional<Candidate> pick(std::vector<KernelRelation> const& relations) {
  std::optional<Candidate> best;
  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    KernelWord const& w = relations[ri].word;
    if (best && w.size() > best->length) {
      continue;
    }
    std::map<KernelGen, std::size_t> counts;
    for (KernelLetter const& l : w) {
      ++counts[l.symbol];
    }
    for (auto const& [s, c] : counts) {
      if (c != 1) {
        continue;
      }
      // counts is ordered, so the first once-occurring generator is least.
      if (!best || w.size() < best->length ||
          (w.size() == best->length && s < best->generator)) {
        best = Candidate{w.size(), s, ri};
      }
      break;
    }
  }
  return best;
}

bool surface_shaped(KernelPresentation const& p) {
  std::uint64_t const rank = 2 * p.genus_expected;
  if (p.generators.size() != rank) {
    return false;
  }
  if (rank == 0) {
    return p.relations.empty();
  }
  if (p.relations.size() != 1) {
    return false;
  }
  std::map<KernelGen, std::pair<int, int>> seen;
  for (KernelLetter const& l : p.relations.front().word) {
    auto& [pos, neg] = seen[l.symbol];
    (l.exponent > 0 ? pos : neg) += 1;
  }
  if (seen.size() != rank) {
    return false;
  }
  for (KernelGen const s : p.generators) {
    auto const it = seen.find(s);
    if (it == seen.end() || it->second != std::pair{1, 1}) {
      return false;
    }
  }
  return true;
}

}  // namespace

KernelPresentation simplify(KernelPresentation const& p) {
  KernelPresentation out;
  out.genus_expected = p.genus_expected;
  out.eliminated = p.eliminated;
  std::vector<KernelRelation> relations;
  for (KernelRelation const& r : p.relations) {
    KernelWord w = r.word.cyclically_reduced();
    if (!w.empty()) {
      relations.push_back({r.kind, std::move(w)});
    }
  }

  std::set<KernelGen> dead;
  for (KernelRelation const& r : p.relations) {
    if (r.kind == RelationKind::kTrivialGenerator && r.word.size() == 1 &&
        dead.insert(r.word[0].symbol).second) {
      out.eliminated.push_back({r.word[0].symbol, {}});
    }
  }
  for (KernelGen const s : dead) {
    eliminate(relations, s, {});
  }

  while (auto const c = pick(relations)) {
    KernelWord const rel = relations[c->relation].word;
    std::size_t at = 0;
    while (!(rel[at].symbol == c->generator)) {
      ++at;
    }
    // s^e rest = 1 cyclically, so s = rest^-1 for e = +1 and s = rest else.
    KernelWord rest;
    for (std::size_t i = 1; i < rel.size(); ++i) {
      rest.push_back(rel[(at + i) % rel.size()]);
    }
    KernelWord value = rel[at].exponent > 0 ? rest.inverse() : rest;
    relations.erase(relations.begin() + static_cast<std::ptrdiff_t>(c->relation));
    eliminate(relations, c->generator, value);
    dead.insert(c->generator);
    out.eliminated.push_back({c->generator, std::move(value)});
  }

  for (KernelGen const s : p.generators) {
    if (!dead.contains(s)) {
      out.generators.push_back(s);
    }
  }
  out.relations = std::move(relations);
  if (!surface_shaped(out)) {
    std::size_t const gens = out.generators.size();
    std::size_t const rels = out.relations.size();
    throw SimplificationIncomplete(
        "simplification stalled at " + std::to_string(gens) + " generators and " +
            std::to_string(rels) + " relations; expected " +
            std::to_string(2 * out.genus_expected) +
            " generators and one surface relation",
        std::move(out));
  }
  return out;
}

}  // namespace surfkernel
