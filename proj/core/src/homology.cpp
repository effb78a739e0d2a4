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
#include "surfkernel/homology.hpp"

#include <algorithm>
#include <map>

#include "surfkernel/error.hpp"

namespace surfkernel {

namespace {

using Vec = std::vector<std::int64_t>;

/// Homology classes of all Schreier generators, by replaying the log.
class ClassTable {
 public:
  ClassTable(KernelPresentation const& p, HomologyBasis const& basis)
      : basis_(basis) {
    for (Elimination const& e : p.eliminated) {
      values_[e.generator] = &e.value;
    }
  }

  Vec const& of(KernelGen s) {
    if (auto const it = memo_.find(s); it != memo_.end()) {
      return it->second;
    }
    Vec v(basis_.size(), 0);
    if (auto const idx = basis_.index_of(s)) {
      v[*idx] = 1;
    } else if (auto const val = values_.find(s); val != values_.end()) {
      for (KernelLetter const& l : *val->second) {
        Vec const& part = of(l.symbol);
        for (std::size_t i = 0; i < v.size(); ++i) {
          v[i] += l.exponent * part[i];
        }
      }
    } else {
      throw Error(ErrorCode::kShape,
                  "generator is neither live nor eliminated");
    }
    return memo_.emplace(s, std::move(v)).first->second;
  }

  Vec of(KernelWord const& w) {
    Vec v(basis_.size(), 0);
    for (KernelLetter const& l : w) {
      Vec const& part = of(l.symbol);
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] += l.exponent * part[i];
      }
    }
    return v;
  }

 private:
  HomologyBasis const& basis_;
  std::map<KernelGen, KernelWord const*> values_;
  std::map<KernelGen, Vec> memo_;
};

KernelWord conjugated_tau(GroupElement g, KernelGen s,
                          SchreierTransversal const& t, FiniteGroup const& grp,
                          GeneratingVector const& phi) {
  Word const& x = t.rep(g);
  return rewrite_tau(x * expand(s, t, grp, phi) * x.inverse(), t, grp, phi);
}

/// (index, sign) if v is +-e_index.
std::optional<std::pair<std::size_t, int>> as_unit(Vec const& v) {
  std::optional<std::pair<std::size_t, int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      continue;
    }
    if (out || (v[i] != 1 && v[i] != -1)) {
      return std::nullopt;
    }
    out = std::pair{i, static_cast<int>(v[i])};
  }
  return out;
}

bool is_positive_unit(Vec const& v) {
  auto const u = as_unit(v);
  return u && u->second == 1;
}

Vec apply(IntMatrix const& m, Vec const& v) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n, 0);
  v[k] = 1;
  return v;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::column(std::size_t col) const {
  std::vector<std::int64_t> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = at(i, col);
  }
  return out;
}

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
  IntMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i) {
    for (std::size_t k = 0; k < x.n_; ++k) {
      std::int64_t const xik = x.at(i, k);
      if (xik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < x.n_; ++j) {
        out.at(i, j) += xik * y.at(k, j);
      }
    }
  }
  return out;
}

std::optional<std::size_t> HomologyBasis::index_of(KernelGen s) const {
  auto const it = std::find(elements.begin(), elements.end(), s);
  if (it == elements.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements.begin());
}

HomologyBasis homology_basis(KernelPresentation const& simplified) {
  HomologyBasis basis{simplified.generators};
  std::sort(basis.elements.begin(), basis.elements.end(),
            [](KernelGen const& l, KernelGen const& r) {
              return std::pair{l.symbol, l.coset} < std::pair{r.symbol, r.coset};
            });
  return basis;
}

KernelGen act_on_generator(GroupElement g, KernelGen s, FiniteGroup const& grp) {
  return {grp.mul(g, s.coset), s.symbol};
}

KernelWord act_on_basis(GroupElement g, std::size_t k,
                        KernelPresentation const& simplified,
                        SchreierTransversal const& t, FiniteGroup const& grp,
                        GeneratingVector const& phi) {
  HomologyBasis const basis = homology_basis(simplified);
  return LiveRewriter(simplified)
      .rewrite(conjugated_tau(g, basis.elements.at(k), t, grp, phi));
}

std::vector<std::int64_t> abelianize(KernelWord const& w,
                                     HomologyBasis const& basis) {
  Vec v(basis.size(), 0);
  for (KernelLetter const& l : w) {
    auto const idx = basis.index_of(l.symbol);
    if (!idx) {
      throw Error(ErrorCode::kShape, "word uses a generator outside the basis");
    }
    v[*idx] += l.exponent;
  }
  return v;
}

HomologyAction homology_matrices(KernelPresentation const& simplified,
                                 SchreierTransversal const& t,
                                 FiniteGroup const& grp,
                                 GeneratingVector const& phi) {
  HomologyAction h{homology_basis(simplified), {}};
  for (KernelRelation const& r : simplified.relations) {
    Vec const v = abelianize(r.word, h.basis);
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) {
      throw Error(ErrorCode::kShape,
                  "relation does not abelianize to zero; homology is not free "
                  "on the live generators");
    }
  }
  ClassTable classes(simplified, h.basis);
  std::size_t const n = h.basis.size();
  for (GroupElement const g : grp.elements()) {
    IntMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec const col =
          classes.of(conjugated_tau(g, h.basis.elements[k], t, grp, phi));
      for (std::size_t i = 0; i < n; ++i) {
        m.at(i, k) = col[i];
      }
    }
    h.matrices.push_back(std::move(m));
  }
  return h;
}

bool check_representation(HomologyAction const& h, FiniteGroup const& grp) {
  if (h.matrices.size() != grp.order()) {
    return false;
  }
  std::size_t const n = h.basis.size();
  for (IntMatrix const& m : h.matrices) {
    if (m.size() != n) {
      return false;
    }
  }
  if (h.matrix(GroupElement::identity()) != IntMatrix::identity(n)) {
    return false;
  }
  for (GroupElement const g : grp.elements()) {
    for (GroupElement const k : grp.elements()) {
      if (h.matrix(g) * h.matrix(k) != h.matrix(grp.mul(g, k))) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(AdaptedCase c) {
  switch (c) {
    case AdaptedCase::kFreeOrbit:
      return "case 1";
    case AdaptedCase::kCyclicSum:
      return "case 2";
    case AdaptedCase::kCyclicTranslate:
      return "case 3";
    case AdaptedCase::kStabilized:
      return "case 4";
    case AdaptedCase::kUnclassified:
      break;
  }
  return "unclassified";
}

AdaptedReport adapted_check(HomologyAction const& h, FiniteGroup const& grp) {
  std::size_t const n = h.basis.size();
  auto const elements = grp.elements();
  auto image = [&](GroupElement g, Vec const& v) { return apply(h.matrix(g), v); };

  auto free_orbit = [&](std::size_t k) {
    if (grp.order() < 2) {
      return false;
    }
    for (GroupElement const g : elements) {
      Vec const img = h.matrix(g).column(k);
      if (!is_positive_unit(img)) {
        return false;
      }
      if (!g.is_identity() && as_unit(img)->first == k) {
        return false;
      }
    }
    return true;
  };

  auto cyclic_sum_for = [&](std::size_t k, GroupElement gen) {
    std::uint32_t const m = grp.element_order(gen);
    Vec const gamma = unit(n, k);
    Vec sum(n, 0);
    Vec cur = gamma;
    for (std::uint32_t j = 0; j < m; ++j) {
      if (j + 1 < m && !is_positive_unit(cur)) {
        return false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        sum[i] += cur[i];
      }
      cur = image(gen, cur);
    }
    if (std::any_of(sum.begin(), sum.end(), [](std::int64_t x) { return x != 0; })) {
      return false;
    }
    auto const in_span = grp.generated_subgroup(std::vector{gen});
    std::vector<bool> covered(grp.order(), false);
    for (GroupElement const g : elements) {
      if (covered[g.index]) {
        continue;
      }
      // The left coset g<gen>.
      std::vector<GroupElement> coset;
      for (GroupElement const c : elements) {
        if (in_span[c.index]) {
          coset.push_back(grp.mul(g, c));
        }
      }
      bool rep_found = false;
      for (GroupElement const rep : coset) {
        covered[rep.index] = true;
        if (rep_found) {
          continue;
        }
        Vec v = image(rep, gamma);
        bool ok = true;
        for (std::uint32_t j = 0; j + 1 < m && ok; ++j) {
          ok = is_positive_unit(v);
          v = image(rep, apply(h.matrix(grp.power(gen, j + 1)), gamma));
        }
        rep_found = ok;
      }
      if (!rep_found) {
        return false;
      }
    }
    return true;
  };

  auto cyclic_sum = [&](std::size_t k) {
    for (GroupElement const g : elements) {
      if (!g.is_identity() && cyclic_sum_for(k, g)) {
        return true;
      }
    }
    return false;
  };

  AdaptedReport report;
  report.cases.assign(n, AdaptedCase::kUnclassified);
  for (std::size_t k = 0; k < n; ++k) {
    if (free_orbit(k)) {
      report.cases[k] = AdaptedCase::kFreeOrbit;
    } else if (cyclic_sum(k)) {
      report.cases[k] = AdaptedCase::kCyclicSum;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (report.cases[k] != AdaptedCase::kUnclassified) {
      continue;
    }
    bool translate = false;
    for (std::size_t k0 = 0; k0 < n && !translate; ++k0) {
      if (report.cases[k0] != AdaptedCase::kCyclicSum) {
        continue;
      }
      for (GroupElement const g : elements) {
        auto const u = as_unit(h.matrix(g).column(k0));
        if (u && u->first == k) {
          translate = true;
          break;
        }
      }
    }
    if (translate) {
      report.cases[k] = AdaptedCase::kCyclicTranslate;
      continue;
    }
    bool stabilized = grp.order() == 1;
    std::optional<GroupElement> missing;
    for (GroupElement const g : elements) {
      Vec const img = h.matrix(g).column(k);
      if (!as_unit(img)) {
        missing = g;
        break;
      }
      if (!g.is_identity() && img == unit(n, k)) {
        stabilized = true;
      }
    }
    if (!missing && stabilized) {
      report.cases[k] = AdaptedCase::kStabilized;
      continue;
    }
    if (!report.witness) {
      report.witness = k;
      report.reason =
          missing ? "image under element " + grp.name(*missing) +
                        " is not + or - a basis element"
                  : std::string("orbit is neither free nor stabilized and no "
                                "cyclic-sum pattern applies");
    }
  }
  report.adapted = !report.witness.has_value();
  return report;
}

BlockReport block_structure_check(HomologyAction const& h,
                                  OrbifoldSignature const& sig,
                                  FiniteGroup const& grp,
                                  GeneratingVector const& phi) {
  if (sig.genus() == 0) {
    throw Error(ErrorCode::kDomain, "block structure needs g0 >= 1");
  }
  auto const& elems = h.basis.elements;
  std::size_t hyp = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].symbol.is_hyperbolic()) {
      if (i != hyp) {
        throw Error(ErrorCode::kOrdering,
                    "basis is not in block order: hyperbolic lift at position " +
                        std::to_string(i) + " follows an elliptic one");
      }
      ++hyp;
    }
  }
  std::size_t const expected_hyp = 2 * grp.order() * sig.genus();
  if (hyp != expected_hyp) {
    return {false, std::to_string(hyp) + " of the " +
                       std::to_string(expected_hyp) +
                       " hyperbolic lifts survive simplification"};
  }

  OrbifoldSignature const sig0(0, sig.periods());
  GeneratingVector const phi0{{}, {}, phi.xi};
  if (!validate(sig0, grp, phi0).valid()) {
    return {false, "the elliptic images alone do not define a surface kernel "
                   "map for the genus 0 comparison"};
  }
  auto const t0 = minimal_transversal(grp, phi0, sig0);
  auto const p0 =
      simplify(raw_presentation(sig0, grp, phi0, t0));
  HomologyAction const h0 = homology_matrices(p0, t0, grp, phi0);
  std::size_t const ell = elems.size() - hyp;
  if (h0.basis.size() != ell ||
      !std::equal(h0.basis.elements.begin(), h0.basis.elements.end(),
                  elems.begin() + static_cast<std::ptrdiff_t>(hyp))) {
    return {false, "elliptic basis differs from the genus 0 computation"};
  }

  for (GroupElement const g : grp.elements()) {
    IntMatrix const& m = h.matrix(g);
    std::string const at = " for element " + grp.name(g);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        bool const row_hyp = i < hyp;
        bool const col_hyp = j < hyp;
        if (row_hyp != col_hyp && m.at(i, j) != 0) {
          return {false, "nonzero off-diagonal block entry" + at};
        }
        if (!row_hyp && !col_hyp &&
            m.at(i, j) != h0.matrix(g).at(i - hyp, j - hyp)) {
          return {false, "elliptic block differs from genus 0" + at};
        }
      }
    }
    std::vector<int> row_hits(hyp, 0);
    for (std::size_t j = 0; j < hyp; ++j) {
      int ones = 0;
      for (std::size_t i = 0; i < hyp; ++i) {
        if (m.at(i, j) == 1) {
          ++ones;
          ++row_hits[i];
        } else if (m.at(i, j) != 0) {
          return {false, "hyperbolic block is not a permutation" + at};
        }
      }
      if (ones != 1) {
        return {false, "hyperbolic block is not a permutation" + at};
      }
    }
    if (std::any_of(row_hits.begin(), row_hits.end(), [](int c) { return c != 1; })) {
      return {false, "hyperbolic block is not a permutation" + at};
    }
  }
  return {true, {}};
}

}  // namespace surfkernel
