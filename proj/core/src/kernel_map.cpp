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
#include "surfkernel/kernel_map.hpp"

#include <algorithm>
#include <numeric>

#include "surfkernel/error.hpp"

namespace surfkernel {

namespace {

template <class Vector>
auto& slot(Vector& phi, GenKind kind) {
  switch (kind) {
    case GenKind::kA:
      return phi.a;
    case GenKind::kB:
      return phi.b;
    case GenKind::kX:
      break;
  }
  return phi.xi;
}

}  // namespace

GroupElement GeneratingVector::image(GenSymbol s) const {
  auto const& v = slot(*this, s.kind);
  if (s.index == 0 || s.index > v.size()) {
    throw Error(ErrorCode::kDomain,
                "generating vector has no image for " + to_string(s));
  }
  return v[s.index - 1];
}

GroupElement& GeneratingVector::image(GenSymbol s) {
  auto& v = slot(*this, s.kind);
  if (s.index == 0 || s.index > v.size()) {
    throw Error(ErrorCode::kDomain,
                "generating vector has no image for " + to_string(s));
  }
  return v[s.index - 1];
}

GroupElement evaluate(GeneratingVector const& phi, Word const& w,
                      FiniteGroup const& grp) {
  GroupElement acc = GroupElement::identity();
  for (WordLetter const& l : w) {
    GroupElement const g = phi.image(l.symbol);
    acc = grp.mul(acc, l.exponent > 0 ? g : grp.inverse(g));
  }
  return acc;
}

bool ValidationReport::valid() const {
  if (!long_relation_ok || !surjective) {
    return false;
  }
  for (bool const ok : period_orders_ok) {
    if (!ok) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  if (!long_relation_ok) {
    out.emplace_back("long relation does not evaluate to the identity");
  }
  for (std::size_t j = 0; j < period_orders_ok.size(); ++j) {
    if (!period_orders_ok[j]) {
      out.push_back("order of xi" + std::to_string(j + 1) +
                    " differs from period m" + std::to_string(j + 1));
    }
  }
  if (!surjective) {
    out.emplace_back("images do not generate the group");
  }
  return out;
}

ValidationReport validate(OrbifoldSignature const& sig, FiniteGroup const& grp,
                          GeneratingVector const& phi) {
  if (phi.a.size() != sig.genus() || phi.b.size() != sig.genus() ||
      phi.xi.size() != sig.r()) {
    throw Error(ErrorCode::kShape,
                "generating vector has shape (" + std::to_string(phi.a.size()) +
                    "," + std::to_string(phi.b.size()) + "," +
                    std::to_string(phi.xi.size()) + "), signature " +
                    to_string(sig) + " needs (" + std::to_string(sig.genus()) +
                    "," + std::to_string(sig.genus()) + "," +
                    std::to_string(sig.r()) + ")");
  }
  std::vector<GroupElement> all;
  for (auto const* part : {&phi.a, &phi.b, &phi.xi}) {
    for (GroupElement const g : *part) {
      if (g.index >= grp.order()) {
        throw Error(ErrorCode::kShape, "generating vector entry " +
                                           std::to_string(g.index) +
                                           " is not a group element");
      }
      all.push_back(g);
    }
  }

  ValidationReport report;
  report.long_relation_ok =
      evaluate(phi, long_relation(sig), grp).is_identity();
  for (std::uint32_t j = 1; j <= sig.r(); ++j) {
    report.period_orders_ok.push_back(grp.element_order(phi.xi[j - 1]) ==
                                      sig.period(j));
  }
  auto const closure = grp.generated_subgroup(all);
  report.surjective =
      std::find(closure.begin(), closure.end(), false) == closure.end();
  return report;
}

std::uint64_t kernel_genus(OrbifoldSignature const& sig, std::uint64_t n) {
  // 2g - 2 as an exact fraction num / den.
  std::int64_t num = static_cast<std::int64_t>(n) *
                     (2 * static_cast<std::int64_t>(sig.genus()) - 2);
  std::int64_t den = 1;
  for (std::uint32_t const m : sig.periods()) {
    std::int64_t const add_num = static_cast<std::int64_t>(n) * (m - 1);
    std::int64_t const add_den = m;
    num = num * add_den + add_num * den;
    den *= add_den;
    std::int64_t const d = std::gcd(num, den);
    if (d != 0) {
      num /= d;
      den /= d;
    }
  }
  if (num % den != 0 || (num / den) % 2 != 0 || num / den < -2) {
    throw Error(ErrorCode::kGenusInconsistent,
                "Riemann-Hurwitz gives 2g-2 = " + std::to_string(num) + "/" +
                    std::to_string(den) + " for signature " + to_string(sig) +
                    " and n = " + std::to_string(n));
  }
  return static_cast<std::uint64_t>((num / den + 2) / 2);
}

std::string to_string(GeneratingVector const& phi, FiniteGroup const& grp) {
  std::string out = "(";
  auto emit = [&](std::vector<GroupElement> const& part, bool& first) {
    for (GroupElement const g : part) {
      if (!first) {
        out += ',';
      }
      out += grp.name(g);
      first = false;
    }
  };
  bool first = true;
  for (std::size_t i = 0; i < phi.a.size(); ++i) {
    if (!first) {
      out += ',';
    }
    out += grp.name(phi.a[i]) + "," + grp.name(phi.b[i]);
    first = false;
  }
  out += ';';
  first = true;
  emit(phi.xi, first);
  return out + ")";
}

}  // namespace surfkernel
