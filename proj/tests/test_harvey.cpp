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
#include <gtest/gtest.h>

#include <set>

#include "support/groups.hpp"
#include "surfkernel/error.hpp"
#include "surfkernel/harvey.hpp"

namespace surfkernel {
namespace {

Word W(char const* text) { return parse_word(text); }

HarveyOp const kV1{HarveyTag::kV1, 0};
HarveyOp const kV2{HarveyTag::kV2, 0};
HarveyOp const kV3{HarveyTag::kV3, 0};
HarveyOp const kV4{HarveyTag::kV4, 0};
HarveyOp bhat(std::uint32_t j) { return {HarveyTag::kBhat, j}; }

GroupElement const A{1}, D{4}, E{5};

TEST(HarveyParse, Programs) {
  auto const ops = parse_program("V1, V2,V3,V4,Bhat:2");
  ASSERT_EQ(ops.size(), 5u);
  EXPECT_EQ(ops[4], bhat(2));
  std::string joined;
  for (auto op : ops) joined += to_string(op) + ";";
  EXPECT_EQ(joined, "V1;V2;V3;V4;Bhat:2;");
  EXPECT_TRUE(parse_program("").empty());
  for (char const* bad : {"V5", "Bhat", "Bhat:0", "Bhat:x", "V1,,V2"}) {
    EXPECT_THROW(parse_program(bad), Error) << bad;
  }
}

TEST(HarveySubstitution, ListedMaps) {
  OrbifoldSignature const sig(1, {2, 3});
  auto const v1 = substitution_of(kV1, sig);
  EXPECT_EQ(v1.image(GenSymbol::a(1)), W("a1 b1"));
  EXPECT_EQ(v1.image(GenSymbol::b(1)), W("b1"));
  EXPECT_EQ(v1.image(GenSymbol::x(2)), W("x2"));
  auto const v2 = substitution_of(kV2, sig);
  EXPECT_EQ(v2.image(GenSymbol::a(1)), W("a1 b1"));
  EXPECT_EQ(v2.image(GenSymbol::b(1)), W("a1^-1"));
  auto const v4 = substitution_of(kV4, sig);
  EXPECT_EQ(v4.image(GenSymbol::x(2)), W("a1^-1 x2 a1"));
  EXPECT_EQ(v4.image(GenSymbol::a(1)), W("a1^-1 x2^-1 a1 x2 a1"));
  EXPECT_EQ(v4.image(GenSymbol::b(1)), W("b1 a1^-1 x2 a1"));
  EXPECT_EQ(v4.image(GenSymbol::x(1)), W("x1"));

  auto const v3 = substitution_of(kV3, OrbifoldSignature(2, {2}));
  EXPECT_EQ(v3.image(GenSymbol::x(1)), W("a2 x1 a2^-1"));
  EXPECT_EQ(v3.image(GenSymbol::a(1)), W("a2 a1"));
  EXPECT_EQ(v3.image(GenSymbol::a(2)), W("b1 a2 b1^-1"));
  EXPECT_EQ(v3.image(GenSymbol::b(2)), W("a2 b2 a2^-1 b1^-1"));
  EXPECT_EQ(v3.image(GenSymbol::b(1)), W("b1"));
}

TEST(HarveySubstitution, Applicability) {
  EXPECT_THROW(substitution_of(kV1, {0, {2, 2, 2}}), Error);
  EXPECT_THROW(substitution_of(kV3, {1, {2}}), Error);
  EXPECT_THROW(substitution_of(kV4, {1, {}}), Error);
  EXPECT_THROW(substitution_of(bhat(1), {1, {2}}), Error);
  EXPECT_NO_THROW(substitution_of(bhat(2), {3, {}}));
}

TEST(HarveyVerify, ListedExamples) {
  EXPECT_TRUE(verify_automorphism(kV1, {1, {}}));
  EXPECT_TRUE(verify_automorphism(kV3, {2, {2}}));
  EXPECT_TRUE(verify_automorphism(kV4, {1, {2}}));
}

TEST(HarveyVerify, AllOpsOnSmallSignatures) {
  std::vector<OrbifoldSignature> const sigs{
      {1, {}},     {1, {2}},       {1, {2, 3}}, {2, {}},    {2, {2}},
      {2, {3, 2}}, {3, {}},        {3, {2}},    {4, {5}},   {3, {2, 2, 4}}};
  for (auto const& sig : sigs) {
    std::vector<HarveyOp> ops{kV1, kV2, kV3, kV4};
    for (std::uint32_t j = 1; j < sig.genus(); ++j) ops.push_back(bhat(j));
    for (auto op : ops) {
      if (is_applicable(op, sig)) {
        EXPECT_TRUE(verify_automorphism(op, sig)) << to_string(op) << to_string(sig);
      }
    }
  }
}

// Conjugating x_r by a1 instead of a1^-1 in V4, or the new second pair by c
// instead of c^-1 in Bhat, breaks the long relation.
TEST(HarveyVerify, WrongConjugationsFail) {
  OrbifoldSignature const sig(1, {2});
  Substitution v4 = Substitution::identity(sig);
  Word const a1 = W("a1"), x1 = W("x1");
  v4.set(GenSymbol::x(1), a1 * x1 * a1.inverse());
  v4.set(GenSymbol::a(1), commutator(a1, x1.inverse()) * a1);
  v4.set(GenSymbol::b(1), W("b1 a1^-1 x1 a1"));
  EXPECT_FALSE(are_conjugate(apply_substitution(long_relation(sig), v4),
                             long_relation(sig)));

  OrbifoldSignature const sig2(2, {2});
  Substitution bh = Substitution::identity(sig2);
  Word const c = commutator(W("a2"), W("b2"));
  bh.set(GenSymbol::a(1), W("a2"));
  bh.set(GenSymbol::b(1), W("b2"));
  bh.set(GenSymbol::a(2), c * W("a1") * c.inverse());
  bh.set(GenSymbol::b(2), c * W("b1") * c.inverse());
  EXPECT_FALSE(are_conjugate(apply_substitution(long_relation(sig2), bh),
                             long_relation(sig2)));
}

TEST(HarveyApply, CyclicExamples) {
  auto const z6 = make_cyclic(6);
  auto r = apply_op(kV1, {{{1}}, {{0}}, {}}, z6);
  EXPECT_TRUE(r.applied);
  EXPECT_EQ(r.vector.a[0], GroupElement{1});
  r = apply_op(kV2, {{{1}}, {{2}}, {}}, z6);
  EXPECT_EQ(r.vector.a[0], GroupElement{3});
  EXPECT_EQ(r.vector.b[0], GroupElement{5});
}

TEST(HarveyApply, V4Proviso) {
  auto const s3 = make_symmetric(3);
  auto r = apply_op(kV4, {{E}, {A}, {D}}, s3);
  EXPECT_TRUE(r.applied);
  EXPECT_EQ(r.vector.b[0], s3.mul(A, D));
  EXPECT_EQ(r.vector.b[0], GroupElement{2});  // AD = B

  GeneratingVector const blocked{{A}, {A}, {D}};
  r = apply_op(kV4, blocked, s3);
  EXPECT_FALSE(r.applied);
  ASSERT_TRUE(r.reason.has_value());
  EXPECT_EQ(r.vector, blocked);
}

TEST(HarveyApply, V4AbelianWithoutProviso) {
  auto const z6 = make_cyclic(6);
  // A1 = 1 is not a power of xi = 3, but Z6 is abelian.
  auto const r = apply_op(kV4, {{{1}}, {{0}}, {{3}}}, z6);
  EXPECT_TRUE(r.applied);
  EXPECT_EQ(r.vector.b[0], GroupElement{3});
}

TEST(HarveyApply, BhatSwapsPairs) {
  auto const s3 = make_symmetric(3);
  GeneratingVector const phi{{A, D}, {D, E}, {}};
  auto const r = apply_op(bhat(1), phi, s3);
  ASSERT_TRUE(r.applied);
  GeneratingVector const expected{{D, A}, {E, D}, {}};
  EXPECT_EQ(r.vector, expected);
  auto const blocked = apply_op(bhat(1), GeneratingVector{{D, A}, {E, D}, {}}, s3);
  EXPECT_FALSE(blocked.applied);
}

TEST(HarveyConsistency, ExhaustiveOverZ2) {
  auto const z2 = make_cyclic(2);
  std::vector<OrbifoldSignature> const sigs{{1, {}}, {1, {2, 2}}, {2, {}},
                                            {2, {2, 2}}, {3, {}}};
  for (auto const& sig : sigs) {
    std::size_t const len = 2 * sig.genus() + sig.r();
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      GeneratingVector phi;
      std::size_t bit = 0;
      auto next = [&] { return GroupElement{(mask >> bit++) & 1u}; };
      for (std::uint32_t i = 0; i < sig.genus(); ++i) phi.a.push_back(next());
      for (std::uint32_t i = 0; i < sig.genus(); ++i) phi.b.push_back(next());
      for (std::uint32_t j = 0; j < sig.r(); ++j) phi.xi.push_back(next());
      if (!validate(sig, z2, phi).valid()) continue;
      std::vector<HarveyOp> ops{kV1, kV2, kV3, kV4};
      for (std::uint32_t j = 1; j < sig.genus(); ++j) ops.push_back(bhat(j));
      for (auto op : ops) {
        if (is_applicable(op, sig) && apply_op(op, phi, z2).applied) {
          EXPECT_TRUE(consistency_check(op, phi, z2, sig))
              << to_string(op) << to_string(sig);
        }
      }
    }
  }
}

TEST(HarveyV2, SixthPowerIsIdentityOnAbelianGroups) {
  for (auto const& [name, g] : testing::small_groups()) {
    if (!g.is_abelian()) continue;
    for (auto a : g.elements()) {
      for (auto b : g.elements()) {
        GeneratingVector phi{{a}, {b}, {}};
        GeneratingVector cur = phi;
        for (int k = 0; k < 6; ++k) cur = apply_op(kV2, cur, g).vector;
        EXPECT_EQ(cur, phi) << name;
      }
    }
  }
}

TEST(HarveyV2, SixthPowerIsInnerOnFreeGroup) {
  OrbifoldSignature const sig(1, {});
  auto const v2 = substitution_of(kV2, sig);
  Substitution power = Substitution::identity(sig);
  for (int k = 0; k < 6; ++k) {
    Substitution next = Substitution::identity(sig);
    for (GenSymbol const s : sig.alphabet()) {
      next.set(s, apply_substitution(v2.image(s), power));
    }
    power = next;
  }
  Word const c = commutator(W("a1"), W("b1"));
  bool matched = false;
  for (Word const& by : {c, c.inverse()}) {
    matched = matched ||
              (power.image(GenSymbol::a(1)) == by * W("a1") * by.inverse() &&
               power.image(GenSymbol::b(1)) == by * W("b1") * by.inverse());
  }
  EXPECT_TRUE(matched) << to_string(power.image(GenSymbol::a(1)));
}

TEST(HarveyOrbit, NoOps) {
  auto const z3 = make_cyclic(3);
  GeneratingVector const phi{{{1}}, {{0}}, {}};
  auto const r = enumerate_orbit(phi, {}, z3, {1, {}}, 100);
  ASSERT_EQ(r.vectors.size(), 1u);
  EXPECT_EQ(r.vectors[0], phi);
  EXPECT_FALSE(r.truncated);
}

TEST(HarveyOrbit, NoHyperbolicGenerators) {
  auto const z2 = make_cyclic(2);
  GeneratingVector phi{{}, {}, std::vector<GroupElement>(6, GroupElement{1})};
  auto const r = enumerate_orbit(phi, {kV1, kV2, kV3, kV4}, z2,
                                 {0, {2, 2, 2, 2, 2, 2}}, 100);
  ASSERT_EQ(r.vectors.size(), 1u);
  EXPECT_EQ(r.vectors[0], phi);
}

TEST(HarveyOrbit, Z3TorusAgainstBruteForce) {
  auto const z3 = make_cyclic(3);
  // Closure over all 9 pairs using the additive formulas directly.
  std::set<std::pair<int, int>> reach{{1, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [a, b] : std::set(reach)) {
      for (auto next : {std::pair{(a + b) % 3, b}, std::pair{(a + b) % 3, (3 - a) % 3}}) {
        grew = reach.insert(next).second || grew;
      }
    }
  }
  auto const r = enumerate_orbit({{{1}}, {{0}}, {}}, {kV1, kV2}, z3, {1, {}}, 100);
  std::set<std::pair<int, int>> got;
  for (auto const& v : r.vectors) got.insert({v.a[0].index, v.b[0].index});
  EXPECT_EQ(got, reach);
  EXPECT_TRUE(std::is_sorted(r.vectors.begin(), r.vectors.end()));
}

TEST(HarveyOrbit, Truncation) {
  auto const z3 = make_cyclic(3);
  auto const r = enumerate_orbit({{{1}}, {{0}}, {}}, {kV1, kV2}, z3, {1, {}}, 2);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.vectors.size(), 2u);
}

}  // namespace
}  // namespace surfkernel
