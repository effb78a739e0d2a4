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

#include <map>

#include "support/groups.hpp"
#include "surfkernel/error.hpp"
#include "surfkernel/group.hpp"

namespace surfkernel {
namespace {

// Listing of the S3 products with elements 1, A=(1,2), B=(2,3), C=(1,3),
// D=(1,2,3), E=(1,3,2); row X, column Y holds XY.
std::vector<std::vector<std::uint32_t>> s3_table_by_hand() {
  enum { I, A, B, C, D, E };
  std::map<std::pair<int, int>, int> p{
      {{A, A}, I}, {{A, B}, D}, {{A, C}, E}, {{A, D}, B}, {{A, E}, C},
      {{B, A}, E}, {{B, B}, I}, {{B, C}, D}, {{B, D}, C}, {{B, E}, A},
      {{C, A}, D}, {{C, B}, E}, {{C, C}, I}, {{C, D}, A}, {{C, E}, B},
      {{D, A}, C}, {{D, B}, A}, {{D, C}, B}, {{D, D}, E}, {{D, E}, I},
      {{E, A}, B}, {{E, B}, C}, {{E, C}, A}, {{E, D}, I}, {{E, E}, D},
  };
  std::vector<std::vector<std::uint32_t>> t(6, std::vector<std::uint32_t>(6));
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      t[x][y] = x == I ? y : y == I ? x : p.at({x, y});
    }
  }
  return t;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kDomain;
}

TEST(Cyclic, TrivialGroup) {
  auto const g = make_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.element_order(GroupElement::identity()), 1u);
}

TEST(Cyclic, OrderTwoTable) {
  auto const g = make_cyclic(2);
  EXPECT_EQ(g.mul({0}, {1}), GroupElement{1});
  EXPECT_EQ(g.mul({1}, {1}), GroupElement{0});
  EXPECT_EQ(g.element_order({1}), 2u);
}

TEST(Cyclic, GeneratorOfZ6HasOrderSix) {
  auto const g = make_cyclic(6);
  EXPECT_EQ(g.element_order({1}), 6u);
  EXPECT_EQ(g.element_order({2}), 3u);
  EXPECT_EQ(g.element_order({3}), 2u);
}

TEST(Cyclic, ZeroIsInvalid) {
  EXPECT_EQ(code_of([] { make_cyclic(0); }), ErrorCode::kInvalidOrder);
}

TEST(Symmetric, S3EnumerationAndProducts) {
  auto const g = make_symmetric(3);
  ASSERT_EQ(g.order(), 6u);
  std::vector<std::string> const expected{"()", "(1,2)", "(2,3)", "(1,3)",
                                          "(1,2,3)", "(1,3,2)"};
  EXPECT_EQ(g.names(), expected);
  GroupElement const A{1}, B{2}, D{4}, E{5};
  EXPECT_EQ(g.mul(A, B), D);
  EXPECT_EQ(g.mul(D, D), E);
  EXPECT_EQ(g.mul(D, E), GroupElement::identity());
}

TEST(Symmetric, MatchesHandTable) {
  auto const by_hand = FiniteGroup::from_table(s3_table_by_hand());
  EXPECT_EQ(by_hand, make_symmetric(3));
}

TEST(Symmetric, DegreeOneIsTrivial) { EXPECT_EQ(make_symmetric(1).order(), 1u); }

TEST(Symmetric, CapacityLimit) {
  EXPECT_EQ(make_symmetric(6).order(), 720u);
  EXPECT_EQ(code_of([] { make_symmetric(7); }), ErrorCode::kCapacity);
}

TEST(Symmetric, CycleNotationLookup) {
  auto const g = make_symmetric(4);
  auto const p = g.find("(1 2)(3,4)");
  ASSERT_TRUE(p);
  EXPECT_EQ(g.name(*p), "(1,2)(3,4)");
  EXPECT_EQ(g.find("id"), GroupElement::identity());
  EXPECT_EQ(g.find("(2,3,1)"), g.find("(1,2,3)"));
  EXPECT_FALSE(g.find("(1,5)"));
  EXPECT_FALSE(g.find("(1,1)"));
  // (1,2)(2,3) composes right to left: 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ(g.find("(1,2)(2,3)"), g.find("(1,2,3)"));
}

TEST(FromTable, Trivial) { EXPECT_EQ(FiniteGroup::from_table({{0}}).order(), 1u); }

TEST(FromTable, DistinctValidationErrors) {
  EXPECT_EQ(code_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }),
            ErrorCode::kNotInvertible);
  EXPECT_EQ(code_of([] { FiniteGroup::from_table({{1, 0}, {0, 1}}); }),
            ErrorCode::kNoIdentity);
  EXPECT_EQ(code_of([] { FiniteGroup::from_table({{0, 1}, {1}}); }),
            ErrorCode::kInvalidTable);
  EXPECT_EQ(code_of([] { FiniteGroup::from_table({{0, 2}, {1, 0}}); }),
            ErrorCode::kInvalidTable);
  // A Latin square with identity 0 that is not associative.
  std::vector<std::vector<std::uint32_t>> const loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { FiniteGroup::from_table(loop); }),
            ErrorCode::kNonAssociative);
}

TEST(FromTable, RejectsBadNames) {
  auto const g = make_cyclic(2);
  EXPECT_EQ(code_of([&] { g.with_names({"a", "a"}); }), ErrorCode::kShape);
  EXPECT_EQ(code_of([&] { g.with_names({"a"}); }), ErrorCode::kShape);
  EXPECT_EQ(code_of([&] { g.with_names({"a", "b c"}); }), ErrorCode::kShape);
}

TEST(CyclicSpan, Examples) {
  auto const g = make_symmetric(3);
  GroupElement const A{1}, D{4}, E{5};
  for (GroupElement const h : g.elements()) {
    EXPECT_TRUE(in_cyclic_span(GroupElement::identity(), h, g));
  }
  EXPECT_TRUE(in_cyclic_span(E, D, g));
  EXPECT_FALSE(in_cyclic_span(A, D, g));
}

TEST(GroupProperties, AxiomsOrdersAndSpans) {
  for (auto const& [name, g] : testing::small_groups()) {
    SCOPED_TRACE(name);
    auto const els = g.elements();
    for (auto const x : els) {
      EXPECT_EQ(g.order() % g.element_order(x), 0u);
      EXPECT_TRUE(g.power(x, g.element_order(x)).is_identity());
      EXPECT_EQ(g.mul(x, g.inverse(x)), GroupElement::identity());
      for (auto const y : els) {
        for (auto const z : els) {
          ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        }
        std::vector<GroupElement> powers;
        for (std::uint32_t k = 0; k < g.element_order(y); ++k) {
          powers.push_back(g.power(y, k));
        }
        bool const brute =
            std::find(powers.begin(), powers.end(), x) != powers.end();
        EXPECT_EQ(in_cyclic_span(x, y, g), brute);
      }
    }
  }
}

TEST(GroupCatalogue, OrdersAndInvariants) {
  std::map<std::string, std::size_t> expected{
      {"Z2xZ2", 4}, {"S3", 6},  {"Z2xZ4", 8}, {"Z2^3", 8},  {"D4", 8},
      {"Q8", 8},    {"Z3xZ3", 9}, {"D5", 10}, {"Z2xZ6", 12}, {"D6", 12},
      {"A4", 12},   {"Dic3", 12}};
  for (auto const& [name, g] : testing::small_groups()) {
    if (expected.contains(name)) {
      EXPECT_EQ(g.order(), expected[name]) << name;
    }
  }
  auto involutions = [](FiniteGroup const& g) {
    int c = 0;
    for (auto x : g.elements()) c += g.element_order(x) == 2;
    return c;
  };
  EXPECT_EQ(involutions(testing::quaternion()), 1);
  EXPECT_EQ(involutions(testing::dicyclic12()), 1);
  EXPECT_EQ(involutions(testing::alternating4()), 3);
  EXPECT_FALSE(testing::quaternion().is_abelian());
}

}  // namespace
}  // namespace surfkernel
