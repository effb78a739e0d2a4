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

#include "support/properties.hpp"
#include "support/s3.hpp"

namespace surfkernel::testing {
void PrintTo(NamedGroup const& g, std::ostream* os) { *os << g.name; }

namespace {

class GroupProperties : public ::testing::TestWithParam<NamedGroup> {};

TEST_P(GroupProperties, PipelineAndHarvey) {
  PropertyTally tally;
  check_group(GetParam(), kPropertySeed + static_cast<std::uint32_t>(GetParam().group.order()),
              kCasesPerGroup, tally);
  EXPECT_GT(tally.cases, 0u);
  EXPECT_GT(tally.harvey_vectors, 0u);
  for (auto const& f : tally.failures) ADD_FAILURE() << f;
  for (auto const& f : tally.count_failures) ADD_FAILURE() << f;
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, GroupProperties, ::testing::ValuesIn(small_groups()),
                         [](auto const& info) {
                           std::string name = info.param.name;
                           for (char& ch : name) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return name;
                         });

TEST(Properties, S3GoldenCases) {
  PropertyTally tally;
  std::mt19937 rng(kPropertySeed);
  for (std::uint32_t g0 : {0u, 1u, 2u}) {
    S3Case const c(g0);
    check_pipeline_case("S3", c.grp, c.sig, c.phi, rng, tally);
  }
  EXPECT_EQ(tally.cases, 3u);
  for (auto const& f : tally.failures) ADD_FAILURE() << f;
  for (auto const& f : tally.count_failures) ADD_FAILURE() << f;
}

TEST(Properties, FloydWarshallOracle) {
  auto const z6 = make_cyclic(6);
  OrbifoldSignature const sig(0, {6, 6});
  GeneratingVector const phi{{}, {}, {{1}, {5}}};
  EXPECT_EQ(floyd_warshall_distances(z6, phi, sig),
            (std::vector<std::size_t>{0, 1, 2, 3, 2, 1}));
}

TEST(Properties, EchelonOracle) {
  EchelonBasis const b({{1, 1, 0}, {0, 2, 2}});
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_TRUE(b.spans({1, -1, -2}));
  EXPECT_FALSE(b.spans({0, 0, 1}));
}

}  // namespace
}  // namespace surfkernel::testing
