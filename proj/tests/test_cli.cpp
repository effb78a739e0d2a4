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

#include <sstream>

#include "cli.hpp"
#include "support/s3.hpp"
#include "surfkernel/error.hpp"
#include "surfkernel/schreier.hpp"

namespace surfkernel::cli {
namespace {

std::string job(char const* name) { return std::string(SURFKERNEL_JOBS_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Genus) {
  auto const r = call({"genus", "--job", job("s3.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("g = 8"), std::string::npos);
  EXPECT_EQ(call({"genus", "--job", job("s3.json"), "--format", "machine"}).out,
            "{\"genus\":8}\n");
}

TEST(Cli, Simplify) {
  auto const r = call({"simplify", "--job", job("s3.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("16 generators, 1 relation"), std::string::npos);
  EXPECT_NE(r.out.find("linked: yes"), std::string::npos);
}

TEST(Cli, MachineDumpRoundTrips) {
  auto const r = call({"simplify", "--job", job("s3.json"), "--format", "machine"});
  ASSERT_EQ(r.code, kExitOk);
  testing::S3Case const c;
  auto const p = parse_dump(r.out, c.grp);
  EXPECT_EQ(p.generators.size(), 16u);
  EXPECT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(dump(p, c.grp), r.out);
}

TEST(Cli, Deterministic) {
  for (char const* cmd : {"present", "simplify", "homology", "adapted"}) {
    auto const first = call({cmd, "--job", job("s3.json")});
    EXPECT_EQ(first.code, kExitOk) << cmd;
    EXPECT_EQ(call({cmd, "--job", job("s3.json")}).out, first.out) << cmd;
  }
}

TEST(Cli, BadPeriod) {
  auto const r = call({"validate", "--job", job("s3_bad_period.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("xi7"), std::string::npos);
}

TEST(Cli, ParseErrors) {
  EXPECT_EQ(call({}).code, kExitParse);
  EXPECT_EQ(call({"genus", "--job", job("missing.json")}).code, kExitParse);
  EXPECT_EQ(call({"genus", "--job", job("s3.json"), "--format", "xml"}).code, kExitParse);
}

TEST(Cli, Orbit) {
  auto const r = call({"orbit", "--job", job("z3_torus_orbit.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("size: 8"), std::string::npos);
}

TEST(Cli, AdaptedVerdict) {
  auto const r = call({"adapted", "--job", job("s3.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("S[D,x2]: unclassified"), std::string::npos);
}

TEST(Cli, GenusOneBlocks) {
  auto const r = call({"homology", "--job", job("s3_genus1.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("rank 28"), std::string::npos);
}

TEST(JobParsing, Fields) {
  auto const parsed = parse_job(R"({
    "group": {"kind": "cyclic", "n": 4},
    "signature": {"genus": 1, "periods": [2]},
    "phi": {"A": [1], "B": [0], "Xi": [2]}
  })");
  EXPECT_EQ(parsed.group.order(), 4u);
  EXPECT_EQ(parsed.signature.genus(), 1u);
  EXPECT_EQ(parsed.phi.xi, std::vector{GroupElement{2}});
  EXPECT_THROW(parse_job(R"({"group": {"kind": "cyclic", "n": 4}, "bogus": 1})"), Error);
  EXPECT_THROW(parse_job("{"), Error);
}

}  // namespace
}  // namespace surfkernel::cli
