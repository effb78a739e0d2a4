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

#include "support/lattice.hpp"
#include "support/s3.hpp"
#include "surfkernel/error.hpp"
#include "surfkernel/homology.hpp"

namespace surfkernel {
namespace {

using testing::S3Case;

struct Pipeline {
  SchreierTransversal t;
  KernelPresentation raw;
  KernelPresentation simplified;
  HomologyAction h;
};

Pipeline run(FiniteGroup const& grp, OrbifoldSignature const& sig,
             GeneratingVector const& phi) {
  auto t = minimal_transversal(grp, phi, sig);
  auto raw = raw_presentation(sig, grp, phi, t);
  auto simplified = simplify(raw);
  auto h = homology_matrices(simplified, t, grp, phi);
  return {std::move(t), std::move(raw), std::move(simplified), std::move(h)};
}

IntMatrix from_rows(std::vector<std::vector<std::int64_t>> const& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

TEST(IntMatrixTest, Arithmetic) {
  auto const m = from_rows({{0, -1}, {1, -1}});
  EXPECT_EQ(m * m * m, IntMatrix::identity(2));
  EXPECT_EQ(m.column(1), (std::vector<std::int64_t>{-1, -1}));
}

class S3Homology : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    c = new S3Case();
    p = new Pipeline(run(c->grp, c->sig, c->phi));
  }
  static void TearDownTestSuite() {
    delete p;
    delete c;
  }
  static S3Case* c;
  static Pipeline* p;
};
S3Case* S3Homology::c = nullptr;
Pipeline* S3Homology::p = nullptr;

TEST_F(S3Homology, CosetTranslation) {
  auto const& grp = c->grp;
  EXPECT_EQ(act_on_generator(c->el("A"), {c->el("B"), GenSymbol::x(4)}, grp),
            (KernelGen{c->el("D"), GenSymbol::x(4)}));
  EXPECT_EQ(act_on_generator(c->el("A"), {c->el("D"), GenSymbol::x(7)}, grp),
            (KernelGen{c->el("B"), GenSymbol::x(7)}));
}

TEST_F(S3Homology, BasisOrder) {
  auto const& basis = p->h.basis;
  ASSERT_EQ(basis.size(), 16u);
  std::string listed;
  for (KernelGen const s : basis.elements) listed += to_string(s, c->grp) + " ";
  EXPECT_EQ(listed,
            "S[D,x2] S[E,x2] S[D,x3] S[E,x3] S[D,x4] S[E,x4] S[D,x5] S[E,x5] "
            "S[C,x6] S[D,x6] S[E,x6] S[B,x7] S[C,x7] S[E,x7] S[C,x8] S[E,x8] ");
  EXPECT_EQ(basis.index_of({c->el("C"), GenSymbol::x(8)}), 14u);
  EXPECT_FALSE(basis.index_of({c->el("1"), GenSymbol::x(8)}).has_value());
}

TEST_F(S3Homology, Representation) {
  auto const& h = p->h;
  ASSERT_EQ(h.matrices.size(), 6u);
  EXPECT_EQ(h.matrix(c->el("1")), IntMatrix::identity(16));
  EXPECT_EQ(h.matrix(c->el("D")) * h.matrix(c->el("D")), h.matrix(c->el("E")));
  EXPECT_EQ(h.matrix(c->el("A")) * h.matrix(c->el("A")), IntMatrix::identity(16));
  EXPECT_TRUE(check_representation(h, c->grp));

  HomologyAction corrupted = h;
  corrupted.matrices[c->el("B").index].at(0, 0) += 1;
  EXPECT_FALSE(check_representation(corrupted, c->grp));
}

TEST_F(S3Homology, ClassesAgreeWithRawPresentation) {
  EXPECT_TRUE(testing::matches_raw_homology(p->h, p->raw, p->t, c->grp, c->phi));
  HomologyAction shifted = p->h;
  shifted.matrices[c->el("A").index].at(3, 5) += 1;
  EXPECT_FALSE(testing::matches_raw_homology(shifted, p->raw, p->t, c->grp, c->phi));
}

TEST_F(S3Homology, ActOnBasisMatchesMatrix) {
  for (GroupElement const g : c->grp.elements()) {
    for (std::size_t k = 0; k < 16; ++k) {
      auto const w = act_on_basis(g, k, p->simplified, p->t, c->grp, c->phi);
      EXPECT_EQ(abelianize(w, p->h.basis), p->h.matrix(g).column(k));
    }
  }
}

// Translating cosets of live generators does not respect the relations, so
// the resulting matrices are not a representation.
TEST_F(S3Homology, CosetTranslationIsNotARepresentation) {
  LiveRewriter const live(p->simplified);
  HomologyAction naive{p->h.basis, {}};
  for (GroupElement const g : c->grp.elements()) {
    IntMatrix m(16);
    for (std::size_t k = 0; k < 16; ++k) {
      KernelGen const moved = act_on_generator(g, p->h.basis.elements[k], c->grp);
      auto const col = abelianize(live.rewrite(KernelWord::generator(moved)), p->h.basis);
      for (std::size_t i = 0; i < 16; ++i) m.at(i, k) = col[i];
    }
    naive.matrices.push_back(m);
  }
  EXPECT_FALSE(check_representation(naive, c->grp));
}

TEST_F(S3Homology, NotAdapted) {
  auto const report = adapted_check(p->h, c->grp);
  EXPECT_FALSE(report.adapted);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(p->h.basis.elements[*report.witness].symbol, GenSymbol::x(2));
  EXPECT_FALSE(report.reason.empty());
}

TEST_F(S3Homology, BlockCheckNeedsHyperbolicPart) {
  try {
    block_structure_check(p->h, c->sig, c->grp, c->phi);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
}

TEST(HomologyBlocks, GenusOneOverS3) {
  S3Case const c(1);
  auto const p = run(c.grp, c.sig, c.phi);
  EXPECT_EQ(p.h.basis.size(), 28u);
  auto const report = block_structure_check(p.h, c.sig, c.grp, c.phi);
  EXPECT_TRUE(report.ok) << report.reason;
  EXPECT_TRUE(check_representation(p.h, c.grp));
}

TEST(HomologyBlocks, TrivialGroupTorus) {
  auto const z1 = make_cyclic(1);
  OrbifoldSignature const sig(1, {});
  GeneratingVector const phi{{{0}}, {{0}}, {}};
  auto const p = run(z1, sig, phi);
  ASSERT_EQ(p.h.basis.size(), 2u);
  EXPECT_EQ(p.h.matrix(GroupElement{0}), IntMatrix::identity(2));
  EXPECT_TRUE(block_structure_check(p.h, sig, z1, phi).ok);
  auto const report = adapted_check(p.h, z1);
  EXPECT_TRUE(report.adapted);
  EXPECT_EQ(report.cases, (std::vector{AdaptedCase::kStabilized, AdaptedCase::kStabilized}));
}

TEST(HomologyBlocks, RejectsOutOfOrderBasis) {
  S3Case const c(1);
  auto p = run(c.grp, c.sig, c.phi);
  std::swap(p.h.basis.elements.front(), p.h.basis.elements.back());
  try {
    block_structure_check(p.h, c.sig, c.grp, c.phi);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrdering);
  }
}

HomologyAction hand_built(std::vector<IntMatrix> matrices) {
  HomologyAction h;
  for (std::uint32_t i = 0; i < matrices.front().size(); ++i) {
    h.basis.elements.push_back({GroupElement{0}, GenSymbol::a(i + 1)});
  }
  h.matrices = std::move(matrices);
  return h;
}

TEST(Adapted, FreeOrbit) {
  auto const z2 = make_cyclic(2);
  auto const h = hand_built({IntMatrix::identity(2), from_rows({{0, 1}, {1, 0}})});
  EXPECT_TRUE(check_representation(h, z2));
  auto const report = adapted_check(h, z2);
  EXPECT_TRUE(report.adapted);
  EXPECT_EQ(report.cases, (std::vector{AdaptedCase::kFreeOrbit, AdaptedCase::kFreeOrbit}));
}

TEST(Adapted, CyclicSum) {
  auto const z3 = make_cyclic(3);
  auto const m = from_rows({{0, -1}, {1, -1}});
  auto const h = hand_built({IntMatrix::identity(2), m, m * m});
  EXPECT_TRUE(check_representation(h, z3));
  auto const report = adapted_check(h, z3);
  EXPECT_TRUE(report.adapted);
  EXPECT_EQ(report.cases, (std::vector{AdaptedCase::kCyclicSum, AdaptedCase::kCyclicSum}));
}

TEST(Adapted, StabilizedAndUnclassified) {
  auto const z2 = make_cyclic(2);
  auto const fixed = adapted_check(hand_built({IntMatrix::identity(1), IntMatrix::identity(1)}), z2);
  EXPECT_TRUE(fixed.adapted);
  EXPECT_EQ(fixed.cases, std::vector{AdaptedCase::kStabilized});

  auto const mixed = adapted_check(
      hand_built({IntMatrix::identity(2), from_rows({{1, 1}, {0, -1}})}), z2);
  EXPECT_FALSE(mixed.adapted);
  EXPECT_EQ(mixed.witness, 1u);
  EXPECT_EQ(to_string(AdaptedCase::kUnclassified), "unclassified");
  EXPECT_EQ(to_string(AdaptedCase::kCyclicSum), "case 2");
}

}  // namespace
}  // namespace surfkernel
