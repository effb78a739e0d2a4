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
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfkernel/group.hpp"
#include "surfkernel/kernel_map.hpp"
#include "surfkernel/presentation.hpp"

namespace surfkernel {

enum class HarveyTag : std::uint8_t { kV1, kV2, kV3, kV4, kBhat };

/// One of the moves V1..V4 or Bhat_j (which exchanges handle pairs j and
/// j+1). `j` is only meaningful for kBhat.
struct HarveyOp {
  HarveyTag tag = HarveyTag::kV1;
  std::uint32_t j = 0;

  friend bool operator==(HarveyOp, HarveyOp) = default;
};

std::string to_string(HarveyOp op);
/// Parses "V1", "V2", "V3", "V4" or "Bhat:<j>". Errors: kParse.
HarveyOp parse_op(std::string_view token);
/// Comma-separated list of ops, applied left to right. Errors: kParse.
std::vector<HarveyOp> parse_program(std::string_view text);

/// Whether the op exists for the signature: V1, V2 need g0 >= 1, V3 needs
/// g0 >= 2, V4 needs g0 >= 1 and r >= 1, Bhat:j needs 1 <= j < g0.
bool is_applicable(HarveyOp op, OrbifoldSignature const& sig) noexcept;

/// Generator-level automorphism of the orbifold group. With c = [a_{j+1},
/// b_{j+1}]:
///   V1: a1 -> a1 b1
///   V2: a1 -> a1 b1, b1 -> a1^-1
///   V3: x_j -> a2 x_j a2^-1, a1 -> a2 a1, a2 -> b1 a2 b1^-1,
///       b2 -> a2 b2 a2^-1 b1^-1, a_i -> a2 a_i a2^-1, b_i -> a2 b_i a2^-1
///       (i >= 3)
///   V4: x_r -> a1^-1 x_r a1, a1 -> [a1^-1, x_r^-1] a1, b1 -> b1 a1^-1 x_r a1
///   Bhat:j: a_j -> a_{j+1}, b_j -> b_{j+1}, a_{j+1} -> c^-1 a_j c,
///       b_{j+1} -> c^-1 b_j c
/// Every other generator is fixed. Errors: kApplicability.
Substitution substitution_of(HarveyOp op, OrbifoldSignature const& sig);

struct OpResult {
  GeneratingVector vector;
  bool applied = false;
  std::optional<std::string> reason;
};

/// Induced action on a generating vector (all right-hand sides use the old
/// entries):
///   V1: A1 <- A1 B1
///   V2: A1 <- A1 B1, B1 <- A1^-1
///   V3: A1 <- A2 A1, A2 <- B1 A2 B1^-1, B2 <- A2 B2 A2^-1 B1^-1, and xi_j,
///       A_i, B_i (i >= 3) conjugated by A2
///   V4: B1 <- B1 xi_r, provided A1 is a power of xi_r or G is abelian
///   Bhat:j: (A_j, B_j) <- (A_{j+1}, B_{j+1}),
///       (A_{j+1}, B_{j+1}) <- (C A_j C^-1, C B_j C^-1), C = [A_{j+1}, B_{j+1}],
///       provided A_{j+1} is a power of B_{j+1}
/// A failed proviso returns the input untouched with applied = false.
/// Errors: kApplicability if the vector's shape does not admit the op.
OpResult apply_op(HarveyOp op, GeneratingVector const& phi,
                  FiniteGroup const& grp);

/// True iff substitution_of(op, sig) sends the long relation to a conjugate
/// of itself and each x_j to a conjugate of some x_k with m_k = m_j.
bool verify_automorphism(HarveyOp op, OrbifoldSignature const& sig);

/// True iff apply_op succeeds and its output agrees, generator by
/// generator, with evaluating phi on the images of substitution_of(op).
bool consistency_check(HarveyOp op, GeneratingVector const& phi,
                       FiniteGroup const& grp, OrbifoldSignature const& sig);

struct OrbitResult {
  /// Sorted by GeneratingVector's ordering (lexicographic on element
  /// indices of A, then B, then Xi).
  std::vector<GeneratingVector> vectors;
  bool truncated = false;
};

/// Breadth-first closure of {phi} under the ops that exist for the signature,
/// skipping moves whose proviso fails. Stops once `cap` vectors are known.
OrbitResult enumerate_orbit(GeneratingVector const& phi,
                            std::vector<HarveyOp> const& ops,
                            FiniteGroup const& grp,
                            OrbifoldSignature const& sig, std::size_t cap);

}  // namespace surfkernel
