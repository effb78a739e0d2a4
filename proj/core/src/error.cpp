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
#include "surfkernel/error.hpp"

namespace surfkernel {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kInvalidTable: return "invalid-table";
    case ErrorCode::kNoIdentity: return "no-identity";
    case ErrorCode::kNotInvertible: return "not-invertible";
    case ErrorCode::kNonAssociative: return "non-associative";
    case ErrorCode::kInvalidSignature: return "invalid-signature";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kGenusInconsistent: return "genus-inconsistent";
    case ErrorCode::kApplicability: return "applicability";
    case ErrorCode::kUnreachableCoset: return "unreachable-coset";
    case ErrorCode::kInvalidTransversal: return "invalid-transversal";
    case ErrorCode::kNotInKernel: return "not-in-kernel";
    case ErrorCode::kSimplificationIncomplete: return "simplification-incomplete";
    case ErrorCode::kInvalidPeriod: return "invalid-period";
    case ErrorCode::kOrdering: return "ordering";
  }
  return "unknown";
}

}  // namespace surfkernel
