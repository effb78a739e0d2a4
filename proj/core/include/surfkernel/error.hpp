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

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfkernel {

enum class ErrorCode {
  kInvalidOrder,
  kCapacity,
  kInvalidTable,
  kNoIdentity,
  kNotInvertible,
  kNonAssociative,
  kInvalidSignature,
  kDomain,
  kShape,
  kParse,
  kGenusInconsistent,
  kApplicability,
  kUnreachableCoset,
  kInvalidTransversal,
  kNotInKernel,
  kSimplificationIncomplete,
  kInvalidPeriod,
  kOrdering,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfkernel
