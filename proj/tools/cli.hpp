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
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "surfkernel/group.hpp"
#include "surfkernel/harvey.hpp"
#include "surfkernel/kernel_map.hpp"
#include "surfkernel/presentation.hpp"

namespace surfkernel::cli {

/// A job file, decoded. Field names follow the JSON layout:
///
///   {
///     "group": {"kind": "symmetric", "degree": 3, "names": [...]},
///     "signature": {"genus": 0, "periods": [2, 2, 3]},
///     "phi": {"A": [], "B": [], "Xi": ["(1,2)", 1, "D"]},
///     "transversal": {"<element>": "<word>", ...},
///     "harvey": "V1,V2",
///     "orbit_ops": "V1,V2,V3",
///     "options": {"cap": 1000}
///   }
///
/// group.kind is one of "cyclic" (with "n"), "symmetric" (with "degree") or
/// "table" (with "table", an n x n array of element indices). Elements are
/// referenced by index or by label (a name, or cycle notation for symmetric
/// groups). All fields but group, signature and phi are optional.
struct JobSpec {
  FiniteGroup group;
  OrbifoldSignature signature;
  GeneratingVector phi;
  std::optional<std::vector<Word>> transversal;
  std::vector<HarveyOp> harvey;
  std::optional<std::vector<HarveyOp>> orbit_ops;
  std::size_t cap = 10000;
};

/// Errors: kParse for malformed JSON or unknown fields/values, plus the
/// group and signature constructors' own errors.
JobSpec parse_job(std::string_view json_text);
JobSpec load_job(std::filesystem::path const& file);

/// Reads a transversal override: a JSON object mapping element labels to
/// words. Errors: kParse.
std::vector<Word> parse_transversal(std::string_view json_text,
                                    FiniteGroup const& grp);

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitSimplification = 4,
  kExitInternal = 5,
};

/// Entry point shared by the executable and the tests; args excludes the
/// program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace surfkernel::cli
