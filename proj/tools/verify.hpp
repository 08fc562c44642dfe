// Copyright 2026 The qudual Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>

namespace qudual::cli {

enum class VerifyLevel { kFast, kFull };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::kFull;
    std::uint64_t seed = 42;
    /// Multiplies every tolerance. A negative scale makes checks fail; the
    /// harness uses it to prove that failures reach the exit code.
    double tolerance_scale = 1.0;
};

/// Runs every invariant suite and prints per-suite counts. Returns the
/// number of failed checks. Output is a pure function of the options.
int run_verify(const VerifyOptions &options, std::ostream &out);

} // namespace qudual::cli
