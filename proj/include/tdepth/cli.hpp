// Copyright 2026 The tdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace tdepth::cli {

/// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;   // usage, parse or domain errors
inline constexpr int kExitFailed = 3;  // verification or table diff failure

/// Entry point of the `tdepth` tool with injectable streams. Commands:
/// synth, estimate, verify, tables, gadget-check.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tdepth::cli
