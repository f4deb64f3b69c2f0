// Copyright 2026 The z8poly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace z8poly::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kUsageFailure = 2,  // also validation errors
  kCapExceeded = 3,
  kVerificationFailure = 4,
};

// Runs the tool with `args` (program name excluded), writing to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Formats a real number with 17 significant digits; negative zero prints as 0.
std::string format_real(double value);

// Bitstrings list the most significant index bit first.
std::string to_bitstring(std::uint64_t index, std::size_t width);

}  // namespace z8poly::cli
