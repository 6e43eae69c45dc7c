// Copyright 2026 The ldcoh Authors
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


#ifndef LDCOH_TOOLS_CLI_H
#define LDCOH_TOOLS_CLI_H

#include <iosfwd>

namespace ldcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInputError = 2;

inline constexpr const char *kToolVersion = "0.1.0";

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ldcoh::cli

#endif
