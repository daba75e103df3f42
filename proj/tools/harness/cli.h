// Copyright 2026 The ifom Authors
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

#ifndef IFOM_TOOLS_HARNESS_CLI_H_
#define IFOM_TOOLS_HARNESS_CLI_H_

#include <ostream>

namespace ifom::harness {

// Entry point of the `ifom` binary. Returns the process exit code.
int Main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ifom::harness

#endif  // IFOM_TOOLS_HARNESS_CLI_H_
