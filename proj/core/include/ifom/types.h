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

#ifndef IFOM_TYPES_H_
#define IFOM_TYPES_H_

#include <stdexcept>
#include <string>

#include "Eigen/Core"

namespace ifom {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Raised for inputs that violate an operation's preconditions (bad constants,
// unknown names, policies used outside their domain). The CLI maps it to
// exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ifom

#endif  // IFOM_TYPES_H_
