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

#ifndef IFOM_RANDOM_H_
#define IFOM_RANDOM_H_

#include <cstdint>
#include <random>

#include "ifom/types.h"

namespace ifom {

// The single random source of the library.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. Uniforms take the top 53 bits of one draw; normals use the
// Marsaglia polar method on those uniforms. The <random> distribution
// classes are avoided on purpose since their algorithms are
// implementation-defined, so streams here are bit-identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform();
  double Normal();
  Vector Gaussian(int dim);
  // Uniform direction on the unit sphere in R^dim.
  Vector UnitVector(int dim);
  // Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
  // sign of diag(R) absorbed into Q).
  Matrix Orthogonal(int dim);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64 finalizer; derives independent stream seeds from a base seed
// and a stream index (per-cell, per-run seeding).
uint64_t DeriveSeed(uint64_t base, uint64_t stream);

}  // namespace ifom

#endif  // IFOM_RANDOM_H_
