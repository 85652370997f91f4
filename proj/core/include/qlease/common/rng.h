// Copyright 2026 The qlease Authors
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

#ifndef QLEASE_COMMON_RNG_H
#define QLEASE_COMMON_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "qlease/common/bytes.h"

namespace qlease {

/// The engine's output sequence is fixed by the C++ standard, so seeded runs are portable.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Uniform integer in [0, n). Rejection sampling, so no modulo bias.
uint64_t uniform_below(Rng &rng, uint64_t n);

Bytes random_bytes(Rng &rng, size_t n);

/// Index i with probability weights[i] / sum, by inverse CDF in index order.
/// Zero-weight entries are never returned.
size_t sample_weighted(Rng &rng, std::span<const double> weights);

/// Seed for trial `index` of a run seeded with `base` (splitmix64 finalizer).
uint64_t derive_seed(uint64_t base, uint64_t index);

}  // namespace qlease

#endif
