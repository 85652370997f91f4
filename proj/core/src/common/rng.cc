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

#include "qlease/common/rng.h"

#include "qlease/common/error.h"

namespace qlease {

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_below(Rng &rng, uint64_t n) {
    if (n == 0) {
        fail(ErrorCode::Parameter, "uniform_below(0)");
    }
    uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    while (true) {
        uint64_t v = rng();
        if (v < limit) {
            return v % n;
        }
    }
}

Bytes random_bytes(Rng &rng, size_t n) {
    Bytes out(n);
    for (size_t i = 0; i < n; i += 8) {
        uint64_t v = rng();
        for (size_t k = 0; k < 8 && i + k < n; k++) {
            out[i + k] = static_cast<uint8_t>(v >> (8 * k));
        }
    }
    return out;
}

size_t sample_weighted(Rng &rng, std::span<const double> weights) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    if (!(total > 0)) {
        fail(ErrorCode::EmptySupport, "all weights are zero");
    }
    double target = uniform01(rng) * total;
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        if (weights[i] <= 0) {
            continue;
        }
        last_nonzero = i;
        acc += weights[i];
        if (target < acc) {
            return i;
        }
    }
    // Rounding can leave target == total; fall back to the last supported index.
    return last_nonzero;
}

uint64_t derive_seed(uint64_t base, uint64_t index) {
    uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace qlease
