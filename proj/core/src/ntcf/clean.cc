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

#include <numeric>

#include "factory.h"
#include "qlease/common/error.h"

namespace qlease::ntcf {

static std::vector<uint32_t> random_permutation(uint32_t n, Rng &rng) {
    std::vector<uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (uint32_t i = n; i > 1; i--) {
        uint32_t j = static_cast<uint32_t>(uniform_below(rng, i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

// f0 = g and f1 = g o sigma^{-1} for a random bijection g and a random matching sigma,
// so every y has exactly one preimage under each branch.
NtcfPair NtcfFactory::make_clean(const CleanParams &params, uint32_t j_width, Rng &rng) {
    if (params.x_bits == 0 || params.x_bits > 12) {
        fail(ErrorCode::Parameter, "clean x_bits must be in [1, 12]");
    }
    uint32_t n = uint32_t{1} << params.x_bits;
    check_sizes(n, n, j_width);
    std::vector<uint32_t> g = random_permutation(n, rng);
    std::vector<uint32_t> sigma = random_permutation(n, rng);
    std::vector<uint32_t> f1(n);
    for (uint32_t x = 0; x < n; x++) {
        f1[sigma[x]] = g[x];
    }
    NtcfKey key = clean_key(params.x_bits, j_width, g, std::move(f1));
    NtcfTrapdoor td = clean_trapdoor(key);
    return {std::move(key), std::move(td)};
}

}  // namespace qlease::ntcf
