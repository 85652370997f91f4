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

#include <cstdlib>

#include "factory.h"
#include "qlease/common/error.h"
#include "qlease/lattice/gaussian.h"

namespace qlease::ntcf {

using lattice::ModQMatrix;
using lattice::ModQVector;

static ModQVector uniform_vector(uint32_t q, size_t dim, Rng &rng) {
    std::vector<uint32_t> e(dim);
    for (auto &v : e) {
        v = static_cast<uint32_t>(uniform_below(rng, q));
    }
    return ModQVector(q, std::move(e));
}

static ModQVector truncated_noise(const LweParams &p, Rng &rng) {
    std::vector<double> pmf = lattice::residue_pmf(p.e0_width, p.q);
    for (uint32_t v = 0; v < p.q; v++) {
        if (std::llabs(lattice::center(v, p.q)) > static_cast<int64_t>(p.e0_bound)) {
            pmf[v] = 0;
        }
    }
    std::vector<uint32_t> e(p.ell);
    for (auto &v : e) {
        v = static_cast<uint32_t>(sample_weighted(rng, pmf));
    }
    return ModQVector(p.q, std::move(e));
}

// Every nonzero z must move A z outside the box of radius 2B + E0; this makes the branch
// preimages unique and keeps the two branches of a claw apart.
static bool injective_enough(const ModQMatrix &a, const LweParams &p) {
    int64_t radius = 2 * static_cast<int64_t>(p.noise_bound) + p.e0_bound;
    uint64_t count = 1;
    for (uint32_t i = 0; i < p.n; i++) {
        count *= p.q;
    }
    for (uint64_t k = 1; k < count; k++) {
        std::vector<uint32_t> z(p.n);
        uint64_t t = k;
        for (size_t i = p.n; i-- > 0;) {
            z[i] = static_cast<uint32_t>(t % p.q);
            t /= p.q;
        }
        bool inside = true;
        for (int64_t c : a.mul(ModQVector(p.q, z)).centered()) {
            if (std::llabs(c) > radius) {
                inside = false;
                break;
            }
        }
        if (inside) {
            return false;
        }
    }
    return true;
}

NtcfPair NtcfFactory::make_lwe(const LweParams &p, uint32_t j_width, Rng &rng) {
    if (!lattice::is_odd_prime(p.q) || p.n == 0 || p.ell == 0 || p.e0_width <= 0 ||
        4 * uint64_t{p.noise_bound} + 2 * uint64_t{p.e0_bound} + 1 >= p.q) {
        fail(ErrorCode::Parameter, "invalid lwe parameters");
    }
    uint64_t xs = 1, ys = 1;
    for (uint32_t i = 0; i < p.n; i++) {
        xs *= p.q;
    }
    for (uint32_t i = 0; i < p.ell; i++) {
        ys *= p.q;
    }
    check_sizes(xs, ys, j_width);

    for (uint32_t attempt = 0; attempt < p.max_retries; attempt++) {
        std::vector<uint32_t> entries(size_t{p.ell} * p.n);
        for (auto &v : entries) {
            v = static_cast<uint32_t>(uniform_below(rng, p.q));
        }
        ModQMatrix a(p.ell, p.n, p.q, std::move(entries));
        if (!injective_enough(a, p)) {
            continue;
        }
        ModQVector s;
        do {
            s = uniform_vector(p.q, p.n, rng);
        } while (s.is_zero());
        ModQVector e0 = truncated_noise(p, rng);
        ModQVector u = a.mul(s) + e0;
        NtcfKey key = lwe_key(std::move(a), std::move(u), p.noise_bound, j_width);
        NtcfTrapdoor td = lwe_trapdoor(key, std::move(s), std::move(e0));
        return {std::move(key), std::move(td)};
    }
    fail(ErrorCode::Parameter, "no admissible lwe matrix within the retry budget");
}

}  // namespace qlease::ntcf
