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

#include "qlease/lattice/gaussian.h"

#include <cmath>
#include <numbers>

#include "qlease/common/error.h"

namespace qlease::lattice {

double gaussian_weight(double x, double s) {
    return std::exp(-std::numbers::pi * x * x / (s * s));
}

std::vector<double> residue_pmf(double s, uint32_t q) {
    if (!(s > 0)) {
        fail(ErrorCode::Parameter, "gaussian width must be positive");
    }
    std::vector<double> pmf(q);
    double total = 0;
    for (uint32_t v = 0; v < q; v++) {
        pmf[v] = gaussian_weight(static_cast<double>(center(v, q)), s);
        total += pmf[v];
    }
    for (auto &p : pmf) {
        p /= total;
    }
    return pmf;
}

ModQVector gaussian_sample(double s, size_t dim, uint32_t q, Rng &rng) {
    std::vector<double> pmf = residue_pmf(s, q);
    std::vector<uint32_t> e(dim);
    for (auto &v : e) {
        v = static_cast<uint32_t>(sample_weighted(rng, pmf));
    }
    return ModQVector(q, std::move(e));
}

}  // namespace qlease::lattice
