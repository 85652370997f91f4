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

#include "qlease/harness/stats.h"

#include <algorithm>
#include <cmath>

namespace qlease::harness {

Interval wilson(uint64_t wins, uint64_t trials, double z) {
    if (trials == 0) {
        return {};
    }
    double n = static_cast<double>(trials);
    double p = static_cast<double>(wins) / n;
    double z2 = z * z;
    double center = (p + z2 / (2 * n)) / (1 + z2 / n);
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double rate(uint64_t wins, uint64_t trials) {
    return trials == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(trials);
}

}  // namespace qlease::harness
