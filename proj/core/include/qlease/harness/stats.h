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

#ifndef QLEASE_HARNESS_STATS_H
#define QLEASE_HARNESS_STATS_H

#include <cstdint>

namespace qlease::harness {

/// Two-sided 99% normal quantile.
constexpr double kZ99 = 2.5758293035489004;

struct Interval {
    double lower = 0;
    double upper = 1;
};

/// Wilson score interval for `wins` successes in `trials` Bernoulli trials. [0, 1] when trials = 0.
Interval wilson(uint64_t wins, uint64_t trials, double z = kZ99);

/// Win rate that tolerates zero trials.
double rate(uint64_t wins, uint64_t trials);

}  // namespace qlease::harness

#endif
