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

#include "qlease/qsim/distance.h"

#include <algorithm>
#include <cmath>

#include "qlease/common/error.h"

namespace qlease::qsim {

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (!(a.basis() == b.basis())) {
        fail(ErrorCode::DomainMismatch, "states live on different bases");
    }
    Amplitude acc = 0;
    for (uint64_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double trace_distance_pure(const StateVector &a, const StateVector &b) {
    double overlap = std::norm(inner_product(a, b)) / (a.norm_sq() * b.norm_sq());
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double hellinger_sq(const Density &f0, const Density &f1) {
    if (f0.size() != f1.size()) {
        fail(ErrorCode::DomainMismatch, "densities have different domains");
    }
    double bc = 0;
    for (size_t i = 0; i < f0.size(); i++) {
        bc += std::sqrt(f0[i] * f1[i]);
    }
    return std::max(0.0, 1.0 - bc);
}

double trace_distance_from_hellinger(double h_sq) {
    double bc = 1.0 - h_sq;
    return std::sqrt(std::max(0.0, 1.0 - bc * bc));
}

}  // namespace qlease::qsim
