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

#ifndef QLEASE_QSIM_DISTANCE_H
#define QLEASE_QSIM_DISTANCE_H

#include "qlease/qsim/state.h"

namespace qlease::qsim {

/// <a|b>; throws DomainMismatch if the bases differ.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// sqrt(1 - |<a|b>|^2) for the normalized states.
double trace_distance_pure(const StateVector &a, const StateVector &b);

/// Squared Hellinger distance 1 - sum sqrt(f0 f1); throws DomainMismatch on differing sizes.
double hellinger_sq(const Density &f0, const Density &f1);

/// Trace distance of sum sqrt(f0)|x> and sum sqrt(f1)|x>: sqrt(1 - (1 - H^2)^2).
double trace_distance_from_hellinger(double h_sq);

}  // namespace qlease::qsim

#endif
