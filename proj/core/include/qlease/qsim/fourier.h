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

#ifndef QLEASE_QSIM_FOURIER_H
#define QLEASE_QSIM_FOURIER_H

#include "qlease/qsim/state.h"

namespace qlease::qsim {

/// amp'(w) = q^{-m/2} sum_x exp(2 pi i <w,x> / q) amp(x) on one Z_q^m component, in place.
/// The inverse uses the conjugate phase. Other components are spectators.
void qft_component(StateVector &state, size_t component, bool inverse = false);

/// Whole-register transforms; throw BasisMismatch unless the basis is exactly Z_q^m.
void qft_zqm(StateVector &state);
void inverse_qft_zqm(StateVector &state);

/// k-fold Hadamard on one bit-string component, in place.
void hadamard_component(StateVector &state, size_t component);

/// Throws BasisMismatch unless the basis is exactly {0,1}^k.
void hadamard_bits(StateVector &state);

}  // namespace qlease::qsim

#endif
