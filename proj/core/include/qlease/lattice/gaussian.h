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

#ifndef QLEASE_LATTICE_GAUSSIAN_H
#define QLEASE_LATTICE_GAUSSIAN_H

#include <cstdint>
#include <vector>

#include "qlease/common/rng.h"
#include "qlease/lattice/modq.h"

namespace qlease::lattice {

/// rho_s(x) = exp(-pi x^2 / s^2).
double gaussian_weight(double x, double s);

/// Normalized pmf of one coordinate, indexed by residue 0..q-1, weighted on the centered value.
std::vector<double> residue_pmf(double s, uint32_t q);

/// Independent coordinates drawn from residue_pmf by inverse CDF in residue order.
ModQVector gaussian_sample(double s, size_t dim, uint32_t q, Rng &rng);

}  // namespace qlease::lattice

#endif
