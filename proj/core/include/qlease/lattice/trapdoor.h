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

#ifndef QLEASE_LATTICE_TRAPDOOR_H
#define QLEASE_LATTICE_TRAPDOOR_H

#include <cstdint>
#include <vector>

#include "qlease/common/rng.h"
#include "qlease/lattice/modq.h"

namespace qlease::lattice {

struct SisParams {
    uint32_t n = 1;
    uint32_t m = 3;
    uint32_t q = 71;
    /// Norm bound of SIS witnesses; bolts are verified against beta / 2.
    double beta = 35;
    double s_beta = 14;
    /// Dual threshold: |center(<v_i, w>)| < h.
    uint32_t h = 4;
    uint32_t r = 2;
    double s_alpha = 1.5;
    double bound_alpha = 1.5;
    uint32_t max_retries = 64;

    /// Throws Error(Parameter) on violated invariants.
    void validate() const;

    /// Small instance (n=1, m=3, q=31) with r columns, for exhaustive tests.
    static SisParams tiny(uint32_t r = 1);

    void serialize_to(ByteWriter &out) const;
    static SisParams deserialize(ByteReader &in);
    bool operator==(const SisParams &other) const = default;
};

struct SisTrapdoor {
    std::vector<ModQVector> columns;
    double s_alpha = 0;

    void serialize_to(ByteWriter &out) const;
    static SisTrapdoor deserialize(ByteReader &in);
    bool operator==(const SisTrapdoor &other) const = default;
};

struct TrapGenResult {
    ModQMatrix a;
    SisTrapdoor td;
};

/// Planted trapdoor: short kernel columns first, then A uniform in their left annihilator.
TrapGenResult trapgen(const SisParams &params, Rng &rng);

/// True iff s != 0, A s = 0 mod q and ||s|| <= beta on the centered view.
bool sis_witness_check(const ModQMatrix &a, const ModQVector &s, double beta);

/// ||x|| <= beta / 2 for a squared centered norm, compared as 4 ||x||^2 <= beta^2.
bool within_half_beta(int64_t norm_sq, double beta);

}  // namespace qlease::lattice

#endif
