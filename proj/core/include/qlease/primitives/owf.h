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

#ifndef QLEASE_PRIMITIVES_OWF_H
#define QLEASE_PRIMITIVES_OWF_H

#include "qlease/common/rng.h"
#include "qlease/lattice/modq.h"

namespace qlease::primitives {

/// alpha in [0, 2^input_bits) maps to M * bits(alpha) over Z_257, M tall with full column rank.
struct InjOwf {
    static constexpr uint32_t kModulus = 257;

    uint32_t input_bits = 8;
    lattice::ModQMatrix m;

    void serialize_to(ByteWriter &out) const;
    static InjOwf deserialize(ByteReader &in);
    bool operator==(const InjOwf &other) const = default;
};

InjOwf owf_gen(Rng &rng, uint32_t input_bits = 8);
/// Throws Domain outside the input space.
lattice::ModQVector owf_eval(const InjOwf &f, uint64_t alpha);
Bytes owf_eval_bytes(const InjOwf &f, uint64_t alpha);

}  // namespace qlease::primitives

#endif
