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

#ifndef QLEASE_PRIMITIVES_GGM_H
#define QLEASE_PRIMITIVES_GGM_H

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"

namespace qlease::primitives {

/// GGM tree key. Inputs are domain_bits wide and walk the tree most significant bit first.
struct PrfKey {
    Bytes seed;
    uint32_t domain_bits = 10;

    void serialize_to(ByteWriter &out) const;
    static PrfKey deserialize(ByteReader &in);
    bool operator==(const PrfKey &other) const = default;
};

/// Key punctured at one point: nodes[i] is the seed of the sibling of the path node at depth i + 1.
struct PuncturedKey {
    uint32_t domain_bits = 0;
    uint64_t point = 0;
    std::vector<Bytes> nodes;

    void serialize_to(ByteWriter &out) const;
    Bytes serialize() const;
    static PuncturedKey deserialize(ByteReader &in);
    bool operator==(const PuncturedKey &other) const = default;
};

PrfKey prf_gen(Rng &rng, uint32_t domain_bits = 10);
Bytes prf_eval(const PrfKey &key, uint64_t x);
PuncturedKey prf_puncture(const PrfKey &key, uint64_t point);
/// Throws PuncturedPointQuery at the punctured point and Domain outside the input space.
Bytes prf_peval(const PuncturedKey &key, uint64_t x);

}  // namespace qlease::primitives

#endif
