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

#ifndef QLEASE_PRIMITIVES_MAC_H
#define QLEASE_PRIMITIVES_MAC_H

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"

namespace qlease::primitives {

/// Multiplication in GF(2^tau); elements are the low tau bits of a uint64_t.
uint64_t gf_mul(uint64_t a, uint64_t b, uint32_t tau);
/// Reduction polynomial without the leading term; throws Parameter for unsupported tau.
uint64_t gf_modulus(uint32_t tau);
bool gf_supported(uint32_t tau);

/// One-time MAC tag = a * digest(m) + b over GF(2^tau).
struct MacKey {
    uint32_t tau = 64;
    uint64_t a = 0;
    uint64_t b = 0;

    void serialize_to(ByteWriter &out) const;
    static MacKey deserialize(ByteReader &in);
    bool operator==(const MacKey &other) const = default;
};

/// First 8 bytes of SHA-256(m), big-endian, masked to tau bits.
uint64_t mac_digest(ByteView message, uint32_t tau);

MacKey mac_gen(Rng &rng, uint32_t tau = 64);
uint64_t mac_tag(const MacKey &key, ByteView message);
/// Tag on a precomputed digest.
uint64_t mac_tag_digest(const MacKey &key, uint64_t digest);
bool mac_vrfy(const MacKey &key, ByteView message, uint64_t tag);

}  // namespace qlease::primitives

#endif
