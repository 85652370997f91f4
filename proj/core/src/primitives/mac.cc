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

#include "qlease/primitives/mac.h"

#include "qlease/common/error.h"
#include "qlease/primitives/hash.h"

namespace qlease::primitives {

// Low part of the numerically smallest irreducible x^tau + low over GF(2), tau = 2..64.
static constexpr uint64_t kLowParts[] = {
    0x3, 0x3, 0x3, 0x5, 0x3, 0x3, 0x1b, 0x3, 0x9, 0x5, 0x9, 0x1b,
    0x21, 0x3, 0x2b, 0x9, 0x9, 0x27, 0x9, 0x5, 0x3, 0x21, 0x1b, 0x9,
    0x1b, 0x27, 0x3, 0x5, 0x3, 0x9, 0x8d, 0x4b, 0x1b, 0x5, 0x35, 0x3f,
    0x63, 0x11, 0x39, 0x9, 0x27, 0x59, 0x21, 0x1b, 0x3, 0x21, 0x2d, 0x71,
    0x1d, 0x4b, 0x9, 0x47, 0x7d, 0x47, 0x95, 0x11, 0x63, 0x7b, 0x3, 0x27,
    0x69, 0x3, 0x1b,
};

bool gf_supported(uint32_t tau) {
    return tau >= 2 && tau <= 64;
}

uint64_t gf_modulus(uint32_t tau) {
    if (!gf_supported(tau)) {
        fail(ErrorCode::Parameter, "field degree must be in [2, 64]");
    }
    return kLowParts[tau - 2];
}

uint64_t gf_mul(uint64_t a, uint64_t b, uint32_t tau) {
    const uint64_t low = gf_modulus(tau);
    const uint64_t mask = tau == 64 ? ~uint64_t{0} : (uint64_t{1} << tau) - 1;
    const uint64_t top = uint64_t{1} << (tau - 1);
    a &= mask;
    b &= mask;
    uint64_t r = 0;
    while (b != 0) {
        if (b & 1) {
            r ^= a;
        }
        b >>= 1;
        bool carry = (a & top) != 0;
        a = (a << 1) & mask;
        if (carry) {
            a ^= low;
        }
    }
    return r;
}

void MacKey::serialize_to(ByteWriter &out) const {
    out.u32le(tau).u64le(a).u64le(b);
}

MacKey MacKey::deserialize(ByteReader &in) {
    MacKey k;
    k.tau = in.u32le();
    k.a = in.u64le();
    k.b = in.u64le();
    if (!gf_supported(k.tau) || (k.tau < 64 && ((k.a | k.b) >> k.tau) != 0)) {
        fail(ErrorCode::Decode, "malformed MAC key");
    }
    return k;
}

uint64_t mac_digest(ByteView message, uint32_t tau) {
    Bytes h = sha256(message);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) {
        v = (v << 8) | h[i];
    }
    return tau == 64 ? v : v & ((uint64_t{1} << tau) - 1);
}

MacKey mac_gen(Rng &rng, uint32_t tau) {
    gf_modulus(tau);
    uint64_t mask = tau == 64 ? ~uint64_t{0} : (uint64_t{1} << tau) - 1;
    MacKey k;
    k.tau = tau;
    k.a = rng() & mask;
    k.b = rng() & mask;
    return k;
}

uint64_t mac_tag_digest(const MacKey &key, uint64_t digest) {
    return gf_mul(key.a, digest, key.tau) ^ key.b;
}

uint64_t mac_tag(const MacKey &key, ByteView message) {
    return mac_tag_digest(key, mac_digest(message, key.tau));
}

bool mac_vrfy(const MacKey &key, ByteView message, uint64_t tag) {
    return mac_tag(key, message) == tag;
}

}  // namespace qlease::primitives
