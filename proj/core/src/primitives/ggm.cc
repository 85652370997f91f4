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

#include "qlease/primitives/ggm.h"

#include "qlease/common/error.h"
#include "qlease/primitives/prg.h"

namespace qlease::primitives {

static void check_domain(uint32_t bits, uint64_t x) {
    if (bits == 0 || bits > 32 || x >= (uint64_t{1} << bits)) {
        fail(ErrorCode::Domain, "PRF input outside the domain");
    }
}

static uint32_t bit_at(uint64_t x, uint32_t bits, uint32_t depth) {
    return static_cast<uint32_t>((x >> (bits - 1 - depth)) & 1);
}

static Bytes walk(Bytes node, uint64_t x, uint32_t bits, uint32_t from) {
    for (uint32_t d = from; d < bits; d++) {
        node = ggm_prg(node)[bit_at(x, bits, d)];
    }
    return node;
}

void PrfKey::serialize_to(ByteWriter &out) const {
    out.u32le(domain_bits).blob(seed);
}

PrfKey PrfKey::deserialize(ByteReader &in) {
    PrfKey k;
    k.domain_bits = in.u32le();
    k.seed = in.blob();
    if (k.domain_bits == 0 || k.domain_bits > 32 || k.seed.size() != kSeedBytes) {
        fail(ErrorCode::Decode, "malformed PRF key");
    }
    return k;
}

void PuncturedKey::serialize_to(ByteWriter &out) const {
    out.u32le(domain_bits).u64le(point);
    for (const auto &n : nodes) {
        out.raw(n);
    }
}

Bytes PuncturedKey::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

PuncturedKey PuncturedKey::deserialize(ByteReader &in) {
    PuncturedKey k;
    k.domain_bits = in.u32le();
    k.point = in.u64le();
    if (k.domain_bits == 0 || k.domain_bits > 32 || k.point >= (uint64_t{1} << k.domain_bits)) {
        fail(ErrorCode::Decode, "malformed punctured key");
    }
    for (uint32_t i = 0; i < k.domain_bits; i++) {
        ByteView n = in.raw(kSeedBytes);
        k.nodes.emplace_back(n.begin(), n.end());
    }
    return k;
}

PrfKey prf_gen(Rng &rng, uint32_t domain_bits) {
    if (domain_bits == 0 || domain_bits > 32) {
        fail(ErrorCode::Parameter, "PRF domain must be 1 to 32 bits");
    }
    return PrfKey{random_bytes(rng, kSeedBytes), domain_bits};
}

Bytes prf_eval(const PrfKey &key, uint64_t x) {
    check_domain(key.domain_bits, x);
    return walk(key.seed, x, key.domain_bits, 0);
}

PuncturedKey prf_puncture(const PrfKey &key, uint64_t point) {
    check_domain(key.domain_bits, point);
    PuncturedKey k;
    k.domain_bits = key.domain_bits;
    k.point = point;
    Bytes node = key.seed;
    for (uint32_t d = 0; d < key.domain_bits; d++) {
        auto children = ggm_prg(node);
        uint32_t b = bit_at(point, key.domain_bits, d);
        k.nodes.push_back(children[1 - b]);
        node = children[b];
    }
    return k;
}

Bytes prf_peval(const PuncturedKey &key, uint64_t x) {
    check_domain(key.domain_bits, x);
    if (x == key.point) {
        fail(ErrorCode::PuncturedPointQuery, "evaluation at the punctured point");
    }
    uint32_t d = 0;
    while (bit_at(x, key.domain_bits, d) == bit_at(key.point, key.domain_bits, d)) {
        d++;
    }
    return walk(key.nodes[d], x, key.domain_bits, d + 1);
}

}  // namespace qlease::primitives
