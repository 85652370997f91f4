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

#include "qlease/watermark/circuits.h"

#include <numeric>

#include "qlease/common/error.h"

namespace qlease::watermark {

const char *circuit_kind_name(CircuitKind k) {
    return k == CircuitKind::Prf ? "prf" : "cnc";
}

uint32_t CncTable::operator()(uint64_t x) const {
    if (x >= table.size()) {
        fail(ErrorCode::Domain, "input outside the circuit domain");
    }
    return table[x];
}

void CncTable::serialize_to(ByteWriter &out) const {
    out.u32le(in_bits).u32le(out_bits);
    for (uint32_t v : table) {
        out.u32le(v);
    }
}

CncTable CncTable::deserialize(ByteReader &in) {
    CncTable t;
    t.in_bits = in.u32le();
    t.out_bits = in.u32le();
    if (t.in_bits == 0 || t.in_bits > 16 || t.out_bits == 0 || t.out_bits > 32) {
        fail(ErrorCode::Decode, "circuit widths out of range");
    }
    t.table.resize(size_t{1} << t.in_bits);
    for (auto &v : t.table) {
        v = in.u32le();
        if (t.out_bits < 32 && (v >> t.out_bits) != 0) {
            fail(ErrorCode::Decode, "table entry wider than the output");
        }
    }
    return t;
}

std::optional<uint64_t> cnc_search(const CncCircuit &c) {
    for (uint64_t x = 0; x < c.inner.table.size(); x++) {
        if (c.accepts(x)) {
            return x;
        }
    }
    return std::nullopt;
}

CncTable cnc_table_gen(Rng &rng, uint32_t in_bits, uint32_t out_bits) {
    if (in_bits == 0 || in_bits > 16 || out_bits == 0 || out_bits > in_bits) {
        fail(ErrorCode::Parameter, "need 1 <= out_bits <= in_bits <= 16");
    }
    std::vector<uint32_t> pi(size_t{1} << in_bits);
    std::iota(pi.begin(), pi.end(), 0);
    for (size_t i = pi.size(); i > 1; i--) {
        std::swap(pi[i - 1], pi[uniform_below(rng, i)]);
    }
    const uint32_t mask = (uint32_t{1} << out_bits) - 1;
    for (auto &v : pi) {
        v &= mask;
    }
    return CncTable{in_bits, out_bits, std::move(pi)};
}

uint32_t Circuit::domain_bits() const {
    return kind == CircuitKind::Prf ? prf.domain_bits : cnc.inner.in_bits;
}

Bytes Circuit::evaluate(uint64_t x) const {
    if (kind == CircuitKind::Prf) {
        return primitives::prf_eval(prf, x);
    }
    return Bytes{static_cast<uint8_t>(cnc.accepts(x) ? 1 : 0)};
}

void Circuit::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(kind));
    if (kind == CircuitKind::Prf) {
        prf.serialize_to(out);
    } else {
        cnc.inner.serialize_to(out);
        out.u32le(cnc.alpha);
    }
}

Circuit Circuit::deserialize(ByteReader &in) {
    uint8_t tag = in.u8();
    if (tag == static_cast<uint8_t>(CircuitKind::Prf)) {
        return prf_circuit(primitives::PrfKey::deserialize(in));
    }
    if (tag == static_cast<uint8_t>(CircuitKind::Cnc)) {
        CncTable inner = CncTable::deserialize(in);
        uint32_t alpha = in.u32le();
        return cnc_circuit(std::move(inner), alpha);
    }
    fail(ErrorCode::Decode, "unknown circuit kind");
}

Circuit prf_circuit(const primitives::PrfKey &key) {
    Circuit c;
    c.kind = CircuitKind::Prf;
    c.prf = key;
    return c;
}

Circuit cnc_circuit(CncTable inner, uint32_t alpha) {
    Circuit c;
    c.kind = CircuitKind::Cnc;
    c.cnc = CncCircuit{std::move(inner), alpha};
    return c;
}

}  // namespace qlease::watermark
