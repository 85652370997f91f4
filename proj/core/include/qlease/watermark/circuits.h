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

#ifndef QLEASE_WATERMARK_CIRCUITS_H
#define QLEASE_WATERMARK_CIRCUITS_H

#include <optional>

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"
#include "qlease/primitives/ggm.h"

namespace qlease::watermark {

enum class CircuitKind : uint8_t { Prf = 1, Cnc = 2 };

const char *circuit_kind_name(CircuitKind k);

/// Inner circuit of a compute-and-compare program, as a truth table over in_bits-bit inputs.
struct CncTable {
    uint32_t in_bits = 10;
    uint32_t out_bits = 8;
    std::vector<uint32_t> table;

    uint32_t operator()(uint64_t x) const;
    void serialize_to(ByteWriter &out) const;
    static CncTable deserialize(ByteReader &in);
    bool operator==(const CncTable &other) const = default;
};

/// C[inner, alpha](x) = 1 iff inner(x) = alpha.
struct CncCircuit {
    CncTable inner;
    uint32_t alpha = 0;

    bool accepts(uint64_t x) const {
        return inner(x) == alpha;
    }
    bool operator==(const CncCircuit &other) const = default;
};

/// Searchability: lowest accepting input, if any.
std::optional<uint64_t> cnc_search(const CncCircuit &c);

/// inner(x) = pi(x) mod 2^out_bits for a random permutation pi of the inputs.
CncTable cnc_table_gen(Rng &rng, uint32_t in_bits = 10, uint32_t out_bits = 8);

/// A leasable program: a PRF key or a compute-and-compare circuit.
struct Circuit {
    CircuitKind kind = CircuitKind::Prf;
    primitives::PrfKey prf;
    CncCircuit cnc;

    uint32_t domain_bits() const;
    /// PRF: 16 output bytes; CnC: a single byte 0 or 1.
    Bytes evaluate(uint64_t x) const;

    void serialize_to(ByteWriter &out) const;
    static Circuit deserialize(ByteReader &in);
    bool operator==(const Circuit &other) const = default;
};

Circuit prf_circuit(const primitives::PrfKey &key);
Circuit cnc_circuit(CncTable inner, uint32_t alpha);

}  // namespace qlease::watermark

#endif
