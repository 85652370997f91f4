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

#ifndef QLEASE_WATERMARK_WATERMARK_H
#define QLEASE_WATERMARK_WATERMARK_H

#include <functional>
#include <optional>
#include <string>

#include "qlease/primitives/nizk.h"
#include "qlease/primitives/owf.h"
#include "qlease/watermark/circuits.h"

namespace qlease::watermark {

struct WmParams {
    CircuitKind variant = CircuitKind::Prf;
    primitives::NizkCrs crs;
    /// Compute-and-compare variant only.
    primitives::InjOwf owf;

    void serialize_to(ByteWriter &out) const;
    Bytes serialize() const;
    static WmParams deserialize(ByteReader &in);
    bool operator==(const WmParams &other) const = default;
};

struct WmSetup {
    WmParams pp;
    primitives::NizkTrapdoor td;
};

WmParams wm_gen(CircuitKind variant, Rng &rng, uint32_t cnc_out_bits = 8);
/// Same parameters together with the proof-extraction trapdoor.
WmSetup wm_fk_gen(CircuitKind variant, Rng &rng, uint32_t cnc_out_bits = 8);

/// PRF: (m, y0, K{0}, proof). CnC: (m, y = f(alpha), inner table, proof).
struct WatermarkedProgram {
    CircuitKind variant = CircuitKind::Prf;
    Bytes message;
    Bytes y0;
    primitives::PuncturedKey k0;
    Bytes image;
    CncTable inner;
    primitives::NizkProof proof;

    Bytes statement(const WmParams &pp) const;
    Bytes serialize() const;
    void serialize_to(ByteWriter &out) const;
    /// Throws Decode.
    static WatermarkedProgram deserialize(ByteView data);
    static WatermarkedProgram deserialize(ByteReader &in);
    bool operator==(const WatermarkedProgram &other) const = default;
};

/// Membership test for the statement of the configured variant.
primitives::Relation wm_relation(const WmParams &pp);

/// Throws UnsupportedCircuit for a circuit of the other variant, RelationViolation when search fails.
WatermarkedProgram wm_mark(const WmParams &pp, const Circuit &c, ByteView message, Rng &rng);

/// Message field verbatim; nullopt for undecodable bytes.
std::optional<Bytes> wm_extract(const WmParams &pp, ByteView program);

/// nullopt stands for the rejection symbol.
std::optional<Bytes> wm_eval(const WmParams &pp, const WatermarkedProgram &program, uint64_t x);
std::optional<Bytes> wm_eval(const WmParams &pp, ByteView program, uint64_t x);

/// Fraction of the domain on which the program agrees with c, computed exhaustively.
double wm_agreement(const WmParams &pp, ByteView program, const Circuit &c);

using WmAdversary = std::function<Bytes(const WmParams &pp, const Bytes &marked, Rng &rng)>;

/// identity, proof-strip, message-swap. Throws Usage for other names.
WmAdversary wm_adversary(const std::string &name);

struct UnremovabilityOutcome {
    bool win = false;
    double agreement = 0;
    bool message_changed = false;
};

/// One run: sample a circuit (PRF: uniform key; CnC: fixed inner table, uniform alpha), mark a random
/// message, and test agreement >= epsilon together with a changed extracted message.
UnremovabilityOutcome unremovability_game(const WmParams &pp, const CncTable &fixed_inner,
                                          const WmAdversary &adversary, double epsilon, Rng &rng);

}  // namespace qlease::watermark

#endif
