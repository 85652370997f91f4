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

#include "qlease/watermark/watermark.h"

#include "qlease/common/error.h"

namespace qlease::watermark {

using primitives::NizkProof;

void WmParams::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(variant));
    crs.serialize_to(out);
    if (variant == CircuitKind::Cnc) {
        owf.serialize_to(out);
    }
}

Bytes WmParams::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

WmParams WmParams::deserialize(ByteReader &in) {
    WmParams pp;
    uint8_t tag = in.u8();
    if (tag != static_cast<uint8_t>(CircuitKind::Prf) && tag != static_cast<uint8_t>(CircuitKind::Cnc)) {
        fail(ErrorCode::Decode, "unknown watermark variant");
    }
    pp.variant = static_cast<CircuitKind>(tag);
    pp.crs = primitives::NizkCrs::deserialize(in);
    if (pp.variant == CircuitKind::Cnc) {
        pp.owf = primitives::InjOwf::deserialize(in);
    }
    return pp;
}

WmSetup wm_fk_gen(CircuitKind variant, Rng &rng, uint32_t cnc_out_bits) {
    WmSetup s;
    primitives::NizkSetup nz = primitives::nizk_fk_setup(rng, "qlease-watermark");
    s.pp.variant = variant;
    s.pp.crs = std::move(nz.crs);
    s.td = std::move(nz.td);
    if (variant == CircuitKind::Cnc) {
        s.pp.owf = primitives::owf_gen(rng, cnc_out_bits);
    }
    return s;
}

WmParams wm_gen(CircuitKind variant, Rng &rng, uint32_t cnc_out_bits) {
    return wm_fk_gen(variant, rng, cnc_out_bits).pp;
}

static Bytes prf_statement(ByteView m, ByteView y0, const primitives::PuncturedKey &k0) {
    ByteWriter w;
    w.blob(m).blob(y0).blob(k0.serialize());
    return w.take();
}

static Bytes cnc_statement(const WmParams &pp, ByteView m, ByteView y, const CncTable &inner) {
    ByteWriter owf, table, w;
    pp.owf.serialize_to(owf);
    inner.serialize_to(table);
    w.blob(m).blob(owf.bytes()).blob(y).blob(table.bytes());
    return w.take();
}

Bytes WatermarkedProgram::statement(const WmParams &pp) const {
    if (variant == CircuitKind::Prf) {
        return prf_statement(message, y0, k0);
    }
    return cnc_statement(pp, message, image, inner);
}

void WatermarkedProgram::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(variant)).blob(message);
    if (variant == CircuitKind::Prf) {
        out.blob(y0).blob(k0.serialize());
    } else {
        ByteWriter t;
        inner.serialize_to(t);
        out.blob(image).blob(t.bytes());
    }
    proof.serialize_to(out);
}

Bytes WatermarkedProgram::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

WatermarkedProgram WatermarkedProgram::deserialize(ByteReader &in) {
    WatermarkedProgram p;
    uint8_t tag = in.u8();
    if (tag != static_cast<uint8_t>(CircuitKind::Prf) && tag != static_cast<uint8_t>(CircuitKind::Cnc)) {
        fail(ErrorCode::Decode, "unknown program variant");
    }
    p.variant = static_cast<CircuitKind>(tag);
    p.message = in.blob();
    if (p.variant == CircuitKind::Prf) {
        p.y0 = in.blob();
        Bytes k = in.blob();
        ByteReader kin(k);
        p.k0 = primitives::PuncturedKey::deserialize(kin);
        kin.expect_done();
    } else {
        p.image = in.blob();
        Bytes t = in.blob();
        ByteReader tin(t);
        p.inner = CncTable::deserialize(tin);
        tin.expect_done();
    }
    p.proof = NizkProof::deserialize(in);
    return p;
}

WatermarkedProgram WatermarkedProgram::deserialize(ByteView data) {
    ByteReader in(data);
    WatermarkedProgram p = deserialize(in);
    in.expect_done();
    return p;
}

primitives::Relation wm_relation(const WmParams &pp) {
    if (pp.variant == CircuitKind::Prf) {
        // Puncture is re-run deterministically and compared byte for byte.
        return [](ByteView statement, ByteView witness) {
            try {
                ByteReader s(statement);
                s.blob();
                Bytes y0 = s.blob();
                Bytes k0 = s.blob();
                s.expect_done();
                ByteReader w(witness);
                primitives::PrfKey key = primitives::PrfKey::deserialize(w);
                w.expect_done();
                return primitives::prf_eval(key, 0) == y0 && primitives::prf_puncture(key, 0).serialize() == k0;
            } catch (const Error &) {
                return false;
            }
        };
    }
    return [](ByteView statement, ByteView witness) {
        try {
            ByteReader s(statement);
            s.blob();
            Bytes owf_bytes = s.blob();
            Bytes y = s.blob();
            Bytes table = s.blob();
            s.expect_done();
            ByteReader oin(owf_bytes), tin(table), w(witness);
            primitives::InjOwf owf = primitives::InjOwf::deserialize(oin);
            CncTable inner = CncTable::deserialize(tin);
            uint64_t x = w.u64le();
            oin.expect_done();
            tin.expect_done();
            w.expect_done();
            return primitives::owf_eval_bytes(owf, inner(x)) == y;
        } catch (const Error &) {
            return false;
        }
    };
}

WatermarkedProgram wm_mark(const WmParams &pp, const Circuit &c, ByteView message, Rng &rng) {
    if (c.kind != pp.variant) {
        fail(ErrorCode::UnsupportedCircuit, "circuit kind does not match the watermark variant");
    }
    WatermarkedProgram p;
    p.variant = pp.variant;
    p.message.assign(message.begin(), message.end());
    ByteWriter witness;
    if (c.kind == CircuitKind::Prf) {
        p.y0 = primitives::prf_eval(c.prf, 0);
        p.k0 = primitives::prf_puncture(c.prf, 0);
        c.prf.serialize_to(witness);
    } else {
        std::optional<uint64_t> x = cnc_search(c.cnc);
        if (!x) {
            fail(ErrorCode::RelationViolation, "search found no accepting input");
        }
        p.image = primitives::owf_eval_bytes(pp.owf, c.cnc.alpha);
        p.inner = c.cnc.inner;
        witness.u64le(*x);
    }
    p.proof = primitives::nizk_prove(pp.crs, wm_relation(pp), p.statement(pp), witness.bytes(), rng);
    return p;
}

std::optional<Bytes> wm_extract(const WmParams &, ByteView program) {
    try {
        return WatermarkedProgram::deserialize(program).message;
    } catch (const Error &) {
        return std::nullopt;
    }
}

std::optional<Bytes> wm_eval(const WmParams &pp, const WatermarkedProgram &p, uint64_t x) {
    if (p.variant != pp.variant || !primitives::nizk_vrfy(pp.crs, p.statement(pp), p.proof)) {
        return std::nullopt;
    }
    try {
        if (p.variant == CircuitKind::Prf) {
            if (x == 0) {
                return p.y0;
            }
            return primitives::prf_peval(p.k0, x);
        }
        bool hit = primitives::owf_eval_bytes(pp.owf, p.inner(x)) == p.image;
        return Bytes{static_cast<uint8_t>(hit ? 1 : 0)};
    } catch (const Error &e) {
        if (e.code() == ErrorCode::PuncturedPointQuery) {
            return std::nullopt;
        }
        if (p.variant == CircuitKind::Cnc && e.code() == ErrorCode::Domain && x < p.inner.table.size()) {
            return Bytes{0};
        }
        throw;
    }
}

std::optional<Bytes> wm_eval(const WmParams &pp, ByteView program, uint64_t x) {
    WatermarkedProgram p;
    try {
        p = WatermarkedProgram::deserialize(program);
    } catch (const Error &) {
        return std::nullopt;
    }
    return wm_eval(pp, p, x);
}

double wm_agreement(const WmParams &pp, ByteView program, const Circuit &c) {
    WatermarkedProgram p;
    try {
        p = WatermarkedProgram::deserialize(program);
    } catch (const Error &) {
        return 0;
    }
    if (p.variant != pp.variant || !primitives::nizk_vrfy(pp.crs, p.statement(pp), p.proof)) {
        return 0;
    }
    const uint64_t n = uint64_t{1} << c.domain_bits();
    uint64_t agree = 0;
    for (uint64_t x = 0; x < n; x++) {
        std::optional<Bytes> y;
        try {
            y = wm_eval(pp, p, x);
        } catch (const Error &) {
            continue;
        }
        if (y && *y == c.evaluate(x)) {
            agree++;
        }
    }
    return static_cast<double>(agree) / static_cast<double>(n);
}

WmAdversary wm_adversary(const std::string &name) {
    if (name == "identity") {
        return [](const WmParams &, const Bytes &marked, Rng &) { return marked; };
    }
    if (name == "proof-strip") {
        return [](const WmParams &, const Bytes &marked, Rng &) {
            WatermarkedProgram p = WatermarkedProgram::deserialize(marked);
            p.proof = NizkProof{};
            return p.serialize();
        };
    }
    if (name == "message-swap") {
        return [](const WmParams &, const Bytes &marked, Rng &rng) {
            WatermarkedProgram p = WatermarkedProgram::deserialize(marked);
            Bytes fresh = random_bytes(rng, p.message.size());
            if (fresh == p.message && !fresh.empty()) {
                fresh[0] ^= 1;
            }
            p.message = std::move(fresh);
            return p.serialize();
        };
    }
    fail(ErrorCode::Usage, "unknown watermark adversary: " + name);
}

UnremovabilityOutcome unremovability_game(const WmParams &pp, const CncTable &fixed_inner,
                                          const WmAdversary &adversary, double epsilon, Rng &rng) {
    Circuit c;
    if (pp.variant == CircuitKind::Prf) {
        c = prf_circuit(primitives::prf_gen(rng, 10));
    } else {
        uint32_t alpha = static_cast<uint32_t>(uniform_below(rng, uint64_t{1} << fixed_inner.out_bits));
        c = cnc_circuit(fixed_inner, alpha);
    }
    Bytes message = random_bytes(rng, 16);
    Bytes marked = wm_mark(pp, c, message, rng).serialize();
    Bytes out = adversary(pp, marked, rng);
    UnremovabilityOutcome o;
    o.agreement = wm_agreement(pp, out, c);
    std::optional<Bytes> extracted = wm_extract(pp, out);
    o.message_changed = !extracted || *extracted != message;
    o.win = o.agreement >= epsilon && o.message_changed;
    return o;
}

}  // namespace qlease::watermark
