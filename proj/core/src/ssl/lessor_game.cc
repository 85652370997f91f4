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

#include "qlease/ssl/lessor_game.h"

#include "qlease/common/error.h"

namespace qlease::ssl {

LessorInstance make_lessor_instance(const SslConfig &config, Rng &rng) {
    LessorInstance inst;
    inst.config = config;
    inst.crs = ssl_setup(config, rng);
    inst.sk = ssl_gen(inst.crs, config, rng);
    inst.cnc_inner = watermark::cnc_table_gen(rng);
    return inst;
}

watermark::Circuit sample_circuit(const LessorInstance &inst, Rng &rng) {
    if (inst.crs.variant == watermark::CircuitKind::Prf) {
        return watermark::prf_circuit(primitives::prf_gen(rng, 10));
    }
    uint32_t alpha = static_cast<uint32_t>(uniform_below(rng, uint64_t{1} << inst.cnc_inner.out_bits));
    return watermark::cnc_circuit(inst.cnc_inner, alpha);
}

namespace {

bool unpack_program(const SslCrs &crs, const ClassicalPart &classical, Bytes &pk, Bytes &snum) {
    std::optional<Bytes> message = watermark::wm_extract(crs, classical.program);
    return message && unpack_message(*message, pk, snum);
}

ttql::Bolt empty_like(const ttql::Bolt &bolt) {
    ttql::Bolt b;
    b.registers.resize(bolt.registers.size());
    return b;
}

// A second program naming a freshly minted bolt of the same key under a different serial number,
// proof kept or stripped.
BipartiteOutput swap_serial(const SslCrs &crs, LeasedSoftware sft, bool strip, Rng &rng) {
    Bytes pk_bytes, snum;
    if (!unpack_program(crs, sft.classical, pk_bytes, snum)) {
        fail(ErrorCode::MalformedSoftware, "leased program does not name a lightning key");
    }
    // The message must actually change; at toy sizes a fresh serial can repeat the leased one.
    auto pk = ttql::PublicKey::deserialize_cached(pk_bytes);
    ttql::Minted fresh = pk->boltgen(rng);
    for (int attempt = 0; attempt < 64 && fresh.snum == snum; attempt++) {
        fresh = pk->boltgen(rng);
    }
    watermark::WatermarkedProgram p = watermark::WatermarkedProgram::deserialize(sft.classical.program);
    p.message = pack_message(pk_bytes, fresh.snum);
    if (strip) {
        p.proof = primitives::NizkProof{};
    }
    BipartiteOutput out;
    out.first = sft.classical;
    out.second = ClassicalPart{p.serialize(), sft.classical.tag};
    out.r1 = std::move(sft.bolt);
    out.r2 = std::move(fresh.bolt);
    return out;
}

bool run_accepts(LessorVariant variant, double threshold, const RunProbability &run) {
    if (variant == LessorVariant::Average) {
        return run.total() >= threshold;
    }
    return run.semi >= threshold && run.agreement >= 1.0;
}

void classify(LessorFlags &f, double threshold, const RunProbability &run, const std::optional<Bytes> &snum1,
              const Bytes &snum, const std::optional<Bytes> &msg2, const Bytes &expected) {
    f.semi_ok = run.semi >= threshold;
    f.eval_ok = run.agreement >= threshold;
    bool same_serial = snum1 && *snum1 == snum;
    bool same_mark = msg2 && *msg2 == expected;
    f.clone = same_serial && same_mark;
    f.mac_forgery = !same_serial;
    f.mark_removal = !same_mark;
}

}  // namespace

std::vector<std::string> lessor_adversary_names() {
    return {"honest", "measure-and-copy", "proof-strip", "message-swap", "classical-duplicate"};
}

LessorAdversary lessor_adversary(const std::string &name) {
    if (name == "honest") {
        return [](const SslCrs &, LeasedSoftware sft, Rng &) {
            BipartiteOutput out;
            out.first = sft.classical;
            out.second = sft.classical;
            out.r2 = empty_like(sft.bolt);
            out.r1 = std::move(sft.bolt);
            return out;
        };
    }
    if (name == "measure-and-copy") {
        return [](const SslCrs &, LeasedSoftware sft, Rng &rng) {
            BipartiteOutput out;
            out.first = sft.classical;
            out.second = sft.classical;
            out.r2 = ttql::measure_and_duplicate(sft.bolt, rng);
            out.r1 = std::move(sft.bolt);
            return out;
        };
    }
    if (name == "proof-strip" || name == "message-swap") {
        bool strip = name == "proof-strip";
        return [strip](const SslCrs &crs, LeasedSoftware sft, Rng &rng) {
            return swap_serial(crs, std::move(sft), strip, rng);
        };
    }
    if (name == "classical-duplicate") {
        return [](const SslCrs &, LeasedSoftware sft, Rng &) {
            BipartiteOutput out;
            out.first = sft.classical;
            out.second = sft.classical;
            out.r2 = empty_like(sft.bolt);
            out.r1 = std::move(sft.bolt);
            return out;
        };
    }
    fail(ErrorCode::Usage, "unknown lessor adversary: " + name);
}

LessorOutcome lessor_game(const LessorInstance &inst, LessorVariant variant, double threshold,
                          const LessorAdversary &adversary, Rng &rng) {
    watermark::Circuit c = sample_circuit(inst, rng);
    LeasedSoftware sft = ssl_lessor(inst.sk, c, rng);
    Bytes pk_bytes = inst.sk.lightning.pk->serialize();
    Bytes snum;
    {
        Bytes ignored;
        unpack_program(inst.crs, sft.classical, ignored, snum);
    }
    Bytes expected = pack_message(pk_bytes, snum);

    BipartiteOutput out = adversary(inst.crs, std::move(sft), rng);

    LessorOutcome o;
    std::optional<Bytes> snum1;
    {
        Bytes pk1, s1;
        if (unpack_program(inst.crs, out.first, pk1, s1)) {
            snum1 = std::move(s1);
        }
    }
    if (snum1) {
        o.flags.mac_ok = primitives::mac_vrfy(inst.sk.mac, *snum1, out.first.tag);
        if (o.flags.mac_ok) {
            try {
                o.flags.full_ok = inst.sk.lightning.sk->full_vrfy(*snum1, out.r1, rng);
            } catch (const Error &e) {
                if (e.code() != ErrorCode::ArityMismatch) {
                    throw;
                }
            }
        }
    }
    o.run = ssl_run_probability(inst.crs, out.r2, out.second, c);
    classify(o.flags, threshold, o.run, snum1, snum, watermark::wm_extract(inst.crs, out.second.program),
             expected);
    o.win = o.flags.mac_ok && o.flags.full_ok && run_accepts(variant, threshold, o.run);
    return o;
}

namespace {

class HonestCc : public CcAdversary {
   public:
    Obligation obligate(const SslCrs &crs, ByteView ssl_pk, Rng &rng) override {
        crs_ = crs;
        auto [obligation, state] = cc_lessee1(ssl_pk, rng);
        state_ = std::move(state);
        return obligation;
    }

    std::pair<ReturnCert, LeasedSoftware> finish(const Answer &answer, Rng &rng) override {
        LeasedSoftware sft = cc_lessee2(std::move(state_), answer);
        ReturnCert cert = cc_sslcert(crs_, sft, rng);
        return {std::move(cert), std::move(sft)};
    }

   protected:
    SslCrs crs_;
    LesseeState state_;
};

class KeepAndGuessCc : public HonestCc {
   public:
    Obligation obligate(const SslCrs &crs, ByteView ssl_pk, Rng &rng) override {
        pk_ = ttql::PublicKey::deserialize_cached(ssl_pk);
        return HonestCc::obligate(crs, ssl_pk, rng);
    }

    std::pair<ReturnCert, LeasedSoftware> finish(const Answer &answer, Rng &rng) override {
        const auto &cv = static_cast<const ttql::CvPublicKey &>(*pk_);
        ReturnCert cert;
        cert.cert.backend = cv.backend();
        cert.cert.width = cv.width();
        for (size_t i = 0; i < cv.arity(); i++) {
            uint32_t m = static_cast<uint32_t>(uniform_below(rng, 2));
            uint64_t d = 1 + uniform_below(rng, (uint64_t{1} << cv.width()) - 1);
            cert.cert.entries.emplace_back(m, d);
        }
        cert.classical = answer.classical;
        return {std::move(cert), cc_lessee2(std::move(state_), answer)};
    }

   private:
    std::shared_ptr<const ttql::PublicKey> pk_;
};

class MeasureAndCopyCc : public HonestCc {
   public:
    std::pair<ReturnCert, LeasedSoftware> finish(const Answer &answer, Rng &rng) override {
        LeasedSoftware kept{ttql::measure_and_duplicate(state_.bolt, rng), answer.classical};
        LeasedSoftware returned = cc_lessee2(std::move(state_), answer);
        ReturnCert cert = cc_sslcert(crs_, returned, rng);
        return {std::move(cert), std::move(kept)};
    }
};

class ClassicalDuplicateCc : public HonestCc {
   public:
    std::pair<ReturnCert, LeasedSoftware> finish(const Answer &answer, Rng &rng) override {
        LeasedSoftware returned = cc_lessee2(std::move(state_), answer);
        LeasedSoftware kept{empty_like(returned.bolt), answer.classical};
        ReturnCert cert = cc_sslcert(crs_, returned, rng);
        return {std::move(cert), std::move(kept)};
    }
};

}  // namespace

std::vector<std::string> cc_adversary_names() {
    return {"honest", "keep-and-guess", "measure-and-copy", "classical-duplicate"};
}

std::unique_ptr<CcAdversary> cc_adversary(const std::string &name) {
    if (name == "honest") {
        return std::make_unique<HonestCc>();
    }
    if (name == "keep-and-guess") {
        return std::make_unique<KeepAndGuessCc>();
    }
    if (name == "measure-and-copy") {
        return std::make_unique<MeasureAndCopyCc>();
    }
    if (name == "classical-duplicate") {
        return std::make_unique<ClassicalDuplicateCc>();
    }
    fail(ErrorCode::Usage, "unknown classical-communication adversary: " + name);
}

LessorOutcome lessor_game_cc(const LessorInstance &inst, LessorVariant variant, double threshold,
                             CcAdversary &adversary, Rng &rng) {
    watermark::Circuit c = sample_circuit(inst, rng);
    Bytes pk_bytes = ssl_public_key(inst.sk);
    Obligation obligation = adversary.obligate(inst.crs, pk_bytes, rng);
    Answer answer = cc_lessor(inst.sk, obligation, c, rng);
    Bytes expected = pack_message(pk_bytes, obligation.snum);

    auto [cert, sft] = adversary.finish(answer, rng);

    LessorOutcome o;
    std::optional<Bytes> snum1;
    {
        Bytes pk1, s1;
        if (unpack_program(inst.crs, cert.classical, pk1, s1)) {
            snum1 = std::move(s1);
        }
    }
    if (snum1) {
        o.flags.mac_ok = primitives::mac_vrfy(inst.sk.mac, *snum1, cert.classical.tag);
        if (o.flags.mac_ok) {
            o.flags.full_ok = cc_certvrfy(inst.sk, cert);
        }
    }
    o.run = ssl_run_probability(inst.crs, sft.bolt, sft.classical, c);
    classify(o.flags, threshold, o.run, snum1, obligation.snum, watermark::wm_extract(inst.crs, sft.classical.program),
             expected);
    o.win = o.flags.mac_ok && o.flags.full_ok && run_accepts(variant, threshold, o.run);
    return o;
}

}  // namespace qlease::ssl
