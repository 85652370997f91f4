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

#include "qlease/ssl/ssl.h"

#include "qlease/common/error.h"

namespace qlease::ssl {

const char *backend_name(LightningBackend b) {
    switch (b) {
        case LightningBackend::Sis:
            return "sis";
        case LightningBackend::CvClean:
            return "cv-clean";
        case LightningBackend::CvLwe:
            return "cv-lwe";
    }
    return "?";
}

LightningBackend parse_backend(const std::string &name) {
    for (auto b : {LightningBackend::Sis, LightningBackend::CvClean, LightningBackend::CvLwe}) {
        if (name == backend_name(b)) {
            return b;
        }
    }
    fail(ErrorCode::Usage, "unknown backend: " + name + " (expected sis, cv-clean or cv-lwe)");
}

Bytes SslSecretKey::serialize() const {
    ByteWriter w;
    pp.serialize_to(w);
    w.blob(lightning.pk->serialize()).blob(lightning.sk->serialize());
    mac.serialize_to(w);
    return w.take();
}

SslSecretKey SslSecretKey::deserialize(ByteView data) {
    ByteReader in(data);
    SslSecretKey sk;
    sk.pp = watermark::WmParams::deserialize(in);
    Bytes pk_bytes = in.blob();
    Bytes sk_bytes = in.blob();
    std::shared_ptr<const ttql::PublicKey> pk = ttql::PublicKey::deserialize(pk_bytes);
    sk.lightning.pk = pk;
    sk.lightning.sk = ttql::SecretKey::deserialize(sk_bytes, pk);
    sk.mac = primitives::MacKey::deserialize(in);
    in.expect_done();
    return sk;
}

void ClassicalPart::serialize_to(ByteWriter &out) const {
    out.blob(program).u64le(tag);
}

Bytes ClassicalPart::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

ClassicalPart ClassicalPart::deserialize(ByteReader &in) {
    ClassicalPart c;
    c.program = in.blob();
    c.tag = in.u64le();
    return c;
}

ClassicalPart ClassicalPart::deserialize(ByteView data) {
    ByteReader in(data);
    ClassicalPart c = deserialize(in);
    in.expect_done();
    return c;
}

Bytes pack_message(ByteView pk, ByteView snum) {
    ByteWriter w;
    w.blob(pk).blob(snum);
    return w.take();
}

bool unpack_message(ByteView message, Bytes &pk, Bytes &snum) {
    try {
        ByteReader in(message);
        pk = in.blob();
        snum = in.blob();
        in.expect_done();
        return true;
    } catch (const Error &) {
        return false;
    }
}

SslCrs ssl_setup(const SslConfig &config, Rng &rng) {
    return watermark::wm_gen(config.circuit, rng);
}

SslSecretKey ssl_gen(const SslCrs &crs, const SslConfig &config, Rng &rng) {
    SslSecretKey sk;
    sk.pp = crs;
    if (config.lightning == LightningBackend::Sis) {
        sk.lightning = ttql::sis_setup(config.sis, rng);
    } else {
        ttql::CvParams cv = config.cv;
        cv.ntcf.backend = config.lightning == LightningBackend::CvClean ? ntcf::Backend::Clean : ntcf::Backend::Lwe;
        sk.lightning = ttql::cv_setup(cv, rng);
    }
    sk.mac = primitives::mac_gen(rng, config.mac_tau);
    return sk;
}

LeasedSoftware ssl_lessor(const SslSecretKey &sk, const watermark::Circuit &c, Rng &rng) {
    ttql::Minted minted = sk.lightning.pk->boltgen(rng);
    LeasedSoftware sft;
    Bytes message = pack_message(sk.lightning.pk->serialize(), minted.snum);
    sft.classical.program = watermark::wm_mark(sk.pp, c, message, rng).serialize();
    sft.classical.tag = primitives::mac_tag(sk.mac, minted.snum);
    sft.bolt = std::move(minted.bolt);
    return sft;
}

namespace {

struct Named {
    std::shared_ptr<const ttql::PublicKey> pk;
    Bytes snum;
};

// Extract pk' || snum' from the program; nullopt when any layer fails to decode.
std::optional<Named> named_lightning(const SslCrs &crs, const ClassicalPart &classical) {
    std::optional<Bytes> message = watermark::wm_extract(crs, classical.program);
    if (!message) {
        return std::nullopt;
    }
    Named n;
    Bytes pk_bytes;
    if (!unpack_message(*message, pk_bytes, n.snum)) {
        return std::nullopt;
    }
    try {
        n.pk = ttql::PublicKey::deserialize_cached(pk_bytes);
    } catch (const Error &) {
        return std::nullopt;
    }
    return n;
}

}  // namespace

std::optional<Bytes> extracted_snum(const SslCrs &crs, const ClassicalPart &classical) {
    std::optional<Named> n = named_lightning(crs, classical);
    if (!n) {
        return std::nullopt;
    }
    return n->snum;
}

std::optional<Bytes> ssl_run(const SslCrs &crs, LeasedSoftware &sft, uint64_t x, Rng &rng) {
    std::optional<Named> n = named_lightning(crs, sft.classical);
    if (!n) {
        fail(ErrorCode::MalformedSoftware, "program does not name a lightning key and serial number");
    }
    if (!n->pk->semi_vrfy(n->snum, sft.bolt, rng)) {
        return std::nullopt;
    }
    return watermark::wm_eval(crs, sft.classical.program, x);
}

RunProbability ssl_run_probability(const SslCrs &crs, const ttql::Bolt &bolt, const ClassicalPart &classical,
                                   const watermark::Circuit &c) {
    RunProbability p;
    std::optional<Named> n = named_lightning(crs, classical);
    if (!n) {
        return p;
    }
    p.semi = n->pk->semi_probability(n->snum, bolt);
    p.agreement = watermark::wm_agreement(crs, classical.program, c);
    return p;
}

static std::optional<Bytes> checked_snum(const SslSecretKey &sk, const ClassicalPart &classical) {
    std::optional<Bytes> message = watermark::wm_extract(sk.pp, classical.program);
    Bytes pk_bytes, snum;
    if (!message || !unpack_message(*message, pk_bytes, snum)) {
        return std::nullopt;
    }
    return snum;
}

bool ssl_check(const SslSecretKey &sk, LeasedSoftware &sft, Rng &rng) {
    std::optional<Bytes> snum = checked_snum(sk, sft.classical);
    if (!snum) {
        fail(ErrorCode::MalformedSoftware, "program does not carry a serial number");
    }
    if (!primitives::mac_vrfy(sk.mac, *snum, sft.classical.tag)) {
        return false;
    }
    try {
        return sk.lightning.sk->full_vrfy(*snum, sft.bolt, rng);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ArityMismatch) {
            return false;
        }
        throw;
    }
}

double ssl_check_probability(const SslSecretKey &sk, const ttql::Bolt &bolt, const ClassicalPart &classical) {
    std::optional<Bytes> snum = checked_snum(sk, classical);
    if (!snum || !primitives::mac_vrfy(sk.mac, *snum, classical.tag)) {
        return 0;
    }
    try {
        return sk.lightning.sk->full_probability(*snum, bolt);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ArityMismatch) {
            return 0;
        }
        throw;
    }
}

}  // namespace qlease::ssl
