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

#include "qlease/ssl/ssl_cc.h"

#include "qlease/common/error.h"

namespace qlease::ssl {

Bytes Obligation::serialize() const {
    ByteWriter w;
    w.blob(snum);
    return w.take();
}

Obligation Obligation::deserialize(ByteView data) {
    ByteReader in(data);
    Obligation o{in.blob()};
    in.expect_done();
    return o;
}

Bytes Answer::serialize() const {
    return classical.serialize();
}

Answer Answer::deserialize(ByteView data) {
    return Answer{ClassicalPart::deserialize(data)};
}

Bytes ReturnCert::serialize() const {
    ByteWriter w;
    cert.serialize_to(w);
    classical.serialize_to(w);
    return w.take();
}

ReturnCert ReturnCert::deserialize(ByteView data) {
    ByteReader in(data);
    ReturnCert r;
    r.cert = ttql::Certificate::deserialize(in);
    r.classical = ClassicalPart::deserialize(in);
    in.expect_done();
    return r;
}

Bytes ssl_public_key(const SslSecretKey &sk) {
    return sk.lightning.pk->serialize();
}

static const ttql::CvPublicKey &cv_key(const ttql::PublicKey &pk) {
    if (pk.scheme() != ttql::Scheme::Cv) {
        fail(ErrorCode::BackendMismatch, "classical communication needs a lightning scheme with certificates");
    }
    return static_cast<const ttql::CvPublicKey &>(pk);
}

std::pair<Obligation, LesseeState> cc_lessee1(ByteView ssl_pk, Rng &rng) {
    std::shared_ptr<const ttql::PublicKey> pk = ttql::PublicKey::deserialize_cached(ssl_pk);
    cv_key(*pk);
    ttql::Minted minted = pk->boltgen(rng);
    return {Obligation{std::move(minted.snum)}, LesseeState{std::move(minted.bolt)}};
}

Answer cc_lessor(const SslSecretKey &sk, const Obligation &obligation, const watermark::Circuit &c, Rng &rng) {
    cv_key(*sk.lightning.pk);
    Answer a;
    Bytes message = pack_message(sk.lightning.pk->serialize(), obligation.snum);
    a.classical.program = watermark::wm_mark(sk.pp, c, message, rng).serialize();
    a.classical.tag = primitives::mac_tag(sk.mac, obligation.snum);
    return a;
}

LeasedSoftware cc_lessee2(LesseeState state, const Answer &answer) {
    return LeasedSoftware{std::move(state.bolt), answer.classical};
}

ReturnCert cc_sslcert(const SslCrs &crs, LeasedSoftware &sft, Rng &rng) {
    if (sft.bolt.consumed()) {
        fail(ErrorCode::BoltConsumed, "the bolt was already certified");
    }
    std::optional<Bytes> message = watermark::wm_extract(crs, sft.classical.program);
    Bytes pk_bytes, snum;
    if (!message || !unpack_message(*message, pk_bytes, snum)) {
        fail(ErrorCode::MalformedSoftware, "program does not name a lightning key");
    }
    std::shared_ptr<const ttql::PublicKey> pk;
    try {
        pk = ttql::PublicKey::deserialize_cached(pk_bytes);
    } catch (const Error &e) {
        fail(ErrorCode::MalformedSoftware, e.what());
    }
    ReturnCert r;
    r.cert = cv_key(*pk).bolt_cert(sft.bolt, rng);
    r.classical = sft.classical;
    return r;
}

bool cc_certvrfy(const SslSecretKey &sk, const ReturnCert &cert) {
    if (sk.lightning.sk->scheme() != ttql::Scheme::Cv) {
        fail(ErrorCode::BackendMismatch, "certificates need the classical-verification lightning scheme");
    }
    std::optional<Bytes> message = watermark::wm_extract(sk.pp, cert.classical.program);
    Bytes pk_bytes, snum;
    if (!message || !unpack_message(*message, pk_bytes, snum)) {
        return false;
    }
    if (!primitives::mac_vrfy(sk.mac, snum, cert.classical.tag)) {
        return false;
    }
    return static_cast<const ttql::CvSecretKey &>(*sk.lightning.sk).cert_vrfy(snum, cert.cert);
}

}  // namespace qlease::ssl
