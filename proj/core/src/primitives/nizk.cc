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

#include "qlease/primitives/nizk.h"

#include <sodium.h>

#include "qlease/common/error.h"
#include "qlease/primitives/hash.h"

namespace qlease::primitives {

void NizkCrs::serialize_to(ByteWriter &out) const {
    out.blob(public_key).blob(domain);
}

NizkCrs NizkCrs::deserialize(ByteReader &in) {
    NizkCrs crs;
    crs.public_key = in.blob();
    crs.domain = in.blob();
    if (crs.public_key.size() != crypto_box_PUBLICKEYBYTES) {
        fail(ErrorCode::Decode, "malformed crs");
    }
    return crs;
}

void NizkProof::serialize_to(ByteWriter &out) const {
    out.blob(digest).blob(capsule).blob(tag);
}

NizkProof NizkProof::deserialize(ByteReader &in) {
    NizkProof p;
    p.digest = in.blob();
    p.capsule = in.blob();
    p.tag = in.blob();
    return p;
}

NizkSetup nizk_fk_setup(Rng &rng, std::string_view domain) {
    init_crypto();
    Bytes seed = random_bytes(rng, crypto_box_SEEDBYTES);
    NizkSetup s;
    s.crs.public_key.resize(crypto_box_PUBLICKEYBYTES);
    s.td.secret_key.resize(crypto_box_SECRETKEYBYTES);
    crypto_box_seed_keypair(s.crs.public_key.data(), s.td.secret_key.data(), seed.data());
    s.crs.domain.assign(domain.begin(), domain.end());
    return s;
}

NizkCrs nizk_setup(Rng &rng, std::string_view domain) {
    return nizk_fk_setup(rng, domain).crs;
}

Bytes nizk_statement_digest(const NizkCrs &crs, ByteView statement) {
    return hash_parts({crs.domain, statement});
}

static Bytes binding_tag(const NizkCrs &crs, ByteView digest, ByteView capsule) {
    ByteWriter w;
    crs.serialize_to(w);
    return hash_parts({w.bytes(), digest, capsule});
}

static Bytes capsule_nonce(ByteView eph_pk, ByteView digest) {
    Bytes h = hash_parts({eph_pk, digest});
    h.resize(crypto_box_NONCEBYTES);
    return h;
}

// Capsule = ephemeral public key || box(witness) to the extraction key.
static NizkProof seal(const NizkCrs &crs, ByteView statement, ByteView witness, Rng &rng) {
    init_crypto();
    NizkProof p;
    p.digest = nizk_statement_digest(crs, statement);
    Bytes seed = random_bytes(rng, crypto_box_SEEDBYTES);
    Bytes eph_pk(crypto_box_PUBLICKEYBYTES), eph_sk(crypto_box_SECRETKEYBYTES);
    crypto_box_seed_keypair(eph_pk.data(), eph_sk.data(), seed.data());
    Bytes nonce = capsule_nonce(eph_pk, p.digest);
    Bytes ct(witness.size() + crypto_box_MACBYTES);
    if (crypto_box_easy(ct.data(), witness.data(), witness.size(), nonce.data(), crs.public_key.data(),
                        eph_sk.data()) != 0) {
        fail(ErrorCode::Parameter, "capsule encryption failed");
    }
    sodium_memzero(eph_sk.data(), eph_sk.size());
    p.capsule = concat(eph_pk, ct);
    p.tag = binding_tag(crs, p.digest, p.capsule);
    return p;
}

NizkProof nizk_prove(const NizkCrs &crs, const Relation &relation, ByteView statement, ByteView witness, Rng &rng) {
    if (!relation(statement, witness)) {
        fail(ErrorCode::RelationViolation, "witness does not satisfy the relation");
    }
    return seal(crs, statement, witness, rng);
}

bool nizk_vrfy(const NizkCrs &crs, ByteView statement, const NizkProof &proof) {
    if (proof.capsule.size() < crypto_box_PUBLICKEYBYTES + crypto_box_MACBYTES) {
        return false;
    }
    return proof.digest == nizk_statement_digest(crs, statement) &&
           proof.tag == binding_tag(crs, proof.digest, proof.capsule);
}

NizkProof nizk_sim1(const NizkCrs &crs, const NizkTrapdoor &td, ByteView statement, ByteView planted, Rng &rng) {
    if (td.secret_key.size() != crypto_box_SECRETKEYBYTES) {
        fail(ErrorCode::Parameter, "malformed trapdoor");
    }
    return seal(crs, statement, planted, rng);
}

Bytes nizk_sim2(const NizkCrs &crs, const NizkTrapdoor &td, ByteView statement, const NizkProof &proof) {
    init_crypto();
    if (!nizk_vrfy(crs, statement, proof) || td.secret_key.size() != crypto_box_SECRETKEYBYTES) {
        fail(ErrorCode::ExtractFailure, "proof does not verify");
    }
    ByteView eph_pk(proof.capsule.data(), crypto_box_PUBLICKEYBYTES);
    ByteView ct = ByteView(proof.capsule).subspan(crypto_box_PUBLICKEYBYTES);
    Bytes nonce = capsule_nonce(eph_pk, proof.digest);
    Bytes w(ct.size() - crypto_box_MACBYTES);
    if (crypto_box_open_easy(w.data(), ct.data(), ct.size(), nonce.data(), eph_pk.data(), td.secret_key.data()) != 0) {
        fail(ErrorCode::ExtractFailure, "capsule does not authenticate");
    }
    return w;
}

}  // namespace qlease::primitives
