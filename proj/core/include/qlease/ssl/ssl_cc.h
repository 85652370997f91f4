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

#ifndef QLEASE_SSL_SSL_CC_H
#define QLEASE_SSL_SSL_CC_H

#include "qlease/ssl/ssl.h"

namespace qlease::ssl {

struct Obligation {
    Bytes snum;

    Bytes serialize() const;
    static Obligation deserialize(ByteView data);
    bool operator==(const Obligation &other) const = default;
};

struct Answer {
    ClassicalPart classical;

    Bytes serialize() const;
    static Answer deserialize(ByteView data);
    bool operator==(const Answer &other) const = default;
};

/// (lightning certificate, marked program, tag).
struct ReturnCert {
    ttql::Certificate cert;
    ClassicalPart classical;

    Bytes serialize() const;
    static ReturnCert deserialize(ByteView data);
    bool operator==(const ReturnCert &other) const = default;
};

struct LesseeState {
    ttql::Bolt bolt;
};

/// ssl.pk: the lightning public key bytes.
Bytes ssl_public_key(const SslSecretKey &sk);

/// Mints a bolt under the lessor's public key. Throws BackendMismatch for keys without classical certificates.
std::pair<Obligation, LesseeState> cc_lessee1(ByteView ssl_pk, Rng &rng);
Answer cc_lessor(const SslSecretKey &sk, const Obligation &obligation, const watermark::Circuit &c, Rng &rng);
LeasedSoftware cc_lessee2(LesseeState state, const Answer &answer);
/// Certifies and consumes the bolt. Throws BoltConsumed when nothing is left to certify.
ReturnCert cc_sslcert(const SslCrs &crs, LeasedSoftware &sft, Rng &rng);
bool cc_certvrfy(const SslSecretKey &sk, const ReturnCert &cert);

}  // namespace qlease::ssl

#endif
