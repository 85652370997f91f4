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

#ifndef QLEASE_WIRE_MESSAGES_H
#define QLEASE_WIRE_MESSAGES_H

#include <string>

#include "qlease/ssl/ssl_cc.h"
#include "qlease/wire/frame.h"

namespace qlease::wire {

/// Deployment parameters carried by every scheme-dependent message.
struct SchemeHeader {
    ssl::LightningBackend backend = ssl::LightningBackend::CvClean;
    uint32_t reps = 0;
    uint32_t width = 0;

    void serialize_to(ByteWriter &out) const;
    static SchemeHeader deserialize(ByteReader &in);
    bool operator==(const SchemeHeader &other) const = default;
};

/// Header describing a classical-verification lightning key; BackendMismatch for other schemes.
SchemeHeader scheme_header(const ttql::PublicKey &pk);

struct ObligationMsg {
    SchemeHeader header;
    uint32_t circuit_id = 0;
    Bytes snum;

    Frame to_frame() const;
    static ObligationMsg from_frame(const Frame &f);
    bool operator==(const ObligationMsg &other) const = default;
};

struct AnswerMsg {
    SchemeHeader header;
    ssl::ClassicalPart classical;

    Frame to_frame() const;
    static AnswerMsg from_frame(const Frame &f);
};

struct ReturnCertMsg {
    SchemeHeader header;
    ssl::ReturnCert cert;

    Frame to_frame() const;
    static ReturnCertMsg from_frame(const Frame &f);
};

struct CheckResultMsg {
    bool accepted = false;

    Frame to_frame() const;
    static CheckResultMsg from_frame(const Frame &f);
};

enum class WireError : uint8_t {
    Malformed = 1,
    ProtocolOrder = 2,
    UnknownCircuit = 3,
    BackendMismatch = 4,
    FrameTooLarge = 5,
    BadVersion = 6,
    BadType = 7,
    Truncated = 8,
    Internal = 9,
};

const char *wire_error_name(WireError e);

struct ErrorMsg {
    WireError code = WireError::Internal;
    std::string detail;

    Frame to_frame() const;
    static ErrorMsg from_frame(const Frame &f);
};

/// Payload decoders throw Protocol on a type mismatch and Decode on malformed payloads.
void expect_type(const Frame &f, MsgType type);

}  // namespace qlease::wire

#endif
