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

#include "qlease/wire/messages.h"

#include "qlease/common/error.h"
#include "qlease/ttql/cv_lightning.h"

namespace qlease::wire {

void SchemeHeader::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(backend)).u32le(reps).u32le(width);
}

SchemeHeader SchemeHeader::deserialize(ByteReader &in) {
    SchemeHeader h;
    uint8_t b = in.u8();
    if (b < 1 || b > 3) {
        fail(ErrorCode::Decode, "unknown backend tag " + std::to_string(b));
    }
    h.backend = static_cast<ssl::LightningBackend>(b);
    h.reps = in.u32le();
    h.width = in.u32le();
    return h;
}

SchemeHeader scheme_header(const ttql::PublicKey &pk) {
    if (pk.scheme() != ttql::Scheme::Cv) {
        fail(ErrorCode::BackendMismatch, "the wire protocol needs a lightning scheme with certificates");
    }
    const auto &cv = static_cast<const ttql::CvPublicKey &>(pk);
    SchemeHeader h;
    h.backend = cv.backend() == ntcf::Backend::Clean ? ssl::LightningBackend::CvClean : ssl::LightningBackend::CvLwe;
    h.reps = static_cast<uint32_t>(cv.arity());
    h.width = cv.width();
    return h;
}

void expect_type(const Frame &f, MsgType type) {
    if (f.type != type) {
        fail(ErrorCode::Protocol,
             std::string("expected ") + msg_type_name(type) + " frame, got " + msg_type_name(f.type));
    }
}

Frame ObligationMsg::to_frame() const {
    ByteWriter w;
    header.serialize_to(w);
    w.u32le(circuit_id).blob(snum);
    return Frame{MsgType::Obligation, w.take()};
}

ObligationMsg ObligationMsg::from_frame(const Frame &f) {
    expect_type(f, MsgType::Obligation);
    ByteReader in(f.payload);
    ObligationMsg m;
    m.header = SchemeHeader::deserialize(in);
    m.circuit_id = in.u32le();
    m.snum = in.blob();
    in.expect_done();
    return m;
}

Frame AnswerMsg::to_frame() const {
    ByteWriter w;
    header.serialize_to(w);
    classical.serialize_to(w);
    return Frame{MsgType::Answer, w.take()};
}

AnswerMsg AnswerMsg::from_frame(const Frame &f) {
    expect_type(f, MsgType::Answer);
    ByteReader in(f.payload);
    AnswerMsg m;
    m.header = SchemeHeader::deserialize(in);
    m.classical = ssl::ClassicalPart::deserialize(in);
    in.expect_done();
    return m;
}

Frame ReturnCertMsg::to_frame() const {
    ByteWriter w;
    header.serialize_to(w);
    w.raw(cert.serialize());
    return Frame{MsgType::ReturnCert, w.take()};
}

ReturnCertMsg ReturnCertMsg::from_frame(const Frame &f) {
    expect_type(f, MsgType::ReturnCert);
    ByteReader in(f.payload);
    ReturnCertMsg m;
    m.header = SchemeHeader::deserialize(in);
    m.cert = ssl::ReturnCert::deserialize(in.raw(in.remaining()));
    if (m.cert.cert.width != m.header.width || m.cert.cert.entries.size() != m.header.reps) {
        fail(ErrorCode::Decode, "certificate shape disagrees with its header");
    }
    return m;
}

Frame CheckResultMsg::to_frame() const {
    return Frame{MsgType::CheckResult, Bytes{static_cast<uint8_t>(accepted ? 1 : 0)}};
}

CheckResultMsg CheckResultMsg::from_frame(const Frame &f) {
    expect_type(f, MsgType::CheckResult);
    if (f.payload.size() != 1 || f.payload[0] > 1) {
        fail(ErrorCode::Decode, "check result must be one byte 0 or 1");
    }
    return CheckResultMsg{f.payload[0] == 1};
}

const char *wire_error_name(WireError e) {
    switch (e) {
        case WireError::Malformed:
            return "Malformed";
        case WireError::ProtocolOrder:
            return "ProtocolOrder";
        case WireError::UnknownCircuit:
            return "UnknownCircuit";
        case WireError::BackendMismatch:
            return "BackendMismatch";
        case WireError::FrameTooLarge:
            return "FrameTooLarge";
        case WireError::BadVersion:
            return "BadVersion";
        case WireError::BadType:
            return "BadType";
        case WireError::Truncated:
            return "Truncated";
        case WireError::Internal:
            return "Internal";
    }
    return "?";
}

Frame ErrorMsg::to_frame() const {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(code));
    w.blob(ByteView(reinterpret_cast<const uint8_t *>(detail.data()), detail.size()));
    return Frame{MsgType::Error, w.take()};
}

ErrorMsg ErrorMsg::from_frame(const Frame &f) {
    expect_type(f, MsgType::Error);
    ByteReader in(f.payload);
    ErrorMsg m;
    uint8_t code = in.u8();
    if (code < 1 || code > 9) {
        fail(ErrorCode::Decode, "unknown error code " + std::to_string(code));
    }
    m.code = static_cast<WireError>(code);
    Bytes detail = in.blob();
    m.detail.assign(detail.begin(), detail.end());
    in.expect_done();
    return m;
}

}  // namespace qlease::wire
