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

#include "qlease/wire/frame.h"

#include "qlease/common/error.h"

namespace qlease::wire {

const char *msg_type_name(MsgType t) {
    switch (t) {
        case MsgType::Obligation:
            return "obligation";
        case MsgType::Answer:
            return "answer";
        case MsgType::ReturnCert:
            return "return-cert";
        case MsgType::CheckResult:
            return "check-result";
        case MsgType::Error:
            return "error";
    }
    return "?";
}

static bool known_type(uint8_t t) {
    return t >= static_cast<uint8_t>(MsgType::Obligation) && t <= static_cast<uint8_t>(MsgType::Error);
}

Bytes encode_frame(const Frame &frame) {
    if (frame.payload.size() > kMaxPayload) {
        fail(ErrorCode::FrameTooLarge, "payload of " + std::to_string(frame.payload.size()) + " bytes");
    }
    ByteWriter w;
    w.u32be(static_cast<uint32_t>(frame.payload.size() + 2));
    w.u8(kWireVersion).u8(static_cast<uint8_t>(frame.type)).raw(frame.payload);
    return w.take();
}

uint32_t frame_payload_size(ByteView header) {
    if (header.size() < kHeaderSize) {
        fail(ErrorCode::Truncated, "frame header is " + std::to_string(header.size()) + " bytes");
    }
    uint32_t length = (uint32_t{header[0]} << 24) | (uint32_t{header[1]} << 16) | (uint32_t{header[2]} << 8) |
                      uint32_t{header[3]};
    if (length < 2) {
        fail(ErrorCode::Truncated, "frame length below header size");
    }
    if (length - 2 > kMaxPayload) {
        fail(ErrorCode::FrameTooLarge, "frame length " + std::to_string(length));
    }
    if (header[4] != kWireVersion) {
        fail(ErrorCode::BadVersion, "wire version " + std::to_string(header[4]));
    }
    if (!known_type(header[5])) {
        fail(ErrorCode::BadType, "message type " + std::to_string(header[5]));
    }
    return length - 2;
}

Frame decode_frame(ByteView data) {
    uint32_t size = frame_payload_size(data);
    if (data.size() - kHeaderSize < size) {
        fail(ErrorCode::Truncated, "frame payload is short");
    }
    if (data.size() - kHeaderSize > size) {
        fail(ErrorCode::Decode, "trailing bytes after frame");
    }
    Frame f;
    f.type = static_cast<MsgType>(data[5]);
    f.payload.assign(data.begin() + kHeaderSize, data.end());
    return f;
}

}  // namespace qlease::wire
