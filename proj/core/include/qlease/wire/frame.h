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

#ifndef QLEASE_WIRE_FRAME_H
#define QLEASE_WIRE_FRAME_H

#include <cstdint>

#include "qlease/common/bytes.h"

namespace qlease::wire {

enum class MsgType : uint8_t {
    Obligation = 1,
    Answer = 2,
    ReturnCert = 3,
    CheckResult = 4,
    Error = 5,
};

const char *msg_type_name(MsgType t);

constexpr uint8_t kWireVersion = 1;
constexpr size_t kHeaderSize = 6;
constexpr uint32_t kMaxPayload = 16u << 20;

/// On the wire: u32be length (= 2 + payload size), u8 version, u8 type, payload.
struct Frame {
    MsgType type = MsgType::Error;
    Bytes payload;

    bool operator==(const Frame &other) const = default;
};

/// Throws FrameTooLarge when the payload exceeds kMaxPayload.
Bytes encode_frame(const Frame &frame);

/// Decodes exactly one frame. Truncated if bytes are missing, Decode if bytes are left over.
Frame decode_frame(ByteView data);

/// Validates a 6-byte header and returns the payload size that follows it.
uint32_t frame_payload_size(ByteView header);

}  // namespace qlease::wire

#endif
