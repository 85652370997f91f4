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

#include "qlease/common/bytes.h"

#include "qlease/common/error.h"

namespace qlease {

ByteWriter &ByteWriter::u8(uint8_t v) {
    buf_.push_back(v);
    return *this;
}

ByteWriter &ByteWriter::u32le(uint32_t v) {
    for (int i = 0; i < 4; i++) {
        buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    return *this;
}

ByteWriter &ByteWriter::u64le(uint64_t v) {
    for (int i = 0; i < 8; i++) {
        buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    return *this;
}

ByteWriter &ByteWriter::u32be(uint32_t v) {
    for (int i = 3; i >= 0; i--) {
        buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    return *this;
}

ByteWriter &ByteWriter::raw(ByteView data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
    return *this;
}

ByteWriter &ByteWriter::blob(ByteView data) {
    u32le(static_cast<uint32_t>(data.size()));
    return raw(data);
}

ByteView ByteReader::raw(size_t n) {
    if (n > remaining()) {
        fail(ErrorCode::Decode, "unexpected end of input");
    }
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
}

uint8_t ByteReader::u8() {
    return raw(1)[0];
}

uint32_t ByteReader::u32le() {
    ByteView b = raw(4);
    return uint32_t{b[0]} | (uint32_t{b[1]} << 8) | (uint32_t{b[2]} << 16) | (uint32_t{b[3]} << 24);
}

uint64_t ByteReader::u64le() {
    uint64_t lo = u32le();
    uint64_t hi = u32le();
    return lo | (hi << 32);
}

uint32_t ByteReader::u32be() {
    ByteView b = raw(4);
    return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) | (uint32_t{b[2]} << 8) | uint32_t{b[3]};
}

Bytes ByteReader::blob() {
    uint32_t n = u32le();
    ByteView b = raw(n);
    return Bytes(b.begin(), b.end());
}

void ByteReader::expect_done() const {
    if (!done()) {
        fail(ErrorCode::Decode, "trailing bytes");
    }
}

std::string to_hex(ByteView data) {
    static const char *digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

static int hex_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        fail(ErrorCode::Decode, "odd-length hex string");
    }
    Bytes out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            fail(ErrorCode::Decode, "bad hex digit");
        }
        out[i] = static_cast<uint8_t>(hi * 16 + lo);
    }
    return out;
}

Bytes concat(ByteView a, ByteView b) {
    Bytes out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace qlease
