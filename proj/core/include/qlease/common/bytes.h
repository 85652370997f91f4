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

#ifndef QLEASE_COMMON_BYTES_H
#define QLEASE_COMMON_BYTES_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlease {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Appends little-endian fields to a byte buffer. Length-prefixed blobs use a u32le length.
class ByteWriter {
   public:
    ByteWriter() = default;

    ByteWriter &u8(uint8_t v);
    ByteWriter &u32le(uint32_t v);
    ByteWriter &u64le(uint64_t v);
    ByteWriter &u32be(uint32_t v);
    ByteWriter &raw(ByteView data);
    ByteWriter &blob(ByteView data);

    const Bytes &bytes() const {
        return buf_;
    }
    Bytes take() {
        return std::move(buf_);
    }

   private:
    Bytes buf_;
};

/// Reads fields written by ByteWriter. Any short read throws Error(Decode).
class ByteReader {
   public:
    explicit ByteReader(ByteView data) : data_(data) {
    }

    uint8_t u8();
    uint32_t u32le();
    uint64_t u64le();
    uint32_t u32be();
    ByteView raw(size_t n);
    Bytes blob();

    size_t remaining() const {
        return data_.size() - pos_;
    }
    bool done() const {
        return pos_ == data_.size();
    }
    /// Throws Error(Decode) if unread bytes remain.
    void expect_done() const;

   private:
    ByteView data_;
    size_t pos_ = 0;
};

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

Bytes concat(ByteView a, ByteView b);

}  // namespace qlease

#endif
