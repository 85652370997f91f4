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

#include "qlease/primitives/prg.h"

#include <sodium.h>

#include <cstring>

#include "qlease/common/error.h"
#include "qlease/primitives/hash.h"

namespace qlease::primitives {

Bytes chacha20_keystream(ByteView key, ByteView nonce, uint32_t counter, size_t len) {
    if (key.size() != crypto_stream_chacha20_ietf_KEYBYTES || nonce.size() != crypto_stream_chacha20_ietf_NONCEBYTES) {
        fail(ErrorCode::Parameter, "chacha20 needs a 32-byte key and a 12-byte nonce");
    }
    init_crypto();
    Bytes zeros(len, 0), out(len);
    crypto_stream_chacha20_ietf_xor_ic(out.data(), zeros.data(), len, nonce.data(), counter, key.data());
    return out;
}

std::array<Bytes, 2> ggm_prg(ByteView seed) {
    if (seed.size() != kSeedBytes) {
        fail(ErrorCode::Parameter, "GGM seeds are 16 bytes");
    }
    static const char kLabel[16] = {'q', 'l', 'e', 'a', 's', 'e', '-', 'g', 'g', 'm', '-', 'p', 'r', 'g', 0, 0};
    Bytes key(seed.begin(), seed.end());
    key.insert(key.end(), kLabel, kLabel + 16);
    Bytes nonce(12, 0);
    Bytes stream = chacha20_keystream(key, nonce, 0, 2 * kSeedBytes);
    return {Bytes(stream.begin(), stream.begin() + kSeedBytes), Bytes(stream.begin() + kSeedBytes, stream.end())};
}

}  // namespace qlease::primitives
