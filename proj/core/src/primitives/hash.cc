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

#include "qlease/primitives/hash.h"

#include <sodium.h>

#include "qlease/common/error.h"

namespace qlease::primitives {

void init_crypto() {
    static const int status = sodium_init();
    if (status < 0) {
        fail(ErrorCode::Parameter, "libsodium failed to initialize");
    }
}

Bytes sha256(ByteView data) {
    init_crypto();
    Bytes out(crypto_hash_sha256_BYTES);
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

Bytes hash_parts(std::initializer_list<ByteView> parts) {
    ByteWriter w;
    for (ByteView p : parts) {
        w.blob(p);
    }
    return sha256(w.bytes());
}

}  // namespace qlease::primitives
