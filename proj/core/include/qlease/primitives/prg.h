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

#ifndef QLEASE_PRIMITIVES_PRG_H
#define QLEASE_PRIMITIVES_PRG_H

#include <array>

#include "qlease/common/bytes.h"

namespace qlease::primitives {

constexpr size_t kSeedBytes = 16;

/// Raw ChaCha20 (96-bit nonce) keystream starting at block `counter`.
Bytes chacha20_keystream(ByteView key, ByteView nonce, uint32_t counter, size_t len);

/// Length-doubling generator of the GGM tree. The ChaCha20 key is seed || "qlease-ggm-prg\0\0",
/// the nonce is zero and the first 32 keystream bytes split into (G0, G1).
std::array<Bytes, 2> ggm_prg(ByteView seed);

}  // namespace qlease::primitives

#endif
