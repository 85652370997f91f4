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

#ifndef QLEASE_PRIMITIVES_HASH_H
#define QLEASE_PRIMITIVES_HASH_H

#include <initializer_list>

#include "qlease/common/bytes.h"

namespace qlease::primitives {

constexpr size_t kHashBytes = 32;

/// Initializes libsodium once; every primitive calls it before use.
void init_crypto();

Bytes sha256(ByteView data);

/// SHA-256 over the concatenation of u32le-length-prefixed parts.
Bytes hash_parts(std::initializer_list<ByteView> parts);

}  // namespace qlease::primitives

#endif
