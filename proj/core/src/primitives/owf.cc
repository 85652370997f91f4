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

#include "qlease/primitives/owf.h"

#include "qlease/common/error.h"

namespace qlease::primitives {

using lattice::ModQMatrix;
using lattice::ModQVector;

void InjOwf::serialize_to(ByteWriter &out) const {
    out.u32le(input_bits);
    m.serialize_to(out);
}

InjOwf InjOwf::deserialize(ByteReader &in) {
    InjOwf f;
    f.input_bits = in.u32le();
    f.m = ModQMatrix::deserialize(in);
    if (f.input_bits == 0 || f.input_bits > 32 || f.m.cols() != f.input_bits || f.m.modulus() != kModulus ||
        f.m.rank() != f.input_bits) {
        fail(ErrorCode::Decode, "malformed one-way function");
    }
    return f;
}

InjOwf owf_gen(Rng &rng, uint32_t input_bits) {
    if (input_bits == 0 || input_bits > 32) {
        fail(ErrorCode::Parameter, "input width must be in [1, 32]");
    }
    const size_t rows = input_bits + 8;
    for (;;) {
        std::vector<uint32_t> e(rows * input_bits);
        for (auto &v : e) {
            v = static_cast<uint32_t>(uniform_below(rng, InjOwf::kModulus));
        }
        ModQMatrix m(rows, input_bits, InjOwf::kModulus, std::move(e));
        // Full column rank makes bits -> M bits injective: distinct 0/1 vectors differ by a nonzero vector.
        if (m.rank() == input_bits) {
            return InjOwf{input_bits, std::move(m)};
        }
    }
}

ModQVector owf_eval(const InjOwf &f, uint64_t alpha) {
    if (alpha >> f.input_bits != 0) {
        fail(ErrorCode::Domain, "one-way function input outside the domain");
    }
    std::vector<uint32_t> bits(f.input_bits);
    for (uint32_t i = 0; i < f.input_bits; i++) {
        bits[i] = static_cast<uint32_t>((alpha >> (f.input_bits - 1 - i)) & 1);
    }
    return f.m.mul(ModQVector(InjOwf::kModulus, std::move(bits)));
}

Bytes owf_eval_bytes(const InjOwf &f, uint64_t alpha) {
    return owf_eval(f, alpha).serialize();
}

}  // namespace qlease::primitives
