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

#include "qlease/qsim/basis.h"

#include <cstdlib>
#include <string>

#include "qlease/common/error.h"

namespace qlease::qsim {

Component Component::residues(uint32_t q, uint32_t dim) {
    if (q < 2) {
        fail(ErrorCode::Parameter, "residue modulus must be at least 2");
    }
    return Component{ComponentKind::Residues, q, dim};
}

Component Component::bits(uint32_t k) {
    return Component{ComponentKind::Bits, 2, k};
}

uint64_t Component::size() const {
    uint64_t s = 1;
    for (uint32_t i = 0; i < length; i++) {
        if (s > (uint64_t{1} << 62) / radix) {
            fail(ErrorCode::DimensionCap, "component size overflows");
        }
        s *= radix;
    }
    return s;
}

uint64_t dimension_cap() {
    const char *env = std::getenv("QL_DIM_CAP");
    if (env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return uint64_t{1} << 26;
}

Basis::Basis(std::vector<Component> components) : components_(std::move(components)) {
    uint64_t cap = dimension_cap();
    for (const auto &c : components_) {
        offsets_.push_back(radix_.size());
        uint64_t cs = c.size();
        if (cs > cap || size_ > cap / cs) {
            fail(ErrorCode::DimensionCap,
                 "basis exceeds the dimension cap of " + std::to_string(cap) + " labels");
        }
        size_ *= cs;
        for (uint32_t i = 0; i < c.length; i++) {
            radix_.push_back(c.radix);
        }
    }
    stride_.assign(radix_.size(), 1);
    for (size_t d = radix_.size(); d-- > 1;) {
        stride_[d - 1] = stride_[d] * radix_[d];
    }
}

Basis Basis::residues(uint32_t q, uint32_t dim) {
    return Basis({Component::residues(q, dim)});
}

Basis Basis::bits(uint32_t k) {
    return Basis({Component::bits(k)});
}

void Basis::decode(uint64_t index, std::span<uint32_t> digits) const {
    for (size_t d = radix_.size(); d-- > 0;) {
        digits[d] = static_cast<uint32_t>(index % radix_[d]);
        index /= radix_[d];
    }
}

uint64_t Basis::encode(Digits digits) const {
    uint64_t index = 0;
    for (size_t d = 0; d < radix_.size(); d++) {
        index = index * radix_[d] + digits[d];
    }
    return index;
}

std::string Basis::label_text(uint64_t index) const {
    std::vector<uint32_t> digits(num_digits());
    decode(index, digits);
    std::string out = "(";
    for (size_t c = 0; c < components_.size(); c++) {
        if (c > 0) {
            out += "|";
        }
        const Component &comp = components_[c];
        for (uint32_t i = 0; i < comp.length; i++) {
            uint32_t v = digits[offsets_[c] + i];
            if (comp.kind == ComponentKind::Bits) {
                out += static_cast<char>('0' + v);
            } else {
                if (i > 0) {
                    out += ",";
                }
                out += std::to_string(v);
            }
        }
    }
    out += ")";
    return out;
}

Basis Basis::tensor(const Basis &other) const {
    std::vector<Component> all = components_;
    all.insert(all.end(), other.components_.begin(), other.components_.end());
    return Basis(std::move(all));
}

void next_label(const Basis &basis, std::span<uint32_t> digits) {
    for (size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < basis.digit_radix(d)) {
            return;
        }
        digits[d] = 0;
    }
}

}  // namespace qlease::qsim
