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

#ifndef QLEASE_QSIM_BASIS_H
#define QLEASE_QSIM_BASIS_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qlease::qsim {

/// Flattened digits of one basis label, component 0 first.
using Digits = std::span<const uint32_t>;

enum class ComponentKind : uint8_t { Residues, Bits };

/// One tensor factor of a basis: a vector over Z_q or a bit string.
struct Component {
    ComponentKind kind = ComponentKind::Bits;
    uint32_t radix = 2;
    uint32_t length = 0;

    static Component residues(uint32_t q, uint32_t dim);
    static Component bits(uint32_t k);

    uint64_t size() const;
    bool operator==(const Component &other) const = default;
};

/// Default 2^26 labels; the QL_DIM_CAP environment variable overrides it.
uint64_t dimension_cap();

/// Ordered tuple of components. Labels are enumerated in lexicographic order with component 0
/// and, within a component, coordinate 0 most significant.
class Basis {
   public:
    Basis() = default;
    explicit Basis(std::vector<Component> components);

    static Basis residues(uint32_t q, uint32_t dim);
    static Basis bits(uint32_t k);

    size_t num_components() const {
        return components_.size();
    }
    const Component &component(size_t c) const {
        return components_[c];
    }
    const std::vector<Component> &components() const {
        return components_;
    }
    uint64_t size() const {
        return size_;
    }
    size_t num_digits() const {
        return radix_.size();
    }
    size_t digit_offset(size_t c) const {
        return offsets_[c];
    }
    uint32_t digit_radix(size_t d) const {
        return radix_[d];
    }
    uint64_t digit_stride(size_t d) const {
        return stride_[d];
    }

    void decode(uint64_t index, std::span<uint32_t> digits) const;
    uint64_t encode(Digits digits) const;
    /// Canonical text: residue components as comma lists, bit components as strings, '|' between.
    std::string label_text(uint64_t index) const;

    /// Basis with `other`'s components appended.
    Basis tensor(const Basis &other) const;

    bool operator==(const Basis &other) const {
        return components_ == other.components_;
    }

   private:
    std::vector<Component> components_;
    std::vector<size_t> offsets_;
    std::vector<uint32_t> radix_;
    std::vector<uint64_t> stride_;
    uint64_t size_ = 1;
};

/// Advances `digits` to the next label in canonical order (odometer increment).
void next_label(const Basis &basis, std::span<uint32_t> digits);

}  // namespace qlease::qsim

#endif
