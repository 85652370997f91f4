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

#ifndef QLEASE_LATTICE_MODQ_H
#define QLEASE_LATTICE_MODQ_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qlease/common/bytes.h"

namespace qlease::lattice {

bool is_odd_prime(uint32_t q);

uint32_t reduce(int64_t v, uint32_t q);

/// Centered representative in (-q/2, q/2]. For odd q this is [-(q-1)/2, (q-1)/2].
int64_t center(uint32_t v, uint32_t q);

uint32_t uncenter(int64_t z, uint32_t q);

/// Multiplicative inverse mod prime q. Throws on a == 0.
uint32_t inverse_mod(uint32_t a, uint32_t q);

class ModQVector {
   public:
    ModQVector() = default;
    ModQVector(uint32_t q, std::vector<uint32_t> entries);

    static ModQVector zero(uint32_t q, size_t dim);
    static ModQVector from_centered(uint32_t q, const std::vector<int64_t> &values);

    size_t dim() const {
        return entries_.size();
    }
    uint32_t modulus() const {
        return q_;
    }
    uint32_t operator[](size_t i) const {
        return entries_[i];
    }
    const std::vector<uint32_t> &entries() const {
        return entries_;
    }

    std::vector<int64_t> centered() const;
    /// Squared euclidean norm of the centered view.
    int64_t norm_sq() const;
    double norm() const;
    bool is_zero() const;

    ModQVector operator+(const ModQVector &other) const;
    ModQVector operator-(const ModQVector &other) const;
    ModQVector scaled(uint32_t c) const;
    bool operator==(const ModQVector &other) const = default;

    /// u32 dim, u32 q, u32le entries.
    Bytes serialize() const;
    void serialize_to(ByteWriter &out) const;
    static ModQVector deserialize(ByteReader &in);
    static ModQVector deserialize(ByteView data);

   private:
    uint32_t q_ = 0;
    std::vector<uint32_t> entries_;
};

uint32_t dot(const ModQVector &a, const ModQVector &b);

class ModQMatrix {
   public:
    ModQMatrix() = default;
    ModQMatrix(size_t rows, size_t cols, uint32_t q, std::vector<uint32_t> entries);

    static ModQMatrix zero(size_t rows, size_t cols, uint32_t q);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    uint32_t modulus() const {
        return q_;
    }
    uint32_t at(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(size_t r, size_t c, uint32_t v);
    const std::vector<uint32_t> &entries() const {
        return entries_;
    }

    ModQVector row(size_t r) const;
    ModQVector col(size_t c) const;
    ModQVector mul(const ModQVector &x) const;
    ModQMatrix transpose() const;

    /// Rank over the field Z_q.
    size_t rank() const;
    /// Basis of {x : M x = 0} over Z_q, in reduced echelon order.
    std::vector<ModQVector> kernel_basis() const;

    bool operator==(const ModQMatrix &other) const = default;

    /// u32 rows, u32 cols, u32 q, u32le entries row-major.
    Bytes serialize() const;
    void serialize_to(ByteWriter &out) const;
    static ModQMatrix deserialize(ByteReader &in);
    static ModQMatrix deserialize(ByteView data);

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    uint32_t q_ = 0;
    std::vector<uint32_t> entries_;
};

}  // namespace qlease::lattice

#endif
