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

#include "qlease/lattice/modq.h"

#include <cmath>
#include <string>

#include "qlease/common/error.h"

namespace qlease::lattice {

bool is_odd_prime(uint32_t q) {
    if (q < 3 || q % 2 == 0) {
        return false;
    }
    for (uint32_t d = 3; uint64_t{d} * d <= q; d += 2) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

uint32_t reduce(int64_t v, uint32_t q) {
    int64_t r = v % static_cast<int64_t>(q);
    if (r < 0) {
        r += q;
    }
    return static_cast<uint32_t>(r);
}

int64_t center(uint32_t v, uint32_t q) {
    int64_t z = v % q;
    // 2z > q puts z above q/2; ties at exactly q/2 (even q) stay positive.
    if (2 * z > static_cast<int64_t>(q)) {
        z -= q;
    }
    return z;
}

uint32_t uncenter(int64_t z, uint32_t q) {
    return reduce(z, q);
}

uint32_t inverse_mod(uint32_t a, uint32_t q) {
    a %= q;
    if (a == 0) {
        fail(ErrorCode::Parameter, "zero has no inverse");
    }
    uint64_t result = 1;
    uint64_t base = a;
    uint32_t e = q - 2;
    while (e) {
        if (e & 1) {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

static void check_modulus(uint32_t q) {
    if (q < 2) {
        fail(ErrorCode::Parameter, "modulus must be at least 2");
    }
}

ModQVector::ModQVector(uint32_t q, std::vector<uint32_t> entries) : q_(q), entries_(std::move(entries)) {
    check_modulus(q);
    for (auto &e : entries_) {
        e %= q;
    }
}

ModQVector ModQVector::zero(uint32_t q, size_t dim) {
    return ModQVector(q, std::vector<uint32_t>(dim, 0));
}

ModQVector ModQVector::from_centered(uint32_t q, const std::vector<int64_t> &values) {
    std::vector<uint32_t> e(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        e[i] = uncenter(values[i], q);
    }
    return ModQVector(q, std::move(e));
}

std::vector<int64_t> ModQVector::centered() const {
    std::vector<int64_t> out(entries_.size());
    for (size_t i = 0; i < entries_.size(); i++) {
        out[i] = center(entries_[i], q_);
    }
    return out;
}

int64_t ModQVector::norm_sq() const {
    int64_t total = 0;
    for (uint32_t e : entries_) {
        int64_t c = center(e, q_);
        total += c * c;
    }
    return total;
}

double ModQVector::norm() const {
    return std::sqrt(static_cast<double>(norm_sq()));
}

bool ModQVector::is_zero() const {
    for (uint32_t e : entries_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

static void check_same_shape(const ModQVector &a, const ModQVector &b) {
    if (a.dim() != b.dim() || a.modulus() != b.modulus()) {
        fail(ErrorCode::DimensionMismatch, "vector shapes differ");
    }
}

ModQVector ModQVector::operator+(const ModQVector &other) const {
    check_same_shape(*this, other);
    std::vector<uint32_t> e(dim());
    for (size_t i = 0; i < dim(); i++) {
        e[i] = static_cast<uint32_t>((uint64_t{entries_[i]} + other.entries_[i]) % q_);
    }
    return ModQVector(q_, std::move(e));
}

ModQVector ModQVector::operator-(const ModQVector &other) const {
    check_same_shape(*this, other);
    std::vector<uint32_t> e(dim());
    for (size_t i = 0; i < dim(); i++) {
        e[i] = static_cast<uint32_t>((uint64_t{entries_[i]} + q_ - other.entries_[i]) % q_);
    }
    return ModQVector(q_, std::move(e));
}

ModQVector ModQVector::scaled(uint32_t c) const {
    std::vector<uint32_t> e(dim());
    for (size_t i = 0; i < dim(); i++) {
        e[i] = static_cast<uint32_t>(uint64_t{entries_[i]} * c % q_);
    }
    return ModQVector(q_, std::move(e));
}

void ModQVector::serialize_to(ByteWriter &out) const {
    out.u32le(static_cast<uint32_t>(dim())).u32le(q_);
    for (uint32_t e : entries_) {
        out.u32le(e);
    }
}

Bytes ModQVector::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

ModQVector ModQVector::deserialize(ByteReader &in) {
    uint32_t dim = in.u32le();
    uint32_t q = in.u32le();
    if (q < 2) {
        fail(ErrorCode::Decode, "bad modulus");
    }
    if (uint64_t{dim} * 4 > in.remaining()) {
        fail(ErrorCode::Decode, "vector truncated");
    }
    std::vector<uint32_t> e(dim);
    for (auto &v : e) {
        v = in.u32le();
        if (v >= q) {
            fail(ErrorCode::Decode, "entry not reduced");
        }
    }
    return ModQVector(q, std::move(e));
}

ModQVector ModQVector::deserialize(ByteView data) {
    ByteReader in(data);
    ModQVector v = deserialize(in);
    in.expect_done();
    return v;
}

uint32_t dot(const ModQVector &a, const ModQVector &b) {
    check_same_shape(a, b);
    uint64_t acc = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        acc = (acc + uint64_t{a[i]} * b[i]) % a.modulus();
    }
    return static_cast<uint32_t>(acc);
}

ModQMatrix::ModQMatrix(size_t rows, size_t cols, uint32_t q, std::vector<uint32_t> entries)
    : rows_(rows), cols_(cols), q_(q), entries_(std::move(entries)) {
    check_modulus(q);
    if (entries_.size() != rows * cols) {
        fail(ErrorCode::DimensionMismatch, "entry count does not match shape");
    }
    for (auto &e : entries_) {
        e %= q;
    }
}

ModQMatrix ModQMatrix::zero(size_t rows, size_t cols, uint32_t q) {
    return ModQMatrix(rows, cols, q, std::vector<uint32_t>(rows * cols, 0));
}

void ModQMatrix::set(size_t r, size_t c, uint32_t v) {
    entries_[r * cols_ + c] = v % q_;
}

ModQVector ModQMatrix::row(size_t r) const {
    return ModQVector(q_, std::vector<uint32_t>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_));
}

ModQVector ModQMatrix::col(size_t c) const {
    std::vector<uint32_t> e(rows_);
    for (size_t r = 0; r < rows_; r++) {
        e[r] = at(r, c);
    }
    return ModQVector(q_, std::move(e));
}

ModQVector ModQMatrix::mul(const ModQVector &x) const {
    if (x.dim() != cols_ || x.modulus() != q_) {
        fail(ErrorCode::DimensionMismatch, "matrix-vector shapes differ");
    }
    std::vector<uint32_t> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc = (acc + uint64_t{at(r, c)} * x[c]) % q_;
        }
        out[r] = static_cast<uint32_t>(acc);
    }
    return ModQVector(q_, std::move(out));
}

ModQMatrix ModQMatrix::transpose() const {
    ModQMatrix t = zero(cols_, rows_, q_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.set(c, r, at(r, c));
        }
    }
    return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(std::vector<std::vector<uint64_t>> &m, size_t cols, uint32_t q) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < cols && row < m.size(); c++) {
        size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0) {
            sel++;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        uint64_t inv = inverse_mod(static_cast<uint32_t>(m[row][c]), q);
        for (auto &v : m[row]) {
            v = v * inv % q;
        }
        for (size_t r = 0; r < m.size(); r++) {
            if (r == row || m[r][c] == 0) {
                continue;
            }
            uint64_t f = m[r][c];
            for (size_t k = 0; k < cols; k++) {
                m[r][k] = (m[r][k] + (q - f) * m[row][k]) % q;
            }
        }
        pivots.push_back(c);
        row++;
    }
    return pivots;
}

}  // namespace

size_t ModQMatrix::rank() const {
    if (!is_odd_prime(q_)) {
        fail(ErrorCode::Parameter, "rank requires an odd prime modulus");
    }
    std::vector<std::vector<uint64_t>> m(rows_, std::vector<uint64_t>(cols_));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m[r][c] = at(r, c);
        }
    }
    return rref(m, cols_, q_).size();
}

std::vector<ModQVector> ModQMatrix::kernel_basis() const {
    if (!is_odd_prime(q_)) {
        fail(ErrorCode::Parameter, "kernel requires an odd prime modulus");
    }
    std::vector<std::vector<uint64_t>> m(rows_, std::vector<uint64_t>(cols_));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m[r][c] = at(r, c);
        }
    }
    std::vector<size_t> pivots = rref(m, cols_, q_);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<ModQVector> basis;
    for (size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<uint32_t> v(cols_, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); i++) {
            v[pivots[i]] = static_cast<uint32_t>((q_ - m[i][free]) % q_);
        }
        basis.emplace_back(q_, std::move(v));
    }
    return basis;
}

void ModQMatrix::serialize_to(ByteWriter &out) const {
    out.u32le(static_cast<uint32_t>(rows_)).u32le(static_cast<uint32_t>(cols_)).u32le(q_);
    for (uint32_t e : entries_) {
        out.u32le(e);
    }
}

Bytes ModQMatrix::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

ModQMatrix ModQMatrix::deserialize(ByteReader &in) {
    uint32_t rows = in.u32le();
    uint32_t cols = in.u32le();
    uint32_t q = in.u32le();
    if (q < 2) {
        fail(ErrorCode::Decode, "bad modulus");
    }
    uint64_t count = uint64_t{rows} * cols;
    if (count * 4 > in.remaining()) {
        fail(ErrorCode::Decode, "matrix truncated");
    }
    std::vector<uint32_t> e(count);
    for (auto &v : e) {
        v = in.u32le();
        if (v >= q) {
            fail(ErrorCode::Decode, "entry not reduced");
        }
    }
    return ModQMatrix(rows, cols, q, std::move(e));
}

ModQMatrix ModQMatrix::deserialize(ByteView data) {
    ByteReader in(data);
    ModQMatrix m = deserialize(in);
    in.expect_done();
    return m;
}

}  // namespace qlease::lattice
