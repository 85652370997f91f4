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

#include "qlease/ntcf/ntcf.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "factory.h"
#include "qlease/common/error.h"
#include "qlease/qsim/distance.h"
#include "qlease/qsim/ops.h"

namespace qlease::ntcf {

using lattice::ModQMatrix;
using lattice::ModQVector;

const char *backend_name(Backend b) {
    return b == Backend::Clean ? "clean" : "lwe";
}

static uint64_t ipow(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; i++) {
        r *= base;
    }
    return r;
}

void check_sizes(uint64_t x_size, uint64_t y_size, uint32_t j_width) {
    if (j_width == 0 || j_width > 30) {
        fail(ErrorCode::Parameter, "J width must be in [1, 30]");
    }
    if (x_size > (uint64_t{1} << j_width)) {
        fail(ErrorCode::Parameter, "J width too small for |X|");
    }
    uint64_t cap = qsim::dimension_cap();
    if (x_size > cap || y_size > cap || 2 * x_size > cap / y_size) {
        fail(ErrorCode::Parameter, "sampler state exceeds the dimension cap");
    }
}

uint64_t NtcfKey::x_size() const {
    if (backend_ == Backend::Clean) {
        return uint64_t{1} << clean_bits_;
    }
    return ipow(a_.modulus(), static_cast<uint32_t>(a_.cols()));
}

uint64_t NtcfKey::y_size() const {
    if (backend_ == Backend::Clean) {
        return uint64_t{1} << clean_bits_;
    }
    return ipow(a_.modulus(), static_cast<uint32_t>(a_.rows()));
}

qsim::Component NtcfKey::x_component() const {
    if (backend_ == Backend::Clean) {
        return qsim::Component::bits(clean_bits_);
    }
    return qsim::Component::residues(a_.modulus(), static_cast<uint32_t>(a_.cols()));
}

qsim::Component NtcfKey::y_component() const {
    if (backend_ == Backend::Clean) {
        return qsim::Component::bits(clean_bits_);
    }
    return qsim::Component::residues(a_.modulus(), static_cast<uint32_t>(a_.rows()));
}

static ModQVector index_to_vector(uint64_t index, uint32_t q, size_t dim) {
    std::vector<uint32_t> e(dim);
    for (size_t i = dim; i-- > 0;) {
        e[i] = static_cast<uint32_t>(index % q);
        index /= q;
    }
    return ModQVector(q, std::move(e));
}

static uint64_t vector_to_index(const ModQVector &v) {
    uint64_t index = 0;
    for (size_t i = 0; i < v.dim(); i++) {
        index = index * v.modulus() + v[i];
    }
    return index;
}

ModQVector NtcfKey::lwe_x_vector(uint64_t x) const {
    return index_to_vector(x, a_.modulus(), a_.cols());
}

ModQVector NtcfKey::lwe_y_vector(uint64_t y) const {
    return index_to_vector(y, a_.modulus(), a_.rows());
}

uint64_t NtcfKey::lwe_y_index(const ModQVector &y) const {
    return vector_to_index(y);
}

bool NtcfKey::chk(uint32_t b, uint64_t x, uint64_t y) const {
    if (b > 1 || x >= x_size() || y >= y_size()) {
        return false;
    }
    if (backend_ == Backend::Clean) {
        return (b == 0 ? f0_ : f1_)[x] == y;
    }
    ModQVector diff = lwe_y_vector(y) - a_.mul(lwe_x_vector(x));
    if (b == 1) {
        diff = diff - u_;
    }
    for (int64_t c : diff.centered()) {
        if (std::llabs(c) > static_cast<int64_t>(noise_bound_)) {
            return false;
        }
    }
    return true;
}

static std::vector<std::pair<uint64_t, double>> box_density(const NtcfKey &key, const ModQVector &center_vec) {
    const uint32_t q = key.lwe_a().modulus();
    const size_t ell = key.lwe_a().rows();
    const int64_t bound = key.lwe_noise_bound();
    const uint64_t width = 2 * bound + 1;
    uint64_t count = ipow(width, static_cast<uint32_t>(ell));
    double p = 1.0 / static_cast<double>(count);
    std::vector<std::pair<uint64_t, double>> out;
    for (uint64_t k = 0; k < count; k++) {
        std::vector<int64_t> e(ell);
        uint64_t t = k;
        for (size_t i = ell; i-- > 0;) {
            e[i] = static_cast<int64_t>(t % width) - bound;
            t /= width;
        }
        ModQVector y = center_vec + ModQVector::from_centered(q, e);
        out.emplace_back(key.lwe_y_index(y), p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<uint64_t, double>> NtcfKey::density(uint32_t b, uint64_t x) const {
    if (b > 1 || x >= x_size()) {
        fail(ErrorCode::Domain, "density argument out of range");
    }
    if (backend_ == Backend::Clean) {
        return {{(b == 0 ? f0_ : f1_)[x], 1.0}};
    }
    ModQVector c = a_.mul(lwe_x_vector(x));
    if (b == 1) {
        c = c + u_;
    }
    return box_density(*this, c);
}

void NtcfKey::encode_y_to(ByteWriter &out, uint64_t y) const {
    if (y >= y_size()) {
        fail(ErrorCode::Domain, "y out of range");
    }
    if (backend_ == Backend::Clean) {
        out.u32le(static_cast<uint32_t>(y));
    } else {
        lwe_y_vector(y).serialize_to(out);
    }
}

Bytes NtcfKey::encode_y(uint64_t y) const {
    ByteWriter w;
    encode_y_to(w, y);
    return w.take();
}

uint64_t NtcfKey::decode_y_from(ByteReader &in) const {
    uint64_t y;
    if (backend_ == Backend::Clean) {
        y = in.u32le();
    } else {
        ModQVector v = ModQVector::deserialize(in);
        if (v.dim() != a_.rows() || v.modulus() != a_.modulus()) {
            fail(ErrorCode::Decode, "y has the wrong shape");
        }
        y = lwe_y_index(v);
    }
    if (y >= y_size()) {
        fail(ErrorCode::Decode, "y out of range");
    }
    return y;
}

uint64_t NtcfKey::decode_y(ByteView data) const {
    ByteReader in(data);
    uint64_t y = decode_y_from(in);
    in.expect_done();
    return y;
}

void NtcfKey::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(backend_)).u32le(j_width_);
    if (backend_ == Backend::Clean) {
        out.u32le(clean_bits_);
        for (uint32_t v : f0_) {
            out.u32le(v);
        }
        for (uint32_t v : f1_) {
            out.u32le(v);
        }
    } else {
        a_.serialize_to(out);
        u_.serialize_to(out);
        out.u32le(noise_bound_);
    }
}

Bytes NtcfKey::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

NtcfKey NtcfKey::deserialize(ByteReader &in) {
    uint8_t tag = in.u8();
    uint32_t j_width = in.u32le();
    if (tag == static_cast<uint8_t>(Backend::Clean)) {
        uint32_t bits = in.u32le();
        if (bits == 0 || bits > 12) {
            fail(ErrorCode::Decode, "clean key size out of range");
        }
        uint64_t n = uint64_t{1} << bits;
        std::vector<uint32_t> f0(n), f1(n);
        for (auto &v : f0) {
            v = in.u32le();
        }
        for (auto &v : f1) {
            v = in.u32le();
        }
        return NtcfFactory::clean_key(bits, j_width, std::move(f0), std::move(f1));
    }
    if (tag == static_cast<uint8_t>(Backend::Lwe)) {
        ModQMatrix a = ModQMatrix::deserialize(in);
        ModQVector u = ModQVector::deserialize(in);
        uint32_t bound = in.u32le();
        return NtcfFactory::lwe_key(std::move(a), std::move(u), bound, j_width);
    }
    fail(ErrorCode::Decode, "unknown ntcf backend tag");
}

NtcfKey NtcfFactory::clean_key(uint32_t bits, uint32_t j_width, std::vector<uint32_t> f0, std::vector<uint32_t> f1) {
    uint64_t n = uint64_t{1} << bits;
    if (f0.size() != n || f1.size() != n) {
        fail(ErrorCode::Decode, "clean tables have the wrong size");
    }
    for (auto *t : {&f0, &f1}) {
        std::vector<bool> seen(n, false);
        for (uint32_t v : *t) {
            if (v >= n || seen[v]) {
                fail(ErrorCode::Decode, "clean table is not a bijection");
            }
            seen[v] = true;
        }
    }
    try {
        check_sizes(n, n, j_width);
    } catch (const Error &e) {
        fail(ErrorCode::Decode, e.what());
    }
    NtcfKey key;
    key.backend_ = Backend::Clean;
    key.j_width_ = j_width;
    key.clean_bits_ = bits;
    key.f0_ = std::move(f0);
    key.f1_ = std::move(f1);
    return key;
}

NtcfKey NtcfFactory::lwe_key(ModQMatrix a, ModQVector u, uint32_t noise_bound, uint32_t j_width) {
    if (!lattice::is_odd_prime(a.modulus()) || u.dim() != a.rows() || u.modulus() != a.modulus() ||
        2 * uint64_t{noise_bound} + 1 > a.modulus() || a.cols() == 0 || a.rows() == 0) {
        fail(ErrorCode::Decode, "inconsistent lwe key");
    }
    NtcfKey key;
    key.backend_ = Backend::Lwe;
    key.j_width_ = j_width;
    key.a_ = std::move(a);
    key.u_ = std::move(u);
    key.noise_bound_ = noise_bound;
    try {
        check_sizes(key.x_size(), key.y_size(), j_width);
    } catch (const Error &e) {
        fail(ErrorCode::Decode, e.what());
    }
    return key;
}

NtcfTrapdoor NtcfFactory::clean_trapdoor(const NtcfKey &key) {
    NtcfTrapdoor td;
    td.backend_ = Backend::Clean;
    td.key_ = key;
    uint64_t n = key.x_size();
    td.inv0_.assign(n, 0);
    td.inv1_.assign(n, 0);
    for (uint32_t x = 0; x < n; x++) {
        td.inv0_[key.clean_table(0)[x]] = x;
        td.inv1_[key.clean_table(1)[x]] = x;
    }
    return td;
}

NtcfTrapdoor NtcfFactory::lwe_trapdoor(const NtcfKey &key, ModQVector s, ModQVector e0) {
    NtcfTrapdoor td;
    td.backend_ = Backend::Lwe;
    td.key_ = key;
    td.s_ = std::move(s);
    td.e0_ = std::move(e0);
    return td;
}

uint64_t NtcfTrapdoor::inv(uint32_t b, uint64_t y) const {
    if (b > 1 || y >= key_.y_size()) {
        fail(ErrorCode::NotInRange, "y is outside Y");
    }
    if (backend_ == Backend::Clean) {
        return (b == 0 ? inv0_ : inv1_)[y];
    }
    // Exhaustive inversion; key generation guarantees at most one preimage.
    uint64_t found = UINT64_MAX;
    for (uint64_t x = 0; x < key_.x_size(); x++) {
        if (key_.chk(b, x, y)) {
            if (found != UINT64_MAX) {
                fail(ErrorCode::NotInRange, "y has several preimages");
            }
            found = x;
        }
    }
    if (found == UINT64_MAX) {
        fail(ErrorCode::NotInRange, "y has no preimage");
    }
    return found;
}

void NtcfTrapdoor::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(backend_));
    if (backend_ == Backend::Lwe) {
        s_.serialize_to(out);
        e0_.serialize_to(out);
    }
}

NtcfTrapdoor NtcfTrapdoor::deserialize(ByteReader &in, const NtcfKey &key) {
    uint8_t tag = in.u8();
    if (tag != static_cast<uint8_t>(key.backend())) {
        fail(ErrorCode::Decode, "trapdoor backend does not match key");
    }
    if (key.backend() == Backend::Clean) {
        return NtcfFactory::clean_trapdoor(key);
    }
    ModQVector s = ModQVector::deserialize(in);
    ModQVector e0 = ModQVector::deserialize(in);
    if (s.dim() != key.lwe_a().cols() || e0.dim() != key.lwe_a().rows()) {
        fail(ErrorCode::Decode, "trapdoor shape does not match key");
    }
    return NtcfFactory::lwe_trapdoor(key, std::move(s), std::move(e0));
}

NtcfPair ntcf_gen(const NtcfParams &params, Rng &rng) {
    if (params.backend == Backend::Clean) {
        return NtcfFactory::make_clean(params.clean, params.j_width, rng);
    }
    return NtcfFactory::make_lwe(params.lwe, params.j_width, rng);
}

static qsim::Basis sampler_basis(const NtcfKey &key) {
    return qsim::Basis({qsim::Component::bits(1), key.x_component(), key.y_component()});
}

template <typename DensityFn>
static qsim::StateVector build_sampler(const NtcfKey &key, DensityFn &&dens) {
    qsim::Basis basis = sampler_basis(key);
    std::vector<double> w(basis.size(), 0.0);
    uint64_t xs = key.x_size();
    uint64_t ys = key.y_size();
    for (uint32_t b = 0; b < 2; b++) {
        for (uint64_t x = 0; x < xs; x++) {
            for (const auto &[y, p] : dens(b, x)) {
                w[(b * xs + x) * ys + y] += p;
            }
        }
    }
    return qsim::prepare_from_weights(basis, w);
}

qsim::StateVector ntcf_samp(const NtcfKey &key) {
    return build_sampler(key, [&](uint32_t b, uint64_t x) { return key.density(b, x); });
}

static std::vector<std::pair<uint64_t, double>> ideal_density(const NtcfKey &key, const NtcfTrapdoor &td, uint32_t b,
                                                              uint64_t x) {
    if (key.backend() == Backend::Clean || b == 0) {
        return key.density(b, x);
    }
    ModQVector c = key.lwe_a().mul(key.lwe_x_vector(x) + td.lwe_s());
    return box_density(key, c);
}

qsim::StateVector ntcf_samp_ideal(const NtcfKey &key, const NtcfTrapdoor &td) {
    if (td.backend() != key.backend()) {
        fail(ErrorCode::BackendMismatch, "trapdoor does not match key");
    }
    return build_sampler(key, [&](uint32_t b, uint64_t x) { return ideal_density(key, td, b, x); });
}

double hellinger_gap(const NtcfKey &key, const NtcfTrapdoor &td) {
    double worst = 0;
    uint64_t ys = key.y_size();
    for (uint32_t b = 0; b < 2; b++) {
        double total = 0;
        for (uint64_t x = 0; x < key.x_size(); x++) {
            std::vector<double> f(ys, 0.0), g(ys, 0.0);
            for (const auto &[y, p] : ideal_density(key, td, b, x)) {
                f[y] += p;
            }
            for (const auto &[y, p] : key.density(b, x)) {
                g[y] += p;
            }
            total += qsim::hellinger_sq(qsim::Density::normalized(f), qsim::Density::normalized(g));
        }
        worst = std::max(worst, total / static_cast<double>(key.x_size()));
    }
    return worst;
}

uint64_t j_encode(uint64_t x, uint64_t x_size, uint32_t width) {
    if (width > 63 || x_size > (uint64_t{1} << width) || x >= x_size) {
        fail(ErrorCode::Domain, "x outside the domain of J");
    }
    return x;
}

uint64_t j_decode(uint64_t bits, uint64_t x_size, uint32_t width) {
    if (width > 63 || bits >= (uint64_t{1} << width) || bits >= x_size) {
        fail(ErrorCode::Decode, "string is not in the image of J");
    }
    return bits;
}

bool g_member(uint64_t d, uint32_t width) {
    return d != 0 && (width >= 64 || d < (uint64_t{1} << width));
}

uint32_t inner_product_bit(uint64_t a, uint64_t b) {
    return static_cast<uint32_t>(std::popcount(a & b) & 1);
}

}  // namespace qlease::ntcf
