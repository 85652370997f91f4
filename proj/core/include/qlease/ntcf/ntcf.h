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

#ifndef QLEASE_NTCF_NTCF_H
#define QLEASE_NTCF_NTCF_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"
#include "qlease/lattice/modq.h"
#include "qlease/qsim/state.h"

namespace qlease::ntcf {

enum class Backend : uint8_t { Clean = 1, Lwe = 2 };

const char *backend_name(Backend b);

struct CleanParams {
    /// |X| = |Y| = 2^x_bits.
    uint32_t x_bits = 4;
};

struct LweParams {
    /// Secret dimension; X = Z_q^n.
    uint32_t n = 1;
    /// Output dimension; Y = Z_q^ell.
    uint32_t ell = 2;
    uint32_t q = 31;
    /// Box noise of f': y - A x - b u in [-noise_bound, noise_bound]^ell.
    uint32_t noise_bound = 1;
    /// Coordinates of e0 are discrete Gaussian of width e0_width, truncated to [-e0_bound, e0_bound].
    uint32_t e0_bound = 1;
    double e0_width = 0.7;
    uint32_t max_retries = 4096;
};

struct NtcfParams {
    Backend backend = Backend::Clean;
    CleanParams clean;
    LweParams lwe;
    /// Width of the injection J; must be at least ceil(log2 |X|).
    uint32_t j_width = 11;
};

/// Public key of either backend. Indices x and y refer to canonical label order of the X and Y
/// components (for the lwe backend, mixed-radix over Z_q with coordinate 0 most significant).
class NtcfKey {
   public:
    Backend backend() const {
        return backend_;
    }
    uint32_t j_width() const {
        return j_width_;
    }
    uint64_t x_size() const;
    uint64_t y_size() const;
    qsim::Component x_component() const;
    qsim::Component y_component() const;

    /// y in Supp(f'_{k,b}(x)); public, never uses the trapdoor.
    bool chk(uint32_t b, uint64_t x, uint64_t y) const;
    /// Support of f'_{k,b}(x) with probabilities, ascending in y.
    std::vector<std::pair<uint64_t, double>> density(uint32_t b, uint64_t x) const;

    Bytes encode_y(uint64_t y) const;
    uint64_t decode_y(ByteView data) const;
    void encode_y_to(ByteWriter &out, uint64_t y) const;
    uint64_t decode_y_from(ByteReader &in) const;

    void serialize_to(ByteWriter &out) const;
    Bytes serialize() const;
    static NtcfKey deserialize(ByteReader &in);

    bool operator==(const NtcfKey &other) const = default;

    // Clean backend.
    uint32_t clean_bits() const {
        return clean_bits_;
    }
    const std::vector<uint32_t> &clean_table(uint32_t b) const {
        return b == 0 ? f0_ : f1_;
    }
    // Lwe backend.
    const lattice::ModQMatrix &lwe_a() const {
        return a_;
    }
    const lattice::ModQVector &lwe_u() const {
        return u_;
    }
    uint32_t lwe_noise_bound() const {
        return noise_bound_;
    }

    lattice::ModQVector lwe_x_vector(uint64_t x) const;
    uint64_t lwe_y_index(const lattice::ModQVector &y) const;
    lattice::ModQVector lwe_y_vector(uint64_t y) const;

   private:
    friend struct NtcfFactory;
    Backend backend_ = Backend::Clean;
    uint32_t j_width_ = 0;
    uint32_t clean_bits_ = 0;
    std::vector<uint32_t> f0_;
    std::vector<uint32_t> f1_;
    lattice::ModQMatrix a_;
    lattice::ModQVector u_;
    uint32_t noise_bound_ = 0;
};

class NtcfTrapdoor {
   public:
    Backend backend() const {
        return backend_;
    }
    /// The unique x with y in Supp(f'_{k,b}(x)); throws NotInRange otherwise.
    uint64_t inv(uint32_t b, uint64_t y) const;

    void serialize_to(ByteWriter &out) const;
    static NtcfTrapdoor deserialize(ByteReader &in, const NtcfKey &key);

    // Lwe backend.
    const lattice::ModQVector &lwe_s() const {
        return s_;
    }
    const lattice::ModQVector &lwe_e0() const {
        return e0_;
    }

   private:
    friend struct NtcfFactory;
    Backend backend_ = Backend::Clean;
    NtcfKey key_;
    std::vector<uint32_t> inv0_;
    std::vector<uint32_t> inv1_;
    lattice::ModQVector s_;
    lattice::ModQVector e0_;
};

struct NtcfPair {
    NtcfKey key;
    NtcfTrapdoor td;
};

NtcfPair ntcf_gen(const NtcfParams &params, Rng &rng);

/// |psi'> over (b, x, y) with amplitudes proportional to sqrt(f'_{k,b}(x)(y)).
qsim::StateVector ntcf_samp(const NtcfKey &key);

/// Same state built from the noiseless densities f (lwe: u replaced by A s). Needs the trapdoor.
qsim::StateVector ntcf_samp_ideal(const NtcfKey &key, const NtcfTrapdoor &td);

/// Expectation over uniform x of H^2(f_{k,b}(x), f'_{k,b}(x)), maximized over b.
double hellinger_gap(const NtcfKey &key, const NtcfTrapdoor &td);

/// J: canonical index of x as a width-bit integer (bit 0 of the label is the most significant).
uint64_t j_encode(uint64_t x, uint64_t x_size, uint32_t width);
/// Throws Error(Decode) on strings outside the image of J.
uint64_t j_decode(uint64_t bits, uint64_t x_size, uint32_t width);

/// Dense hardcore set: every nonzero d.
bool g_member(uint64_t d, uint32_t width);

/// Parity of a & b.
uint32_t inner_product_bit(uint64_t a, uint64_t b);

}  // namespace qlease::ntcf

#endif
