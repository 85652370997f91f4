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

#ifndef QLEASE_TTQL_CV_LIGHTNING_H
#define QLEASE_TTQL_CV_LIGHTNING_H

#include <map>
#include <mutex>

#include "qlease/ntcf/ntcf.h"
#include "qlease/ttql/lightning.h"

namespace qlease::ttql {

/// One (m_i, d_i) pair per repetition; d_i has `width` bits.
struct Certificate {
    ntcf::Backend backend = ntcf::Backend::Clean;
    uint32_t width = 0;
    std::vector<std::pair<uint32_t, uint64_t>> entries;

    Bytes serialize() const;
    void serialize_to(ByteWriter &out) const;
    static Certificate deserialize(ByteView data);
    static Certificate deserialize(ByteReader &in);
    bool operator==(const Certificate &other) const = default;
};

struct CvParams {
    uint32_t reps = 8;
    ntcf::NtcfParams ntcf;
};

/// Lightning with classical verification: n parallel claw states (|0,x0> + |1,x1>) / sqrt(2).
class CvPublicKey final : public PublicKey {
   public:
    explicit CvPublicKey(std::vector<ntcf::NtcfKey> keys);

    Scheme scheme() const override {
        return Scheme::Cv;
    }
    size_t arity() const override {
        return keys_.size();
    }
    const std::vector<ntcf::NtcfKey> &keys() const {
        return keys_;
    }
    ntcf::Backend backend() const {
        return keys_.front().backend();
    }
    uint32_t width() const {
        return keys_.front().j_width();
    }
    /// Native register layout (b, x).
    qsim::Basis bolt_basis(size_t rep) const;
    /// Layout after J is applied to x: (b, J(x)) as width bits.
    qsim::Basis embedded_basis() const;

    Minted boltgen(Rng &rng) const override;
    bool semi_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const override;
    double semi_probability(ByteView snum, const Bolt &bolt) const override;

    /// Hadamard on (b, J(x)) and a full measurement per repetition. Consumes the bolt.
    Certificate bolt_cert(Bolt &bolt, Rng &rng) const;

    /// Throws Decode on malformed serial numbers.
    std::vector<uint64_t> decode_snum(ByteView snum) const;
    Bytes encode_snum(const std::vector<uint64_t> &ys) const;

    /// Semi predicate for repetition i on either register layout; nullptr for an unknown layout.
    qsim::PredicateFn semi_predicate(size_t rep, uint64_t y, const qsim::Basis &layout) const;

    Bytes serialize() const override;
    void serialize_to(ByteWriter &out) const;

   private:
    const qsim::StateVector &sampler(size_t rep) const;

    std::vector<ntcf::NtcfKey> keys_;
    mutable std::once_flag samplers_once_;
    mutable std::vector<qsim::StateVector> samplers_;
};

class CvSecretKey final : public SecretKey {
   public:
    CvSecretKey(std::shared_ptr<const CvPublicKey> pk, std::vector<ntcf::NtcfTrapdoor> tds);

    Scheme scheme() const override {
        return Scheme::Cv;
    }
    const CvPublicKey &public_key() const {
        return *pk_;
    }
    const std::vector<ntcf::NtcfTrapdoor> &trapdoors() const {
        return tds_;
    }

    bool cert_vrfy(ByteView snum, const Certificate &cert) const;
    /// Whether (m, d) is accepted for repetition rep and image y.
    bool entry_ok(size_t rep, uint64_t y, uint32_t m, uint64_t d) const;

    /// bolt_cert followed by cert_vrfy; consumes the bolt.
    bool full_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const override;
    /// Exact probability that bolt_cert yields an accepted certificate. Registers must not share blocks.
    double full_probability(ByteView snum, const Bolt &bolt) const override;

    Bytes serialize() const override;
    static std::shared_ptr<CvSecretKey> deserialize(ByteReader &in, std::shared_ptr<const CvPublicKey> pk);

   private:
    std::shared_ptr<const CvPublicKey> pk_;
    std::vector<ntcf::NtcfTrapdoor> tds_;
};

KeyPair cv_setup(const CvParams &params, Rng &rng);

/// Exact distribution of (m, d) from certifying one native-layout register, keyed by m * 2^w + d.
std::map<uint64_t, double> cert_distribution(const CvPublicKey &pk, size_t rep, const qsim::Register &reg);

}  // namespace qlease::ttql

#endif
