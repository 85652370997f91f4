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

#ifndef QLEASE_TTQL_SIS_LIGHTNING_H
#define QLEASE_TTQL_SIS_LIGHTNING_H

#include <mutex>

#include "qlease/lattice/trapdoor.h"
#include "qlease/ttql/lightning.h"

namespace qlease::ttql {

/// Lightning from SIS: the bolt is a Gaussian superposition over a coset {x : A x = y}.
class SisPublicKey final : public PublicKey {
   public:
    SisPublicKey(lattice::SisParams params, lattice::ModQMatrix a);

    Scheme scheme() const override {
        return Scheme::Sis;
    }
    size_t arity() const override {
        return 1;
    }
    const lattice::SisParams &params() const {
        return params_;
    }
    const lattice::ModQMatrix &matrix() const {
        return a_;
    }
    qsim::Basis bolt_basis() const;

    Minted boltgen(Rng &rng) const override;
    bool semi_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const override;
    double semi_probability(ByteView snum, const Bolt &bolt) const override;

    /// Semi predicate on the digits of x: A x = y and 4 ||x||^2 <= beta^2.
    qsim::PredicateFn semi_predicate(const lattice::ModQVector &y) const;
    /// Decodes a serial number; returns false on malformed bytes or a wrong shape.
    bool decode_snum(ByteView snum, lattice::ModQVector &y) const;

    Bytes serialize() const override;
    void serialize_to(ByteWriter &out) const;

    /// True when the register is a whole block laid out exactly as bolt_basis(), so predicates can
    /// be evaluated on label indices.
    bool native_layout(const qsim::Register &reg) const;
    /// Index form of semi_predicate for native-layout registers; y is the mixed-radix index of y.
    bool semi_index(uint64_t label, uint64_t y) const {
        const Cache &c = cache();
        return c.is_short[label] && c.y_index[label] == y;
    }
    uint64_t y_index(const lattice::ModQVector &y) const;

   private:
    struct Cache {
        std::vector<double> weights;
        std::vector<uint8_t> is_short;
        std::vector<uint32_t> y_index;
        std::vector<double> y_mass;
    };
    const Cache &cache() const;

    lattice::SisParams params_;
    lattice::ModQMatrix a_;
    mutable std::once_flag cache_once_;
    mutable std::unique_ptr<Cache> cache_;
};

class SisSecretKey final : public SecretKey {
   public:
    SisSecretKey(std::shared_ptr<const SisPublicKey> pk, lattice::SisTrapdoor td);

    Scheme scheme() const override {
        return Scheme::Sis;
    }
    const lattice::SisTrapdoor &trapdoor() const {
        return td_;
    }

    /// Semi projection, QFT, one threshold measurement per trapdoor column, inverse QFT.
    bool full_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const override;
    double full_probability(ByteView snum, const Bolt &bolt) const override;

    Bytes serialize() const override;
    static std::shared_ptr<SisSecretKey> deserialize(ByteReader &in, std::shared_ptr<const SisPublicKey> pk);

   private:
    qsim::PredicateFn dual_predicate(const lattice::ModQVector &v) const;
    /// dual_predicate tabulated over label indices, one table per trapdoor column.
    const std::vector<std::vector<uint8_t>> &dual_tables() const;

    std::shared_ptr<const SisPublicKey> pk_;
    lattice::SisTrapdoor td_;
    mutable std::once_flag dual_once_;
    mutable std::vector<std::vector<uint8_t>> dual_tables_;
};

KeyPair sis_setup(const lattice::SisParams &params, Rng &rng);

}  // namespace qlease::ttql

#endif
