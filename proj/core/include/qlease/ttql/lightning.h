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

#ifndef QLEASE_TTQL_LIGHTNING_H
#define QLEASE_TTQL_LIGHTNING_H

#include <memory>
#include <vector>

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"
#include "qlease/qsim/registers.h"

namespace qlease::ttql {

enum class Scheme : uint8_t { Sis = 1, Cv = 2 };

const char *scheme_name(Scheme s);

/// The quantum half of a lightning: one register per repetition. Bolts never leave the process.
struct Bolt {
    std::vector<qsim::Register> registers;

    /// True when no register holds a state (for example after certification).
    bool consumed() const;
};

struct Minted {
    Bytes snum;
    Bolt bolt;
};

/// Public side of a two-tier lightning scheme.
class PublicKey {
   public:
    virtual ~PublicKey() = default;

    virtual Scheme scheme() const = 0;
    /// Registers per bolt.
    virtual size_t arity() const = 0;

    virtual Minted boltgen(Rng &rng) const = 0;

    /// Semi-verification as a measurement; a rejected bolt is left collapsed on the reject branch.
    virtual bool semi_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const = 0;
    /// Exact acceptance probability of semi_vrfy; the bolt is not touched.
    virtual double semi_probability(ByteView snum, const Bolt &bolt) const = 0;

    virtual Bytes serialize() const = 0;
    static std::shared_ptr<PublicKey> deserialize(ByteView data);
    /// Like deserialize, but reuses a recently decoded key with identical bytes.
    static std::shared_ptr<const PublicKey> deserialize_cached(ByteView data);
};

/// Secret side; full verification may consume the bolt (classical-verification scheme).
class SecretKey {
   public:
    virtual ~SecretKey() = default;

    virtual Scheme scheme() const = 0;
    virtual bool full_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const = 0;
    virtual double full_probability(ByteView snum, const Bolt &bolt) const = 0;

    virtual Bytes serialize() const = 0;
    static std::shared_ptr<SecretKey> deserialize(ByteView data, std::shared_ptr<const PublicKey> pk);
};

/// Measures every register of `bolt` in the computational basis and returns fresh point-mass
/// registers holding the same outcomes.
Bolt measure_and_duplicate(Bolt &bolt, Rng &rng);

struct KeyPair {
    std::shared_ptr<const PublicKey> pk;
    std::shared_ptr<const SecretKey> sk;
};

}  // namespace qlease::ttql

#endif
