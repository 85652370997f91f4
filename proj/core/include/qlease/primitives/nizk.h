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

#ifndef QLEASE_PRIMITIVES_NIZK_H
#define QLEASE_PRIMITIVES_NIZK_H

#include <functional>

#include "qlease/common/bytes.h"
#include "qlease/common/rng.h"

namespace qlease::primitives {

/// Proof system stand-in: complete, bound to the statement, and extractable with the trapdoor.
/// It is not sound and not zero-knowledge.
struct NizkCrs {
    Bytes public_key;
    Bytes domain;

    void serialize_to(ByteWriter &out) const;
    static NizkCrs deserialize(ByteReader &in);
    bool operator==(const NizkCrs &other) const = default;
};

struct NizkTrapdoor {
    Bytes secret_key;
};

struct NizkProof {
    Bytes digest;
    Bytes capsule;
    Bytes tag;

    void serialize_to(ByteWriter &out) const;
    static NizkProof deserialize(ByteReader &in);
    bool operator==(const NizkProof &other) const = default;
};

using Relation = std::function<bool(ByteView statement, ByteView witness)>;

struct NizkSetup {
    NizkCrs crs;
    NizkTrapdoor td;
};

NizkCrs nizk_setup(Rng &rng, std::string_view domain = "qlease-nizk");
NizkSetup nizk_fk_setup(Rng &rng, std::string_view domain = "qlease-nizk");

Bytes nizk_statement_digest(const NizkCrs &crs, ByteView statement);

/// Throws RelationViolation when (statement, witness) is not in the relation.
NizkProof nizk_prove(const NizkCrs &crs, const Relation &relation, ByteView statement, ByteView witness, Rng &rng);
bool nizk_vrfy(const NizkCrs &crs, ByteView statement, const NizkProof &proof);

/// Simulated proof carrying a planted witness; no relation check.
NizkProof nizk_sim1(const NizkCrs &crs, const NizkTrapdoor &td, ByteView statement, ByteView planted, Rng &rng);
/// Opens the capsule; throws ExtractFailure when it does not authenticate.
Bytes nizk_sim2(const NizkCrs &crs, const NizkTrapdoor &td, ByteView statement, const NizkProof &proof);

}  // namespace qlease::primitives

#endif
