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

#ifndef QLEASE_SSL_SSL_H
#define QLEASE_SSL_SSL_H

#include <optional>
#include <string>

#include "qlease/lattice/trapdoor.h"
#include "qlease/primitives/mac.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/lightning.h"
#include "qlease/ttql/sis_lightning.h"
#include "qlease/watermark/watermark.h"

namespace qlease::ssl {

enum class LightningBackend : uint8_t { Sis = 1, CvClean = 2, CvLwe = 3 };

const char *backend_name(LightningBackend b);
/// "sis", "cv-clean" or "cv-lwe"; throws Usage otherwise.
LightningBackend parse_backend(const std::string &name);

struct SslConfig {
    LightningBackend lightning = LightningBackend::Sis;
    watermark::CircuitKind circuit = watermark::CircuitKind::Prf;
    lattice::SisParams sis;
    ttql::CvParams cv;
    uint32_t mac_tau = 64;
};

/// crs = watermark public parameters.
using SslCrs = watermark::WmParams;

struct SslSecretKey {
    watermark::WmParams pp;
    ttql::KeyPair lightning;
    primitives::MacKey mac;

    Bytes serialize() const;
    static SslSecretKey deserialize(ByteView data);
};

/// Classical half of a lease: the marked program and the MAC tag over the serial number.
struct ClassicalPart {
    Bytes program;
    uint64_t tag = 0;

    void serialize_to(ByteWriter &out) const;
    Bytes serialize() const;
    static ClassicalPart deserialize(ByteReader &in);
    static ClassicalPart deserialize(ByteView data);
    bool operator==(const ClassicalPart &other) const = default;
};

struct LeasedSoftware {
    ttql::Bolt bolt;
    ClassicalPart classical;
};

/// Length-prefixed pk || snum.
Bytes pack_message(ByteView pk, ByteView snum);
/// False on bytes that are not a packed pair.
bool unpack_message(ByteView message, Bytes &pk, Bytes &snum);

SslCrs ssl_setup(const SslConfig &config, Rng &rng);
SslSecretKey ssl_gen(const SslCrs &crs, const SslConfig &config, Rng &rng);

/// Throws UnsupportedCircuit when the circuit does not match the crs variant.
LeasedSoftware ssl_lessor(const SslSecretKey &sk, const watermark::Circuit &c, Rng &rng);

/// Semi-verifies the bolt against the extracted pk || snum, then evaluates the program.
/// nullopt is the rejection symbol. Throws MalformedSoftware on undecodable classical parts.
std::optional<Bytes> ssl_run(const SslCrs &crs, LeasedSoftware &sft, uint64_t x, Rng &rng);

/// Exact parts of Pr_x[Run = C(x)]: semi-verification acceptance times program agreement.
struct RunProbability {
    double semi = 0;
    double agreement = 0;
    double total() const {
        return semi * agreement;
    }
};
RunProbability ssl_run_probability(const SslCrs &crs, const ttql::Bolt &bolt, const ClassicalPart &classical,
                                   const watermark::Circuit &c);

/// MAC check over the extracted serial number, then full verification. Throws MalformedSoftware.
bool ssl_check(const SslSecretKey &sk, LeasedSoftware &sft, Rng &rng);
/// Exact acceptance probability of ssl_check; 0 on malformed input.
double ssl_check_probability(const SslSecretKey &sk, const ttql::Bolt &bolt, const ClassicalPart &classical);

/// Serial number named by the program, if it decodes.
std::optional<Bytes> extracted_snum(const SslCrs &crs, const ClassicalPart &classical);

}  // namespace qlease::ssl

#endif
