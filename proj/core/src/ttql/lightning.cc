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

#include "qlease/ttql/lightning.h"

#include <algorithm>
#include <list>
#include <mutex>

#include "qlease/common/error.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/sis_lightning.h"

namespace qlease::ttql {

const char *scheme_name(Scheme s) {
    return s == Scheme::Sis ? "sis" : "cv";
}

bool Bolt::consumed() const {
    for (const auto &r : registers) {
        if (!r.empty()) {
            return false;
        }
    }
    return true;
}

Bolt measure_and_duplicate(Bolt &bolt, Rng &rng) {
    Bolt copy;
    for (auto &reg : bolt.registers) {
        if (reg.empty()) {
            copy.registers.emplace_back();
            continue;
        }
        qsim::Basis local = reg.local_basis();
        uint64_t outcome = qsim::measure_register_all(reg, rng);
        copy.registers.push_back(qsim::Register::own(qsim::StateVector::basis_state(local, outcome)));
    }
    return copy;
}

std::shared_ptr<PublicKey> PublicKey::deserialize(ByteView data) {
    ByteReader in(data);
    uint8_t tag = in.u8();
    if (tag == static_cast<uint8_t>(Scheme::Sis)) {
        lattice::SisParams params = lattice::SisParams::deserialize(in);
        lattice::ModQMatrix a = lattice::ModQMatrix::deserialize(in);
        in.expect_done();
        try {
            return std::make_shared<SisPublicKey>(params, std::move(a));
        } catch (const Error &e) {
            fail(ErrorCode::Decode, e.what());
        }
    }
    if (tag == static_cast<uint8_t>(Scheme::Cv)) {
        uint32_t n = in.u32le();
        if (n == 0 || n > 64) {
            fail(ErrorCode::Decode, "repetition count out of range");
        }
        std::vector<ntcf::NtcfKey> keys;
        for (uint32_t i = 0; i < n; i++) {
            Bytes blob = in.blob();
            ByteReader kin(blob);
            keys.push_back(ntcf::NtcfKey::deserialize(kin));
            kin.expect_done();
        }
        in.expect_done();
        try {
            return std::make_shared<CvPublicKey>(std::move(keys));
        } catch (const Error &e) {
            fail(ErrorCode::Decode, e.what());
        }
    }
    fail(ErrorCode::Decode, "unknown lightning scheme tag");
}

std::shared_ptr<const PublicKey> PublicKey::deserialize_cached(ByteView data) {
    static std::mutex mu;
    static std::list<std::pair<Bytes, std::shared_ptr<const PublicKey>>> recent;
    constexpr size_t kCapacity = 8;
    std::lock_guard<std::mutex> lock(mu);
    for (auto it = recent.begin(); it != recent.end(); ++it) {
        if (std::equal(it->first.begin(), it->first.end(), data.begin(), data.end())) {
            recent.splice(recent.begin(), recent, it);
            return recent.front().second;
        }
    }
    std::shared_ptr<const PublicKey> pk = deserialize(data);
    recent.emplace_front(Bytes(data.begin(), data.end()), pk);
    if (recent.size() > kCapacity) {
        recent.pop_back();
    }
    return pk;
}

std::shared_ptr<SecretKey> SecretKey::deserialize(ByteView data, std::shared_ptr<const PublicKey> pk) {
    ByteReader in(data);
    uint8_t tag = in.u8();
    if (tag != static_cast<uint8_t>(pk->scheme())) {
        fail(ErrorCode::Decode, "secret key scheme does not match the public key");
    }
    std::shared_ptr<SecretKey> sk;
    if (pk->scheme() == Scheme::Sis) {
        sk = SisSecretKey::deserialize(in, std::static_pointer_cast<const SisPublicKey>(pk));
    } else {
        sk = CvSecretKey::deserialize(in, std::static_pointer_cast<const CvPublicKey>(pk));
    }
    in.expect_done();
    return sk;
}

}  // namespace qlease::ttql
