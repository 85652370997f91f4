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

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "qlease/common/error.h"
#include "qlease/harness/stats.h"
#include "qlease/lattice/trapdoor.h"
#include "qlease/qsim/distance.h"
#include "qlease/qsim/fourier.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/sis_lightning.h"

using namespace qlease;
using namespace qlease::ttql;
using lattice::ModQVector;

namespace {

struct SisFixture {
    KeyPair kp;
    const SisPublicKey &pk() const {
        return static_cast<const SisPublicKey &>(*kp.pk);
    }
};

SisFixture sis_keys(uint64_t seed) {
    Rng rng(seed);
    return {sis_setup(lattice::SisParams{}, rng)};
}

KeyPair cv_keys(uint64_t seed, ntcf::Backend backend = ntcf::Backend::Clean) {
    CvParams p;
    p.ntcf.backend = backend;
    Rng rng(seed);
    return cv_setup(p, rng);
}

ModQVector label_vector(const SisPublicKey &pk, uint64_t label) {
    const auto &p = pk.params();
    std::vector<uint32_t> d(p.m);
    pk.bolt_basis().decode(label, d);
    return ModQVector(p.q, d);
}

Bolt point_mass_bolt(const SisPublicKey &pk, uint64_t label) {
    Bolt b;
    b.registers.push_back(qsim::Register::own(qsim::StateVector::basis_state(pk.bolt_basis(), label)));
    return b;
}

Bolt copy_bolt(const Bolt &b) {
    Bolt c;
    for (const auto &r : b.registers) {
        c.registers.push_back(r.detached_copy());
    }
    return c;
}

}  // namespace

TEST(sis_lightning, bolt_lies_on_its_coset) {
    SisFixture f = sis_keys(1);
    Rng rng(2);
    for (int i = 0; i < 20; i++) {
        Minted m = f.kp.pk->boltgen(rng);
        ModQVector y = ModQVector::deserialize(m.snum);
        const qsim::StateVector &s = m.bolt.registers[0].block();
        EXPECT_GT(s.support_size(), 1u);
        for (uint64_t l = 0; l < s.size(); l++) {
            if (std::norm(s[l]) > 0) {
                ModQVector x = label_vector(f.pk(), l);
                ASSERT_EQ(f.pk().matrix().mul(x), y);
                ASSERT_TRUE(lattice::within_half_beta(x.norm_sq(), f.pk().params().beta));
            }
        }
    }
}

TEST(sis_lightning, serial_collisions_match_oracle) {
    SisFixture f = sis_keys(3);
    const auto &p = f.pk().params();
    // Oracle: image masses by direct summation of Gaussian weights over the short ball.
    std::map<uint32_t, double> mass;
    double total = 0;
    for (uint64_t l = 0; l < f.pk().bolt_basis().size(); l++) {
        ModQVector x = label_vector(f.pk(), l);
        if (!lattice::within_half_beta(x.norm_sq(), p.beta)) {
            continue;
        }
        double w = std::exp(-M_PI * static_cast<double>(x.norm_sq()) / (p.s_beta * p.s_beta));
        mass[f.pk().matrix().mul(x)[0]] += w;
        total += w;
    }
    double collision = 0;
    for (const auto &[y, w] : mass) {
        collision += (w / total) * (w / total);
    }
    Rng rng(4);
    const uint64_t pairs = 400;
    uint64_t hits = 0;
    for (uint64_t i = 0; i < pairs; i++) {
        hits += f.kp.pk->boltgen(rng).snum == f.kp.pk->boltgen(rng).snum;
    }
    harness::Interval iv = harness::wilson(hits, pairs);
    EXPECT_LE(iv.lower, collision);
    EXPECT_GE(iv.upper, collision);
    EXPECT_LT(collision, 0.05);
}

TEST(sis_lightning, semi_verification_cases) {
    SisFixture f = sis_keys(5);
    Rng rng(6);
    Minted m = f.kp.pk->boltgen(rng);
    EXPECT_GE(f.kp.pk->semi_probability(m.snum, m.bolt), 0.99);
    Bolt point = point_mass_bolt(f.pk(), qsim::measure_all(copy_bolt(m.bolt).registers[0].block(), rng));
    EXPECT_DOUBLE_EQ(f.kp.pk->semi_probability(m.snum, point), 1.0);
    Minted other;
    do {
        other = f.kp.pk->boltgen(rng);
    } while (other.snum == m.snum);
    EXPECT_EQ(f.kp.pk->semi_probability(other.snum, m.bolt), 0.0);
    EXPECT_FALSE(f.kp.pk->semi_vrfy(other.snum, m.bolt, rng));
    EXPECT_EQ(f.kp.pk->semi_probability(Bytes{1, 2, 3}, point), 0.0);
}

TEST(sis_lightning, full_verification_cases) {
    SisFixture f = sis_keys(7);
    Rng rng(8);
    for (int i = 0; i < 5; i++) {
        Minted m = f.kp.pk->boltgen(rng);
        EXPECT_GE(f.kp.sk->full_probability(m.snum, m.bolt), 0.9);
        Bolt measured = copy_bolt(m.bolt);
        Bolt point = measure_and_duplicate(measured, rng);
        EXPECT_LE(f.kp.sk->full_probability(m.snum, point), 0.1);
        Minted other;
        do {
            other = f.kp.pk->boltgen(rng);
        } while (other.snum == m.snum);
        EXPECT_LE(f.kp.sk->full_probability(other.snum, m.bolt), 0.1);
    }
}

TEST(sis_lightning, sampled_full_vrfy_tracks_exact_probability) {
    SisFixture f = sis_keys(9);
    Rng rng(10);
    Minted m = f.kp.pk->boltgen(rng);
    double p = f.kp.sk->full_probability(m.snum, m.bolt);
    const uint64_t trials = 150;
    uint64_t ok = 0;
    for (uint64_t i = 0; i < trials; i++) {
        Bolt c = copy_bolt(m.bolt);
        ok += f.kp.sk->full_vrfy(m.snum, c, rng);
    }
    harness::Interval iv = harness::wilson(ok, trials);
    EXPECT_LE(iv.lower, p);
    EXPECT_GE(iv.upper, p);
}

TEST(sis_lightning, qft_mass_concentrates_near_dual_lattice) {
    SisFixture f = sis_keys(11);
    const auto &pk = f.pk();
    const auto &p = pk.params();
    Rng rng(12);
    Minted m = pk.boltgen(rng);
    qsim::StateVector s = m.bolt.registers[0].block();
    qsim::qft_zqm(s);
    // Distance of w to the row space {A^T r}: the smallest centered error over all r in Z_q^n.
    double near = 0;
    for (uint64_t l = 0; l < s.size(); l++) {
        ModQVector w = label_vector(pk, l);
        int64_t best = INT64_MAX;
        for (uint32_t r = 0; r < p.q; r++) {
            ModQVector row = pk.matrix().row(0).scaled(r);
            best = std::min(best, (w - row).norm_sq());
        }
        if (best <= 9) {
            near += std::norm(s[l]);
        }
    }
    EXPECT_GT(near, 0.9);
}

TEST(sis_lightning, reusability_is_exact) {
    SisFixture f = sis_keys(13);
    Rng rng(14);
    for (int i = 0; i < 5; i++) {
        Minted m = f.kp.pk->boltgen(rng);
        qsim::StateVector before = m.bolt.registers[0].block();
        ASSERT_TRUE(f.kp.pk->semi_vrfy(m.snum, m.bolt, rng));
        EXPECT_LE(qsim::trace_distance_pure(before, m.bolt.registers[0].block()), 1e-6);
    }
}

TEST(sis_lightning, verified_copies_yield_sis_witness) {
    SisFixture f = sis_keys(15);
    const auto &pk = f.pk();
    Rng rng(16);
    Minted m = pk.boltgen(rng);
    // A hypothetical perfect clone: full-verify one copy, semi-verify the other, measure both.
    Bolt a, b = copy_bolt(m.bolt);
    bool full = false;
    for (int attempt = 0; attempt < 10 && !full; attempt++) {
        a = copy_bolt(m.bolt);
        full = f.kp.sk->full_vrfy(m.snum, a, rng);
    }
    ASSERT_TRUE(full);
    ASSERT_TRUE(pk.semi_vrfy(m.snum, b, rng));
    auto da = qsim::register_distribution(a.registers[0]);
    auto db = qsim::register_distribution(b.registers[0]);
    double same = 0;
    for (const auto &[l, pa] : da) {
        auto it = db.find(l);
        if (it != db.end()) {
            same += pa * it->second;
        }
    }
    EXPECT_GE(1 - same, 0.5);
    for (int i = 0; i < 50; i++) {
        Bolt ca = copy_bolt(a), cb = copy_bolt(b);
        ModQVector x0 = label_vector(pk, qsim::measure_register_all(ca.registers[0], rng));
        ModQVector x1 = label_vector(pk, qsim::measure_register_all(cb.registers[0], rng));
        if (x0 != x1) {
            EXPECT_TRUE(lattice::sis_witness_check(pk.matrix(), x0 - x1, pk.params().beta));
        }
    }
}

TEST(sis_lightning, key_serialization_roundtrip) {
    SisFixture f = sis_keys(17);
    auto pk = PublicKey::deserialize(f.kp.pk->serialize());
    EXPECT_EQ(pk->serialize(), f.kp.pk->serialize());
    auto sk = SecretKey::deserialize(f.kp.sk->serialize(), pk);
    EXPECT_EQ(sk->serialize(), f.kp.sk->serialize());
}

TEST(cv_lightning, honest_bolt_semi_and_certificate) {
    for (auto backend : {ntcf::Backend::Clean, ntcf::Backend::Lwe}) {
        KeyPair kp = cv_keys(21, backend);
        const auto &pk = static_cast<const CvPublicKey &>(*kp.pk);
        Rng rng(22);
        Minted m = pk.boltgen(rng);
        EXPECT_EQ(m.bolt.registers.size(), 8u);
        EXPECT_DOUBLE_EQ(pk.semi_probability(m.snum, m.bolt), 1.0);
        double full = kp.sk->full_probability(m.snum, m.bolt);
        double bound = std::pow(1 - std::pow(2.0, -static_cast<double>(pk.width())), 8);
        if (backend == ntcf::Backend::Clean) {
            EXPECT_NEAR(full, bound, 1e-12);
        }
        Certificate cert = pk.bolt_cert(m.bolt, rng);
        EXPECT_TRUE(m.bolt.consumed());
        EXPECT_EQ(cert.entries.size(), 8u);
        EXPECT_EQ(Certificate::deserialize(cert.serialize()), cert);
    }
}

TEST(cv_lightning, certificate_identity_on_clean_claws) {
    KeyPair kp = cv_keys(23);
    const auto &pk = static_cast<const CvPublicKey &>(*kp.pk);
    const auto &sk = static_cast<const CvSecretKey &>(*kp.sk);
    Rng rng(24);
    Minted m = pk.boltgen(rng);
    std::vector<uint64_t> ys = pk.decode_snum(m.snum);
    const uint32_t w = pk.width();
    for (size_t i = 0; i < ys.size(); i++) {
        uint64_t x0 = sk.trapdoors()[i].inv(0, ys[i]);
        uint64_t x1 = sk.trapdoors()[i].inv(1, ys[i]);
        uint64_t diff = x0 ^ x1;
        auto dist = cert_distribution(pk, i, m.bolt.registers[i]);
        std::vector<double> marginal(uint64_t{1} << w, 0.0);
        for (const auto &[outcome, p] : dist) {
            uint64_t d = outcome & ((uint64_t{1} << w) - 1);
            uint32_t bit = static_cast<uint32_t>(outcome >> w);
            EXPECT_EQ(bit, static_cast<uint32_t>(std::popcount(d & diff) & 1));
            marginal[d] += p;
        }
        for (double p : marginal) {
            EXPECT_NEAR(p, std::pow(2.0, -static_cast<double>(w)), 1e-12);
        }
    }
}

TEST(cv_lightning, measured_bolt_and_guessing) {
    KeyPair kp = cv_keys(25);
    const auto &pk = static_cast<const CvPublicKey &>(*kp.pk);
    const auto &sk = static_cast<const CvSecretKey &>(*kp.sk);
    Rng rng(26);
    Minted m = pk.boltgen(rng);
    std::vector<uint64_t> ys = pk.decode_snum(m.snum);
    const uint32_t w = pk.width();
    // Guessing (m_i, d_i) uniformly: exact acceptance by enumeration of every guess.
    double guess = 1;
    for (size_t i = 0; i < ys.size(); i++) {
        uint64_t good = 0;
        for (uint32_t bit = 0; bit < 2; bit++) {
            for (uint64_t d = 0; d < (uint64_t{1} << w); d++) {
                good += sk.entry_ok(i, ys[i], bit, d);
            }
        }
        guess *= static_cast<double>(good) / static_cast<double>(uint64_t{2} << w);
    }
    EXPECT_LE(guess, 0.005);
    // A pre-measured bolt certifies like a guess.
    Bolt measured = measure_and_duplicate(m.bolt, rng);
    double p = sk.full_probability(m.snum, measured);
    EXPECT_LE(p, 0.01);
    EXPECT_TRUE(pk.semi_vrfy(m.snum, measured, rng));
    Bolt empty;
    empty.registers.resize(8);
    try {
        sk.full_probability(m.snum, empty);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
}

TEST(cv_lightning, reusability_and_wrong_serial) {
    KeyPair kp = cv_keys(27);
    Rng rng(28);
    Minted m = kp.pk->boltgen(rng);
    Minted other = kp.pk->boltgen(rng);
    std::vector<qsim::StateVector> before;
    for (const auto &r : m.bolt.registers) {
        before.push_back(r.block());
    }
    ASSERT_TRUE(kp.pk->semi_vrfy(m.snum, m.bolt, rng));
    for (size_t i = 0; i < before.size(); i++) {
        EXPECT_LE(qsim::trace_distance_pure(before[i], m.bolt.registers[i].block()), 1e-6);
    }
    if (other.snum != m.snum) {
        EXPECT_LT(kp.pk->semi_probability(other.snum, m.bolt), 1.0);
    }
}

TEST(cv_lightning, serialization_and_snum_codec) {
    KeyPair kp = cv_keys(29, ntcf::Backend::Lwe);
    const auto &pk = static_cast<const CvPublicKey &>(*kp.pk);
    auto pk2 = PublicKey::deserialize(pk.serialize());
    EXPECT_EQ(pk2->serialize(), pk.serialize());
    auto sk2 = SecretKey::deserialize(kp.sk->serialize(), pk2);
    EXPECT_EQ(sk2->serialize(), kp.sk->serialize());
    Rng rng(30);
    Minted m = pk.boltgen(rng);
    EXPECT_EQ(pk.encode_snum(pk.decode_snum(m.snum)), m.snum);
    Bytes bad = m.snum;
    bad.pop_back();
    EXPECT_THROW(pk.decode_snum(bad), Error);
}
