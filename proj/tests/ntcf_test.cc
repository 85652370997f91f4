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
#include <set>

#include "gtest/gtest.h"
#include "qlease/common/error.h"
#include "qlease/ntcf/ntcf.h"
#include "qlease/qsim/distance.h"

using namespace qlease;
using namespace qlease::ntcf;
using lattice::ModQVector;

namespace {

NtcfPair clean_pair(uint32_t bits, uint64_t seed) {
    NtcfParams p;
    p.clean.x_bits = bits;
    p.j_width = bits + 1;
    Rng rng(seed);
    return ntcf_gen(p, rng);
}

NtcfPair lwe_pair(uint64_t seed) {
    NtcfParams p;
    p.backend = Backend::Lwe;
    p.j_width = 5;
    Rng rng(seed);
    return ntcf_gen(p, rng);
}

// Every y reachable from (b, x) with box noise, computed from A, u directly.
std::set<uint64_t> lwe_support(const NtcfKey &key, uint32_t b, uint64_t x) {
    const auto &a = key.lwe_a();
    const uint32_t q = a.modulus();
    const int64_t bound = key.lwe_noise_bound();
    ModQVector center = a.mul(key.lwe_x_vector(x));
    if (b == 1) {
        center = center + key.lwe_u();
    }
    std::set<uint64_t> out;
    const int64_t width = 2 * bound + 1;
    int64_t count = 1;
    for (size_t i = 0; i < a.rows(); i++) {
        count *= width;
    }
    for (int64_t k = 0; k < count; k++) {
        std::vector<int64_t> e(a.rows());
        int64_t t = k;
        for (size_t i = 0; i < a.rows(); i++) {
            e[i] = t % width - bound;
            t /= width;
        }
        out.insert(key.lwe_y_index(center + ModQVector::from_centered(q, e)));
    }
    return out;
}

}  // namespace

TEST(ntcf_clean, bijections_with_matching) {
    NtcfPair p = clean_pair(3, 1);
    ASSERT_EQ(p.key.x_size(), 8u);
    for (uint32_t b = 0; b < 2; b++) {
        std::set<uint32_t> image(p.key.clean_table(b).begin(), p.key.clean_table(b).end());
        EXPECT_EQ(image.size(), 8u);
    }
    for (uint64_t y = 0; y < 8; y++) {
        uint64_t x0 = p.td.inv(0, y), x1 = p.td.inv(1, y);
        EXPECT_EQ(p.key.clean_table(0)[x0], y);
        EXPECT_EQ(p.key.clean_table(1)[x1], y);
    }
}

TEST(ntcf_clean, chk_and_inv_consistency) {
    NtcfPair p = clean_pair(4, 2);
    for (uint32_t b = 0; b < 2; b++) {
        for (uint64_t x = 0; x < 16; x++) {
            for (uint64_t y = 0; y < 16; y++) {
                bool chk = p.key.chk(b, x, y);
                EXPECT_EQ(chk, p.key.clean_table(b)[x] == y);
                EXPECT_EQ(chk, p.td.inv(b, y) == x);
            }
        }
    }
    EXPECT_FALSE(p.key.chk(2, 0, 0));
    try {
        p.td.inv(0, 16);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInRange);
    }
}

TEST(ntcf_clean, samp_is_uniform_over_graph) {
    NtcfPair p = clean_pair(3, 3);
    qsim::StateVector s = ntcf_samp(p.key);
    EXPECT_NEAR(s.norm_sq(), 1, 1e-9);
    EXPECT_EQ(s.support_size(), 16u);
    for (uint32_t b = 0; b < 2; b++) {
        for (uint64_t x = 0; x < 8; x++) {
            uint64_t y = p.key.clean_table(b)[x];
            EXPECT_NEAR(std::abs(s[(b * 8 + x) * 8 + y]), 0.25, 1e-12);
        }
    }
}

TEST(ntcf_clean, size_over_cap_is_rejected) {
    NtcfParams p;
    p.clean.x_bits = 14;
    p.j_width = 15;
    Rng rng(1);
    try {
        ntcf_gen(p, rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Parameter);
    }
}

TEST(ntcf_lwe, supports_disjoint_and_chk_matches_table) {
    for (uint64_t seed = 1; seed <= 5; seed++) {
        NtcfPair p = lwe_pair(seed);
        const NtcfKey &k = p.key;
        std::set<uint64_t> seen;
        size_t total = 0;
        for (uint32_t b = 0; b < 2; b++) {
            std::set<uint64_t> branch;
            for (uint64_t x = 0; x < k.x_size(); x++) {
                auto sup = lwe_support(k, b, x);
                total += sup.size();
                branch.insert(sup.begin(), sup.end());
                for (uint64_t y = 0; y < k.y_size(); y++) {
                    ASSERT_EQ(k.chk(b, x, y), sup.count(y) == 1);
                }
                std::set<uint64_t> dens;
                for (const auto &[y, pr] : k.density(b, x)) {
                    dens.insert(y);
                    EXPECT_NEAR(pr, 1.0 / sup.size(), 1e-15);
                }
                EXPECT_EQ(dens, sup);
            }
            // Within one branch the supports of distinct x never meet.
            size_t branch_total = 0;
            for (uint64_t x = 0; x < k.x_size(); x++) {
                branch_total += lwe_support(k, b, x).size();
            }
            EXPECT_EQ(branch.size(), branch_total);
        }
        EXPECT_GT(total, 0u);
    }
}

TEST(ntcf_lwe, inverter_recovers_planted_x) {
    NtcfPair p = lwe_pair(6);
    const NtcfKey &k = p.key;
    Rng rng(7);
    const uint32_t q = k.lwe_a().modulus();
    for (int i = 0; i < 100; i++) {
        uint64_t x = uniform_below(rng, k.x_size());
        uint32_t b = static_cast<uint32_t>(uniform_below(rng, 2));
        std::vector<int64_t> e(k.lwe_a().rows());
        for (auto &v : e) {
            v = static_cast<int64_t>(uniform_below(rng, 2 * k.lwe_noise_bound() + 1)) - k.lwe_noise_bound();
        }
        ModQVector y = k.lwe_a().mul(k.lwe_x_vector(x)) + ModQVector::from_centered(q, e);
        if (b == 1) {
            y = y + k.lwe_u();
        }
        EXPECT_EQ(p.td.inv(b, k.lwe_y_index(y)), x);
    }
    EXPECT_THROW(p.td.inv(0, k.y_size()), Error);
}

TEST(ntcf_lwe, samp_close_to_ideal_when_noise_is_calibrated) {
    int close = 0;
    const int keys = 100;
    for (int seed = 0; seed < keys; seed++) {
        NtcfPair p = lwe_pair(1000 + seed);
        qsim::StateVector real = ntcf_samp(p.key);
        qsim::StateVector ideal = ntcf_samp_ideal(p.key, p.td);
        EXPECT_NEAR(real.norm_sq(), 1, 1e-9);
        double td = qsim::trace_distance_pure(real, ideal);
        // The only gap between the two families is e0; a zero e0 makes them equal.
        if (p.td.lwe_e0().is_zero()) {
            EXPECT_LT(td, 1e-9);
            close++;
        } else {
            EXPECT_GT(td, 0.05);
        }
        // Samp/Chk consistency.
        const uint64_t xs = p.key.x_size(), ys = p.key.y_size();
        for (uint64_t i = 0; i < real.size(); i++) {
            if (std::norm(real[i]) > 0) {
                ASSERT_TRUE(p.key.chk(static_cast<uint32_t>(i / (xs * ys)), i / ys % xs, i % ys));
            }
        }
    }
    EXPECT_GE(close, 90);
}

TEST(ntcf_lwe, hellinger_gap_matches_direct_computation) {
    for (int seed = 0; seed < 40; seed++) {
        NtcfPair p = lwe_pair(2000 + seed);
        const NtcfKey &k = p.key;
        // f_{k,1}(x) is the box around A (x + s); f'_{k,1}(x) is the box around A x + u.
        double worst = 0;
        for (uint32_t b = 0; b < 2; b++) {
            double total = 0;
            for (uint64_t x = 0; x < k.x_size(); x++) {
                auto noisy = lwe_support(k, b, x);
                std::set<uint64_t> ideal;
                if (b == 0) {
                    ideal = noisy;
                } else {
                    ModQVector shift = k.lwe_u() - k.lwe_a().mul(p.td.lwe_s());
                    for (uint64_t y : noisy) {
                        ideal.insert(k.lwe_y_index(k.lwe_y_vector(y) - shift));
                    }
                }
                size_t overlap = 0;
                for (uint64_t y : noisy) {
                    overlap += ideal.count(y);
                }
                total += 1.0 - static_cast<double>(overlap) / noisy.size();
            }
            worst = std::max(worst, total / k.x_size());
        }
        EXPECT_NEAR(hellinger_gap(k, p.td), worst, 1e-12);
    }
}

TEST(ntcf_j, injection_roundtrip) {
    const uint64_t xs = 16;
    const uint32_t w = 5;
    std::set<uint64_t> images;
    for (uint64_t x = 0; x < xs; x++) {
        uint64_t j = j_encode(x, xs, w);
        EXPECT_LT(j, uint64_t{1} << w);
        EXPECT_EQ(j_decode(j, xs, w), x);
        images.insert(j);
    }
    EXPECT_EQ(images.size(), xs);
    try {
        j_decode(20, xs, w);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Decode);
    }
    NtcfParams p;
    p.clean.x_bits = 4;
    p.j_width = 3;
    Rng rng(1);
    EXPECT_THROW(ntcf_gen(p, rng), Error);
}

TEST(ntcf_g, dense_hardcore_set) {
    const uint32_t w = 11;
    EXPECT_FALSE(g_member(0, w));
    Rng rng(2);
    for (int i = 0; i < 1000; i++) {
        uint64_t d = 1 + uniform_below(rng, (uint64_t{1} << w) - 1);
        EXPECT_TRUE(g_member(d, w));
    }
    uint64_t misses = 0;
    for (uint64_t d = 0; d < (uint64_t{1} << w); d++) {
        misses += !g_member(d, w);
    }
    EXPECT_EQ(misses, 1u);
    EXPECT_EQ(inner_product_bit(0b1011, 0b0110), 1u);
}

TEST(ntcf_key, serialization_roundtrip) {
    for (const NtcfPair &p : {clean_pair(4, 9), lwe_pair(9)}) {
        Bytes b = p.key.serialize();
        ByteReader r(b);
        NtcfKey k = NtcfKey::deserialize(r);
        EXPECT_TRUE(r.done());
        EXPECT_EQ(k, p.key);
    }
}
