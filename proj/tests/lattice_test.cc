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
#include "qlease/lattice/gaussian.h"
#include "qlease/lattice/modq.h"
#include "qlease/lattice/trapdoor.h"

using namespace qlease;
using namespace qlease::lattice;

TEST(modq, center_uncenter_bijection) {
    for (uint32_t q : {3u, 31u, 71u}) {
        for (int64_t z = -static_cast<int64_t>(q - 1) / 2; z <= static_cast<int64_t>(q - 1) / 2; z++) {
            ASSERT_EQ(center(uncenter(z, q), q), z);
        }
        for (uint32_t v = 0; v < q; v++) {
            ASSERT_EQ(uncenter(center(v, q), q), v);
        }
    }
}

TEST(modq, inverse_and_primality) {
    EXPECT_TRUE(is_odd_prime(31));
    EXPECT_FALSE(is_odd_prime(2));
    EXPECT_FALSE(is_odd_prime(33));
    for (uint32_t a = 1; a < 31; a++) {
        EXPECT_EQ(uint64_t{a} * inverse_mod(a, 31) % 31, 1u);
    }
    EXPECT_THROW(inverse_mod(0, 31), Error);
}

TEST(modq, kernel_basis_spans_kernel) {
    Rng rng(5);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<uint32_t> e(6);
        for (auto &v : e) {
            v = static_cast<uint32_t>(uniform_below(rng, 31));
        }
        ModQMatrix a(2, 3, 31, e);
        auto basis = a.kernel_basis();
        EXPECT_EQ(basis.size(), 3 - a.rank());
        for (const auto &b : basis) {
            EXPECT_TRUE(a.mul(b).is_zero());
        }
        // Count the kernel exhaustively: it has q^(m - rank) elements.
        size_t count = 0;
        for (uint32_t x = 0; x < 31u * 31 * 31; x++) {
            ModQVector v(31, {x / 961, x / 31 % 31, x % 31});
            count += a.mul(v).is_zero();
        }
        size_t expected = 1;
        for (size_t i = 0; i < basis.size(); i++) {
            expected *= 31;
        }
        EXPECT_EQ(count, expected);
    }
}

TEST(modq, serialization_layout) {
    ModQMatrix a(1, 2, 31, {5, 7});
    Bytes b = a.serialize();
    Bytes expected = {1, 0, 0, 0, 2, 0, 0, 0, 31, 0, 0, 0, 5, 0, 0, 0, 7, 0, 0, 0};
    EXPECT_EQ(b, expected);
    EXPECT_EQ(ModQMatrix::deserialize(b), a);
    ModQVector v(31, {30, 1});
    EXPECT_EQ(ModQVector::deserialize(v.serialize()), v);
}

TEST(trapgen, kernel_membership_exhaustive) {
    Rng rng(1);
    for (uint32_t r : {1u, 2u}) {
        SisParams p = SisParams::tiny(r);
        for (int trial = 0; trial < 50; trial++) {
            TrapGenResult t = trapgen(p, rng);
            ASSERT_EQ(t.td.columns.size(), r);
            EXPECT_EQ(t.a.rank(), p.n);
            for (const auto &v : t.td.columns) {
                EXPECT_TRUE(t.a.mul(v).is_zero());
                EXPECT_LE(v.norm(), p.bound_alpha + 1e-12);
            }
        }
    }
}

TEST(trapgen, r_equal_m_is_rejected) {
    Rng rng(1);
    SisParams p = SisParams::tiny(1);
    p.r = p.m;
    try {
        trapgen(p, rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Parameter);
    }
}

TEST(trapgen, column_norms_match_rejection_oracle) {
    SisParams p = SisParams::tiny(1);
    // Oracle: uniform proposals on a box, accepted with the Gaussian weight, conditioned like trapgen.
    Rng orng(99);
    std::map<int64_t, double> oracle;
    const int box = 3;
    size_t accepted = 0;
    while (accepted < 200000) {
        int64_t sq = 0;
        for (uint32_t i = 0; i < p.m; i++) {
            int64_t z = static_cast<int64_t>(uniform_below(orng, 2 * box + 1)) - box;
            sq += z * z;
        }
        if (uniform01(orng) >= std::exp(-M_PI * static_cast<double>(sq) / (p.s_alpha * p.s_alpha))) {
            continue;
        }
        if (sq == 0 || static_cast<double>(sq) > p.bound_alpha * p.bound_alpha) {
            continue;
        }
        oracle[sq] += 1;
        accepted++;
    }
    Rng rng(7);
    std::map<int64_t, double> observed;
    const int draws = 1000;
    for (int i = 0; i < draws; i++) {
        observed[trapgen(p, rng).td.columns[0].norm_sq()] += 1;
    }
    double chi2 = 0;
    for (const auto &[k, c] : oracle) {
        double expected = c / accepted * draws;
        chi2 += (observed[k] - expected) * (observed[k] - expected) / expected;
    }
    for (const auto &[k, c] : observed) {
        EXPECT_TRUE(oracle.count(k)) << "norm^2 " << k << " never produced by the oracle";
    }
    // One degree of freedom per category beyond the first; 9.21 is the 1% point for 2 dof.
    EXPECT_LT(chi2, oracle.size() <= 2 ? 6.635 : 9.21);
}

TEST(gaussian, tiny_width_is_zero) {
    Rng rng(3);
    for (int i = 0; i < 1000; i++) {
        EXPECT_TRUE(gaussian_sample(0.01, 4, 31, rng).is_zero());
    }
    EXPECT_EQ(gaussian_sample(2, 0, 31, rng).dim(), 0u);
    EXPECT_THROW(gaussian_sample(0, 1, 31, rng), Error);
}

TEST(gaussian, empirical_pmf_matches_analytic) {
    const uint32_t q = 31;
    const double s = 2;
    std::vector<double> analytic(q);
    double total = 0;
    for (int z = -15; z <= 15; z++) {
        double w = std::exp(-M_PI * z * z / (s * s));
        analytic[uncenter(z, q)] = w;
        total += w;
    }
    for (auto &v : analytic) {
        v /= total;
    }
    Rng rng(11);
    std::vector<double> counts(q);
    const int draws = 100000;
    for (int i = 0; i < draws; i++) {
        counts[gaussian_sample(s, 1, q, rng)[0]] += 1;
    }
    double tv = 0;
    for (uint32_t v = 0; v < q; v++) {
        tv += std::abs(counts[v] / draws - analytic[v]);
    }
    EXPECT_LT(tv / 2, 0.02);
}

TEST(sis_witness, basic_cases) {
    Rng rng(2);
    SisParams p = SisParams::tiny(1);
    TrapGenResult t = trapgen(p, rng);
    EXPECT_FALSE(sis_witness_check(t.a, ModQVector::zero(p.q, p.m), p.beta));
    EXPECT_TRUE(sis_witness_check(t.a, t.td.columns[0], p.beta));
    EXPECT_FALSE(sis_witness_check(t.a, t.td.columns[0], 0.5));
    try {
        sis_witness_check(t.a, ModQVector::zero(p.q, p.m + 1), p.beta);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(sis_witness, difference_of_short_colliding_vectors) {
    Rng rng(4);
    SisParams p = SisParams::tiny(1);
    TrapGenResult t = trapgen(p, rng);
    // Group short vectors by image and check every distinct pair in a class.
    std::map<uint32_t, std::vector<ModQVector>> by_image;
    for (uint32_t x = 0; x < p.q * p.q * p.q; x++) {
        ModQVector v(p.q, {x / (p.q * p.q), x / p.q % p.q, x % p.q});
        if (within_half_beta(v.norm_sq(), p.beta)) {
            by_image[t.a.mul(v)[0]].push_back(v);
        }
    }
    Rng pick(8);
    int checked = 0;
    for (const auto &[y, vs] : by_image) {
        for (int k = 0; k < 20 && vs.size() > 1; k++) {
            const auto &a = vs[uniform_below(pick, vs.size())];
            const auto &b = vs[uniform_below(pick, vs.size())];
            if (a == b) {
                continue;
            }
            EXPECT_TRUE(sis_witness_check(t.a, a - b, p.beta));
            checked++;
        }
    }
    EXPECT_GT(checked, 100);
}
