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
#include <complex>

#include "gtest/gtest.h"
#include "qlease/common/error.h"
#include "qlease/ntcf/ntcf.h"
#include "qlease/qsim/distance.h"
#include "qlease/qsim/fourier.h"
#include "qlease/qsim/ops.h"
#include "qlease/qsim/registers.h"

using namespace qlease;
using namespace qlease::qsim;

namespace {

StateVector random_state(const Basis &basis, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(basis.size());
    for (auto &a : amps) {
        a = Amplitude(g(rng), g(rng));
    }
    StateVector s(basis, amps);
    s.normalize();
    return s;
}

// Textbook DFT on one Z_q^m register, summing over every pair of labels.
std::vector<Amplitude> naive_qft(const StateVector &s, uint32_t q, uint32_t m) {
    const Basis &b = s.basis();
    std::vector<Amplitude> out(b.size());
    std::vector<uint32_t> w(m), x(m);
    for (uint64_t i = 0; i < b.size(); i++) {
        b.decode(i, w);
        Amplitude acc = 0;
        for (uint64_t j = 0; j < b.size(); j++) {
            b.decode(j, x);
            uint64_t dot = 0;
            for (uint32_t k = 0; k < m; k++) {
                dot += uint64_t{w[k]} * x[k];
            }
            acc += std::polar(1.0, 2 * M_PI * static_cast<double>(dot % q) / q) * s[j];
        }
        out[i] = acc / std::pow(static_cast<double>(q), m / 2.0);
    }
    return out;
}

double max_diff(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

}  // namespace

TEST(basis, canonical_order_and_text) {
    Basis b({Component::bits(1), Component::residues(3, 2)});
    EXPECT_EQ(b.size(), 18u);
    std::vector<uint32_t> d(3);
    b.decode(5, d);
    EXPECT_EQ(d, (std::vector<uint32_t>{0, 1, 2}));
    EXPECT_EQ(b.encode(d), 5u);
    EXPECT_EQ(b.label_text(5), "(0|1,2)");
    std::vector<uint32_t> odo(3, 0);
    for (uint64_t i = 0; i < b.size(); i++) {
        ASSERT_EQ(b.encode(odo), i);
        next_label(b, odo);
    }
}

TEST(basis, dimension_cap) {
    EXPECT_THROW(prepare_weighted(Basis::bits(40), [](Digits) { return 1.0; }), Error);
}

TEST(prepare, point_mass_and_uniform) {
    Basis b = Basis::residues(5, 2);
    StateVector s = prepare_weighted(b, [](Digits d) { return d[0] == 2 && d[1] == 3 ? 1.0 : 0.0; });
    EXPECT_EQ(s.support_size(), 1u);
    EXPECT_NEAR(std::abs(s[13]), 1, 1e-15);
    StateVector u = prepare_weighted(Basis::residues(2, 1), [](Digits) { return 1.0; });
    EXPECT_NEAR(u[0].real(), M_SQRT1_2, 1e-15);
    EXPECT_NEAR(u[1].real(), M_SQRT1_2, 1e-15);
    try {
        prepare_weighted(b, [](Digits) { return 0.0; });
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
    }
}

TEST(prepare, gaussian_amplitudes) {
    const uint32_t q = 31;
    const double s = 14;
    Basis b = Basis::residues(q, 3);
    StateVector st = prepare_weighted(b, [&](Digits d) {
        double sq = 0;
        for (uint32_t v : d) {
            double c = static_cast<double>(lattice::center(v, q));
            sq += c * c;
        }
        return std::exp(-M_PI * sq / (s * s));
    });
    // Oracle: normalize by a direct sum over centered integer triples.
    double total = 0;
    for (int a = -15; a <= 15; a++) {
        for (int c = -15; c <= 15; c++) {
            for (int e = -15; e <= 15; e++) {
                total += std::exp(-M_PI * (a * a + c * c + e * e) / (s * s));
            }
        }
    }
    double worst = 0;
    std::vector<uint32_t> d(3);
    for (uint64_t i = 0; i < b.size(); i++) {
        b.decode(i, d);
        double sq = 0;
        for (uint32_t v : d) {
            double c = static_cast<double>(lattice::center(v, q));
            sq += c * c;
        }
        double want = std::sqrt(std::exp(-M_PI * sq / (s * s)) / total);
        worst = std::max(worst, std::abs(st[i] - Amplitude(want, 0)));
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(measure, apply_and_measure_pushforward) {
    Rng rng(1);
    Basis b = Basis::residues(7, 2);
    StateVector s = random_state(b, rng);
    auto f = [](Digits d) { return uint64_t{(d[0] + 2 * d[1]) % 5}; };
    auto dist = outcome_distribution(s, f);
    std::vector<double> oracle(5, 0);
    std::vector<uint32_t> d(2);
    for (uint64_t i = 0; i < b.size(); i++) {
        b.decode(i, d);
        oracle[(d[0] + 2 * d[1]) % 5] += std::norm(s[i]);
    }
    for (uint64_t o = 0; o < 5; o++) {
        EXPECT_NEAR(dist[o], oracle[o], 1e-14);
    }
    StateVector c = s;
    uint64_t o = apply_and_measure(c, f, rng);
    double pnorm = std::sqrt(oracle[o]);
    for (uint64_t i = 0; i < b.size(); i++) {
        b.decode(i, d);
        Amplitude want = (d[0] + 2 * d[1]) % 5 == o ? s[i] / pnorm : Amplitude(0);
        EXPECT_LT(std::abs(c[i] - want), 1e-12);
    }
    StateVector point = StateVector::basis_state(b, 17);
    StateVector before = point;
    EXPECT_EQ(apply_and_measure(point, [](Digits d) { return uint64_t{d[0] * 7 + d[1]}; }, rng), 17u);
    EXPECT_EQ(point.amplitudes(), before.amplitudes());
}

TEST(measure, clean_ntcf_collapse_is_claw_state) {
    Rng rng(2);
    ntcf::NtcfParams p;
    p.j_width = 4;
    p.clean.x_bits = 3;
    ntcf::NtcfPair pair = ntcf::ntcf_gen(p, rng);
    auto regs = Register::split(ntcf::ntcf_samp(pair.key), {{0, 1}, {2}});
    uint64_t y = measure_register_all(regs[1], rng);
    const StateVector &s = regs[0].block();
    uint64_t x0 = pair.td.inv(0, y), x1 = pair.td.inv(1, y);
    EXPECT_EQ(s.support_size(), 2u);
    uint64_t xs = pair.key.x_size(), ys = pair.key.y_size();
    EXPECT_NEAR(std::abs(s[(0 * xs + x0) * ys + y]), M_SQRT1_2, 1e-12);
    EXPECT_NEAR(std::abs(s[(1 * xs + x1) * ys + y]), M_SQRT1_2, 1e-12);
}

TEST(measure, predicate_cases_and_idempotence) {
    Rng rng(3);
    Basis b = Basis::residues(5, 2);
    StateVector s = random_state(b, rng);
    StateVector t = s;
    EXPECT_TRUE(measure_predicate(t, [](Digits) { return true; }, rng));
    EXPECT_LT(max_diff(t.amplitudes(), s.amplitudes()), 1e-15);
    EXPECT_FALSE(measure_predicate(t, [](Digits) { return false; }, rng));
    EXPECT_LT(max_diff(t.amplitudes(), s.amplitudes()), 1e-15);
    auto pred = [](Digits d) { return d[0] < 3; };
    bool first = measure_predicate(t, pred, rng);
    StateVector once = t;
    for (int i = 0; i < 5; i++) {
        EXPECT_EQ(measure_predicate(t, pred, rng), first);
    }
    EXPECT_LT(max_diff(t.amplitudes(), once.amplitudes()), 1e-15);
    EXPECT_NEAR(t.norm_sq(), 1, 1e-12);
}

TEST(measure, measure_all_frequencies) {
    Rng rng(4);
    Basis b = Basis::bits(2);
    StateVector u = prepare_weighted(b, [](Digits) { return 1.0; });
    std::vector<int> counts(4);
    const int trials = 100000;
    for (int i = 0; i < trials; i++) {
        StateVector c = u;
        counts[measure_all(c, rng)]++;
    }
    for (int c : counts) {
        EXPECT_NEAR(c / static_cast<double>(trials), 0.25, 0.01);
    }
    StateVector p = StateVector::basis_state(b, 2);
    EXPECT_EQ(measure_all(p, rng), 2u);
}

TEST(fourier, matches_naive_dft) {
    Rng rng(5);
    for (uint32_t q : {2u, 3u, 5u, 7u}) {
        for (uint32_t m : {1u, 2u, 3u}) {
            StateVector s = random_state(Basis::residues(q, m), rng);
            std::vector<Amplitude> want = naive_qft(s, q, m);
            qft_zqm(s);
            EXPECT_LT(max_diff(s.amplitudes(), want), 1e-12) << q << "^" << m;
        }
    }
}

TEST(fourier, zero_state_goes_uniform_and_roundtrips) {
    StateVector s = StateVector::basis_state(Basis::residues(31, 1), 0);
    qft_zqm(s);
    for (uint64_t i = 0; i < 31; i++) {
        EXPECT_NEAR(std::abs(s[i]), 1 / std::sqrt(31.0), 1e-14);
    }
    Rng rng(6);
    StateVector r = random_state(Basis::residues(31, 2), rng);
    StateVector c = r;
    inverse_qft_zqm(c);
    qft_zqm(c);
    EXPECT_LT(max_diff(c.amplitudes(), r.amplitudes()), 1e-10);
    StateVector wrong = random_state(Basis::bits(3), rng);
    try {
        qft_zqm(wrong);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BasisMismatch);
    }
}

TEST(fourier, unitary_on_random_pairs) {
    Rng rng(7);
    Basis b = Basis::residues(11, 2);
    for (int i = 0; i < 10; i++) {
        StateVector x = random_state(b, rng), y = random_state(b, rng);
        Amplitude before = inner_product(x, y);
        qft_zqm(x);
        qft_zqm(y);
        EXPECT_LT(std::abs(inner_product(x, y) - before), 1e-10);
    }
    Basis h = Basis::bits(6);
    for (int i = 0; i < 10; i++) {
        StateVector x = random_state(h, rng), y = random_state(h, rng);
        Amplitude before = inner_product(x, y);
        hadamard_bits(x);
        hadamard_bits(y);
        EXPECT_LT(std::abs(inner_product(x, y) - before), 1e-10);
    }
}

TEST(fourier, hadamard_cases) {
    StateVector z = StateVector::basis_state(Basis::bits(5), 0);
    hadamard_bits(z);
    for (uint64_t i = 0; i < 32; i++) {
        EXPECT_NEAR(z[i].real(), 1 / std::sqrt(32.0), 1e-15);
    }
    Rng rng(8);
    StateVector r = random_state(Basis::bits(7), rng);
    StateVector c = r;
    hadamard_bits(c);
    hadamard_bits(c);
    EXPECT_LT(max_diff(c.amplitudes(), r.amplitudes()), 1e-12);
    // Against the explicit sign rule (-1)^{popcount(i & j)}.
    StateVector h = r;
    hadamard_bits(h);
    for (uint64_t i = 0; i < 128; i++) {
        Amplitude acc = 0;
        for (uint64_t j = 0; j < 128; j++) {
            acc += (std::popcount(i & j) % 2 ? -1.0 : 1.0) * r[j];
        }
        EXPECT_LT(std::abs(h[i] - acc / std::sqrt(128.0)), 1e-12);
    }
    StateVector wrong = StateVector::basis_state(Basis::residues(3, 1), 0);
    EXPECT_THROW(hadamard_bits(wrong), Error);
}

TEST(fourier, component_transform_leaves_spectators) {
    Rng rng(9);
    Basis b({Component::bits(1), Component::residues(5, 1)});
    StateVector s = random_state(b, rng);
    StateVector t = s;
    qft_component(t, 1);
    for (uint32_t bit = 0; bit < 2; bit++) {
        std::vector<Amplitude> slice(s.amplitudes().begin() + bit * 5, s.amplitudes().begin() + bit * 5 + 5);
        StateVector part(Basis::residues(5, 1), slice);
        auto want = naive_qft(part, 5, 1);
        for (uint64_t w = 0; w < 5; w++) {
            EXPECT_LT(std::abs(t[bit * 5 + w] - want[w]), 1e-12);
        }
    }
}

TEST(distance, hellinger_and_trace) {
    Density f({0.25, 0.25, 0.5});
    EXPECT_NEAR(hellinger_sq(f, f), 0, 1e-15);
    Density a({1, 0}), b({0, 1});
    EXPECT_NEAR(hellinger_sq(a, b), 1, 1e-15);
    EXPECT_NEAR(trace_distance_from_hellinger(1), 1, 1e-15);
    try {
        hellinger_sq(a, f);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DomainMismatch);
    }
    Rng rng(10);
    for (int i = 0; i < 100; i++) {
        std::vector<double> w0(6), w1(6);
        for (size_t k = 0; k < 6; k++) {
            w0[k] = uniform01(rng);
            w1[k] = uniform01(rng);
        }
        Density f0 = Density::normalized(w0), f1 = Density::normalized(w1);
        Basis basis = Basis::residues(2, 1).tensor(Basis::residues(3, 1));
        std::vector<Amplitude> p0(6), p1(6);
        for (size_t k = 0; k < 6; k++) {
            p0[k] = std::sqrt(f0[k]);
            p1[k] = std::sqrt(f1[k]);
        }
        double td = trace_distance_pure(StateVector(basis, p0), StateVector(basis, p1));
        EXPECT_NEAR(td, trace_distance_from_hellinger(hellinger_sq(f0, f1)), 1e-10);
    }
}

TEST(registers, shared_block_operations) {
    Rng rng(11);
    Basis b({Component::residues(3, 1), Component::residues(3, 1)});
    // Bell-like state (|00> + |11> + |22>) / sqrt 3 split into two registers.
    StateVector s = prepare_weighted(b, [](Digits d) { return d[0] == d[1] ? 1.0 : 0.0; });
    auto regs = Register::split(s, {{0}, {1}});
    auto dist = register_distribution(regs[1]);
    EXPECT_EQ(dist.size(), 3u);
    uint64_t first = measure_register_all(regs[0], rng);
    EXPECT_EQ(measure_register_all(regs[1], rng), first);
    EXPECT_THROW(Register::split(s, {{0}, {0}}), Error);
    Register empty;
    EXPECT_TRUE(empty.empty());
    EXPECT_THROW(empty.block(), Error);
}

TEST(state, dump_format) {
    StateVector s = prepare_weighted(Basis::bits(1), [](Digits) { return 1.0; });
    EXPECT_EQ(s.dump(), "(0) -> (0.707106781187, 0.000000000000)\n(1) -> (0.707106781187, 0.000000000000)\n");
    EXPECT_THROW(Density({0.5, 0.6}), Error);
}
