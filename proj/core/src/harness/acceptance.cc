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

#include "qlease/harness/acceptance.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <thread>

#include "qlease/common/error.h"
#include "qlease/harness/games.h"
#include "qlease/primitives/ggm.h"
#include "qlease/primitives/hash.h"
#include "qlease/primitives/mac.h"
#include "qlease/qsim/distance.h"
#include "qlease/qsim/fourier.h"
#include "qlease/ssl/ssl_cc.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/sis_lightning.h"
#include "qlease/wire/service.h"

namespace qlease::harness {

namespace {

using Clock = std::chrono::steady_clock;
using qsim::Amplitude;
using Matrix = std::vector<std::vector<Amplitude>>;  // column-major: m[col][row]

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename... Args>
std::string fmt(const char *f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

// ---- 1: unitarity -------------------------------------------------------------------------

Matrix columns_of(const qsim::Basis &basis, const std::function<void(qsim::StateVector &)> &op) {
    Matrix cols;
    for (uint64_t j = 0; j < basis.size(); j++) {
        qsim::StateVector s = qsim::StateVector::basis_state(basis, j);
        op(s);
        cols.push_back(s.amplitudes());
    }
    return cols;
}

double gram_deviation(const Matrix &u) {
    double worst = 0;
    for (size_t i = 0; i < u.size(); i++) {
        for (size_t j = 0; j < u.size(); j++) {
            Amplitude acc = 0;
            for (size_t k = 0; k < u[i].size(); k++) {
                acc += std::conj(u[i][k]) * u[j][k];
            }
            worst = std::max(worst, std::abs(acc - Amplitude(i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

// Applies the single-digit matrix `f` to every digit of a radix^m vector (coordinate 0 most significant).
std::vector<Amplitude> kron_apply(const Matrix &f, uint32_t m, std::vector<Amplitude> v) {
    const uint64_t r = f.size();
    uint64_t stride = v.size();
    for (uint32_t axis = 0; axis < m; axis++) {
        stride /= r;
        std::vector<Amplitude> out(v.size());
        for (uint64_t i = 0; i < v.size(); i++) {
            uint64_t digit = (i / stride) % r;
            uint64_t base = i - digit * stride;
            for (uint64_t k = 0; k < r; k++) {
                out[base + k * stride] += f[digit][k] * v[i];
            }
        }
        v = std::move(out);
    }
    return v;
}

// Max deviation between the implementation and the Kronecker oracle on random vectors.
double kron_deviation(const qsim::Basis &basis, const Matrix &factor, uint32_t m,
                      const std::function<void(qsim::StateVector &)> &op, Rng &rng) {
    std::normal_distribution<double> normal;
    double worst = 0;
    for (int t = 0; t < 3; t++) {
        std::vector<Amplitude> v(basis.size());
        for (auto &a : v) {
            a = Amplitude(normal(rng), normal(rng));
        }
        qsim::StateVector s(basis, v);
        op(s);
        std::vector<Amplitude> want = kron_apply(factor, m, v);
        double scale = 0;
        for (const auto &a : v) {
            scale = std::max(scale, std::abs(a));
        }
        for (uint64_t i = 0; i < want.size(); i++) {
            worst = std::max(worst, std::abs(want[i] - s.amplitudes()[i]) / scale);
        }
    }
    return worst;
}

CriterionResult c1(const AcceptanceOptions &opts) {
    CriterionResult r;
    auto t0 = Clock::now();
    Rng rng(derive_seed(opts.seed, 1));
    const double tol = 1e-10;
    double worst_gram = 0, worst_closed = 0, worst_kron = 0, worst_bound = 0;
    auto qft = [](qsim::StateVector &s) { qsim::qft_component(s, 0); };
    auto had = [](qsim::StateVector &s) { qsim::hadamard_component(s, 0); };

    for (uint32_t q = 2; q <= 31; q++) {
        Matrix f = columns_of(qsim::Basis::residues(q, 1), qft);
        for (uint32_t j = 0; j < q; j++) {
            for (uint32_t k = 0; k < q; k++) {
                double angle = 2 * M_PI * static_cast<double>((uint64_t{j} * k) % q) / q;
                Amplitude want = std::polar(1.0 / std::sqrt(static_cast<double>(q)), angle);
                worst_closed = std::max(worst_closed, std::abs(f[j][k] - want));
            }
        }
        double factor_dev = gram_deviation(f);
        worst_gram = std::max(worst_gram, factor_dev);
        for (uint32_t m = 2; m <= 3; m++) {
            qsim::Basis basis = qsim::Basis::residues(q, m);
            worst_kron = std::max(worst_kron, kron_deviation(basis, f, m, qft, rng));
            if (basis.size() <= 512) {
                worst_gram = std::max(worst_gram, gram_deviation(columns_of(basis, qft)));
            }
            worst_bound = std::max(worst_bound, std::pow(1 + factor_dev, m) - 1);
        }
    }
    Matrix h = columns_of(qsim::Basis::bits(1), had);
    double h_dev = gram_deviation(h);
    worst_gram = std::max(worst_gram, h_dev);
    for (uint32_t k = 1; k <= 12; k++) {
        qsim::Basis basis = qsim::Basis::bits(k);
        Matrix cols = k <= 8 ? columns_of(basis, had) : Matrix{};
        if (k <= 8) {
            worst_gram = std::max(worst_gram, gram_deviation(cols));
        }
        worst_kron = std::max(worst_kron, kron_deviation(basis, h, k, had, rng));
        worst_bound = std::max(worst_bound, std::pow(1 + h_dev, k) - 1);
    }
    r.seconds = seconds_since(t0);
    r.pass = worst_gram < tol && worst_closed < tol && worst_kron < tol && worst_bound < tol && r.seconds < 5;
    r.detail = fmt("max|U^dag U - I| explicit %.2e, tensor bound %.2e; factor vs closed form %.2e; "
                   "implementation vs Kronecker oracle %.2e; %.2fs (limit 5s)",
                   worst_gram, worst_bound, worst_closed, worst_kron, r.seconds);
    return r;
}

// ---- 2: certificate identity ------------------------------------------------------------------

CriterionResult c2(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 2));
    ttql::CvParams params;
    params.ntcf.backend = ntcf::Backend::Clean;
    ttql::KeyPair kp = ttql::cv_setup(params, rng);
    const auto &pk = static_cast<const ttql::CvPublicKey &>(*kp.pk);
    const auto &sk = static_cast<const ttql::CvSecretKey &>(*kp.sk);
    const uint32_t w = pk.width();
    const uint64_t mask = (uint64_t{1} << w) - 1;
    double worst_identity = 0, worst_marginal = 0;
    int checked = 0;
    for (int b = 0; b < 10; b++) {
        ttql::Minted minted = pk.boltgen(rng);
        std::vector<uint64_t> ys = pk.decode_snum(minted.snum);
        for (size_t rep = 0; rep < pk.arity(); rep++) {
            const ntcf::NtcfKey &key = pk.keys()[rep];
            uint64_t x0 = sk.trapdoors()[rep].inv(0, ys[rep]);
            uint64_t x1 = sk.trapdoors()[rep].inv(1, ys[rep]);
            uint64_t jx = ntcf::j_encode(x0, key.x_size(), w) ^ ntcf::j_encode(x1, key.x_size(), w);
            std::map<uint64_t, double> dist = ttql::cert_distribution(pk, rep, minted.bolt.registers[rep]);
            std::vector<double> marginal(mask + 1, 0.0);
            double consistent = 0;
            for (auto [outcome, p] : dist) {
                uint64_t m = outcome >> w;
                uint64_t d = outcome & mask;
                if (static_cast<uint64_t>(std::popcount(d & jx) & 1) == m) {
                    consistent += p;
                }
                marginal[d] += p;
            }
            worst_identity = std::max(worst_identity, std::abs(consistent - 1));
            for (double p : marginal) {
                worst_marginal = std::max(worst_marginal, std::abs(p - 1.0 / static_cast<double>(mask + 1)));
            }
            checked++;
        }
    }
    r.pass = worst_identity <= 1e-12 && worst_marginal <= 1e-12;
    r.detail = fmt("%d claw states, w=%u: |Pr[m = d.(J(x0)^J(x1))] - 1| <= %.2e, d-marginal deviation %.2e (tol 1e-12)",
                   checked, w, worst_identity, worst_marginal);
    return r;
}

// ---- 3: correctness ---------------------------------------------------------------------------

struct Acceptance {
    double semi_mean = 0, full_mean = 0, full_min = 1;
};

Acceptance honest_acceptance(const ttql::KeyPair &kp, int bolts, Rng &rng) {
    Acceptance a;
    for (int i = 0; i < bolts; i++) {
        ttql::Minted minted = kp.pk->boltgen(rng);
        a.semi_mean += kp.pk->semi_probability(minted.snum, minted.bolt) / bolts;
        double f = kp.sk->full_probability(minted.snum, minted.bolt);
        a.full_mean += f / bolts;
        a.full_min = std::min(a.full_min, f);
    }
    return a;
}

CriterionResult c3(const AcceptanceOptions &opts) {
    CriterionResult r;
    auto t0 = Clock::now();
    Rng rng(derive_seed(opts.seed, 3));
    ttql::KeyPair sis = ttql::sis_setup(lattice::SisParams{}, rng);
    Acceptance s = honest_acceptance(sis, 100, rng);
    ttql::CvParams params;
    ttql::KeyPair cv = ttql::cv_setup(params, rng);
    Acceptance c = honest_acceptance(cv, 100, rng);
    r.seconds = seconds_since(t0);
    r.pass = s.semi_mean >= 0.99 && s.full_mean >= 0.9 && c.semi_mean >= 0.99 && c.full_mean >= 0.99 &&
             r.seconds < 60;
    r.detail = fmt("100 bolts each, exact: SIS semi %.4f full %.4f (min %.4f); CV n=8 semi %.4f cert %.4f "
                   "(min %.4f); %.1fs (limit 60s)",
                   s.semi_mean, s.full_mean, s.full_min, c.semi_mean, c.full_mean, c.full_min, r.seconds);
    return r;
}

// ---- 4: reusability ---------------------------------------------------------------------------

double reuse_distance(const ttql::KeyPair &kp, int bolts, Rng &rng, int &accepted) {
    double worst = 0;
    for (int i = 0; i < bolts; i++) {
        ttql::Minted minted = kp.pk->boltgen(rng);
        std::vector<qsim::StateVector> before;
        for (const auto &reg : minted.bolt.registers) {
            before.push_back(reg.block());
        }
        accepted += kp.pk->semi_vrfy(minted.snum, minted.bolt, rng);
        double total = 0;
        for (size_t j = 0; j < before.size(); j++) {
            total += qsim::trace_distance_pure(before[j], minted.bolt.registers[j].block());
        }
        worst = std::max(worst, total);
    }
    return worst;
}

CriterionResult c4(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 4));
    int sis_ok = 0, cv_ok = 0;
    ttql::KeyPair sis = ttql::sis_setup(lattice::SisParams{}, rng);
    double ds = reuse_distance(sis, 10, rng, sis_ok);
    ttql::KeyPair cv = ttql::cv_setup(ttql::CvParams{}, rng);
    double dc = reuse_distance(cv, 10, rng, cv_ok);
    r.pass = ds <= 1e-6 && dc <= 1e-6;
    r.detail = fmt("trace distance before/after semi-verify: SIS %.2e (%d/10 accepted), CV %.2e (%d/10 accepted); "
                   "limit 1e-6",
                   ds, sis_ok, dc, cv_ok);
    return r;
}

// ---- 5: anti-cloning --------------------------------------------------------------------------

CriterionResult c5(const AcceptanceOptions &opts) {
    CriterionResult r;
    GameSpec sis;
    sis.name = "tt-unclone";
    sis.adversary = "measure-and-copy";
    sis.trials = 500;
    sis.seed = derive_seed(opts.seed, 5);
    GameReport a = run_game(sis);
    GameSpec cv;
    cv.name = "tt-unclone-cv";
    cv.adversary = "keep-and-guess";
    cv.trials = 500;
    cv.seed = derive_seed(opts.seed, 55);
    GameReport b = run_game(cv);
    uint64_t witnesses = a.flags["win_witness"];
    bool sis_ok = a.win_rate <= 0.10;
    bool witness_ok = witnesses == a.wins;
    bool cv_ok = b.wilson.lower <= 0.005;
    r.pass = sis_ok && witness_ok && cv_ok;
    r.detail = fmt("SIS measure-and-copy %llu/500 = %.4f (limit 0.10), %llu/%llu wins gave an SIS witness; "
                   "CV keep-and-guess %llu/500 = %.4f, Wilson99 lower %.4f (limit 0.005)",
                   static_cast<unsigned long long>(a.wins), a.win_rate, static_cast<unsigned long long>(witnesses),
                   static_cast<unsigned long long>(a.wins), static_cast<unsigned long long>(b.wins), b.win_rate,
                   b.wilson.lower);
    return r;
}

// ---- 6: watermark -----------------------------------------------------------------------------

CriterionResult c6(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 6));
    uint64_t disagreements = 0, extract_failures = 0, fuzz_leaks = 0, fuzz_runs = 0;
    for (auto kind : {watermark::CircuitKind::Prf, watermark::CircuitKind::Cnc}) {
        watermark::WmParams pp = watermark::wm_gen(kind, rng);
        watermark::CncTable inner = watermark::cnc_table_gen(rng);
        auto circuit = [&] {
            if (kind == watermark::CircuitKind::Prf) {
                return watermark::prf_circuit(primitives::prf_gen(rng, 10));
            }
            return watermark::cnc_circuit(inner, static_cast<uint32_t>(uniform_below(rng, 256)));
        };
        watermark::Circuit c = circuit();
        watermark::WatermarkedProgram marked = watermark::wm_mark(pp, c, random_bytes(rng, 24), rng);
        for (uint64_t x = 0; x < 1024; x++) {
            std::optional<Bytes> y = watermark::wm_eval(pp, marked, x);
            disagreements += !y || *y != c.evaluate(x);
        }
        for (int i = 0; i < 100; i++) {
            Bytes message = random_bytes(rng, 1 + uniform_below(rng, 64));
            Bytes program = watermark::wm_mark(pp, circuit(), message, rng).serialize();
            std::optional<Bytes> got = watermark::wm_extract(pp, program);
            extract_failures += !got || *got != message;
        }
        for (int i = 0; i < 500; i++) {
            watermark::WatermarkedProgram p = marked;
            Bytes *field = nullptr;
            switch (uniform_below(rng, 3)) {
                case 0:
                    field = &p.proof.digest;
                    break;
                case 1:
                    field = &p.proof.capsule;
                    break;
                default:
                    field = &p.proof.tag;
                    break;
            }
            if (field->empty()) {
                field->push_back(0);
            } else {
                (*field)[uniform_below(rng, field->size())] ^= static_cast<uint8_t>(1 + uniform_below(rng, 255));
            }
            fuzz_runs++;
            for (uint64_t x = 0; x < 1024; x++) {
                if (watermark::wm_eval(pp, p, x)) {
                    fuzz_leaks++;
                    break;
                }
            }
        }
    }
    r.pass = disagreements == 0 && extract_failures == 0 && fuzz_leaks == 0;
    r.detail = fmt("both variants: %llu disagreements over 2x1024 inputs; %llu/200 extraction mismatches; "
                   "%llu/%llu proof mutations evaluated somewhere",
                   static_cast<unsigned long long>(disagreements), static_cast<unsigned long long>(extract_failures),
                   static_cast<unsigned long long>(fuzz_leaks), static_cast<unsigned long long>(fuzz_runs));
    return r;
}

// ---- 7: puncturable PRF -----------------------------------------------------------------------

// Frozen outputs of ggm_fixture_lines().
const char *const kGoldenGgmSha256 = "c8bce8aeab71528e611d7363e7113fb3b03b35f2f505965d1019e1facda98a16";

CriterionResult c7(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 7));
    uint64_t mismatches = 0, punctured_leaks = 0, checked = 0;
    for (int k = 0; k < 4; k++) {
        primitives::PrfKey key = primitives::prf_gen(rng, 10);
        std::vector<Bytes> full(1024);
        for (uint64_t x = 0; x < 1024; x++) {
            full[x] = primitives::prf_eval(key, x);
        }
        for (uint64_t point : {uint64_t{0}, uint64_t{1023}, uniform_below(rng, 1024), uniform_below(rng, 1024)}) {
            primitives::PuncturedKey pk = primitives::prf_puncture(key, point);
            for (uint64_t x = 0; x < 1024; x++) {
                if (x == point) {
                    try {
                        primitives::prf_peval(pk, x);
                        punctured_leaks++;
                    } catch (const Error &e) {
                        punctured_leaks += e.code() != ErrorCode::PuncturedPointQuery;
                    }
                    continue;
                }
                mismatches += primitives::prf_peval(pk, x) != full[x];
                checked++;
            }
        }
    }
    std::string first = ggm_fixture_lines();
    std::string second = ggm_fixture_lines();
    std::string digest = to_hex(primitives::sha256(ByteView(reinterpret_cast<const uint8_t *>(first.data()), first.size())));
    bool golden = first == second && digest == kGoldenGgmSha256;
    r.pass = mismatches == 0 && punctured_leaks == 0 && golden;
    r.detail = fmt("%llu off-point inputs, %llu mismatches, %llu punctured-point leaks; golden fixtures %s",
                   static_cast<unsigned long long>(checked), static_cast<unsigned long long>(mismatches),
                   static_cast<unsigned long long>(punctured_leaks), golden ? "match" : "DIFFER");
    return r;
}

// ---- 8: one-time MAC --------------------------------------------------------------------------

CriterionResult c8(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 8));
    const uint32_t tau = 12;
    const uint64_t size = uint64_t{1} << tau;
    const Bytes m1 = {'l', 'e', 'a', 's', 'e', '-', '1'};
    const Bytes m2 = {'l', 'e', 'a', 's', 'e', '-', '2'};
    uint64_t h1 = primitives::mac_digest(m1, tau);
    uint64_t h2 = primitives::mac_digest(m2, tau);
    // Fixed observed tag and fixed forgery.
    const uint64_t t1 = 0x5a5 & (size - 1);
    const uint64_t t2 = 0x3c3 & (size - 1);
    uint64_t forged = 0, consistent = 0, both = 0;
    for (uint64_t a = 0; a < size; a++) {
        for (uint64_t b = 0; b < size; b++) {
            primitives::MacKey key{tau, a, b};
            bool f = primitives::mac_tag_digest(key, h2) == t2;
            forged += f;
            if (primitives::mac_tag_digest(key, h1) == t1) {
                consistent++;
                both += f;
            }
        }
    }
    bool exact = h1 != h2 && forged == size && consistent == size && both == 1;

    const uint32_t tau16 = 16;
    const uint64_t trials = 1000000;
    uint64_t d1 = primitives::mac_digest(m1, tau16);
    uint64_t d2 = primitives::mac_digest(m2, tau16);
    uint64_t wins = 0;
    for (uint64_t i = 0; i < trials; i++) {
        primitives::MacKey key = primitives::mac_gen(rng, tau16);
        uint64_t seen = primitives::mac_tag_digest(key, d1);
        // Replays the observed tag on the other message.
        wins += primitives::mac_tag_digest(key, d2) == seen;
    }
    Interval ci = wilson(wins, trials);
    double limit = std::ldexp(1.0, -16);
    r.pass = exact && ci.lower <= limit;
    r.detail = fmt("tau=12 exhaustive: Pr[forgery] = %llu/%llu, Pr[forgery | observed tag] = %llu/%llu (want 1/4096); "
                   "tau=16: %llu/%llu wins, Wilson99 lower %.3e (limit %.3e)",
                   static_cast<unsigned long long>(forged), static_cast<unsigned long long>(size * size),
                   static_cast<unsigned long long>(both), static_cast<unsigned long long>(consistent),
                   static_cast<unsigned long long>(wins), static_cast<unsigned long long>(trials), ci.lower, limit);
    return r;
}

// ---- 9: SSL end to end ------------------------------------------------------------------------

struct SessionStats {
    double exact_mean = 0;
    int sampled_ok = 0;
};

SessionStats sis_sessions(int sessions, int runs, Rng &rng) {
    ssl::SslConfig config;
    config.lightning = ssl::LightningBackend::Sis;
    ssl::LessorInstance inst = ssl::make_lessor_instance(config, rng);
    SessionStats st;
    for (int s = 0; s < sessions; s++) {
        watermark::Circuit c = ssl::sample_circuit(inst, rng);
        ssl::LeasedSoftware sft = ssl::ssl_lessor(inst.sk, c, rng);
        ssl::RunProbability p = ssl::ssl_run_probability(inst.crs, sft.bolt, sft.classical, c);
        bool ok = true;
        for (int i = 0; i < runs; i++) {
            uint64_t x = uniform_below(rng, 1024);
            std::optional<Bytes> y = ssl::ssl_run(inst.crs, sft, x, rng);
            ok = ok && y && *y == c.evaluate(x);
        }
        double check = ssl::ssl_check_probability(inst.sk, sft.bolt, sft.classical);
        ok = ok && ssl::ssl_check(inst.sk, sft, rng);
        st.exact_mean += std::pow(p.semi, runs) * (p.agreement == 1.0 ? 1.0 : 0.0) * check / sessions;
        st.sampled_ok += ok;
    }
    return st;
}

SessionStats cv_sessions(int sessions, int runs, Rng &rng) {
    ssl::SslConfig config;
    config.lightning = ssl::LightningBackend::CvClean;
    config.circuit = watermark::CircuitKind::Cnc;
    ssl::LessorInstance inst = ssl::make_lessor_instance(config, rng);
    Bytes pk = ssl::ssl_public_key(inst.sk);
    SessionStats st;
    for (int s = 0; s < sessions; s++) {
        watermark::Circuit c = ssl::sample_circuit(inst, rng);
        auto [obligation, state] = ssl::cc_lessee1(pk, rng);
        ssl::Answer answer = ssl::cc_lessor(inst.sk, obligation, c, rng);
        ssl::LeasedSoftware sft = ssl::cc_lessee2(std::move(state), answer);
        ssl::RunProbability p = ssl::ssl_run_probability(inst.crs, sft.bolt, sft.classical, c);
        bool ok = true;
        for (int i = 0; i < runs; i++) {
            uint64_t x = uniform_below(rng, 1024);
            std::optional<Bytes> y = ssl::ssl_run(inst.crs, sft, x, rng);
            ok = ok && y && *y == c.evaluate(x);
        }
        double cert = inst.sk.lightning.sk->full_probability(obligation.snum, sft.bolt);
        ok = ok && ssl::cc_certvrfy(inst.sk, ssl::cc_sslcert(inst.crs, sft, rng));
        st.exact_mean += std::pow(p.semi, runs) * (p.agreement == 1.0 ? 1.0 : 0.0) * cert / sessions;
        st.sampled_ok += ok;
    }
    return st;
}

CriterionResult c9(const AcceptanceOptions &opts) {
    CriterionResult r;
    Rng rng(derive_seed(opts.seed, 9));
    SessionStats sis = sis_sessions(50, 100, rng);
    SessionStats cv = cv_sessions(50, 100, rng);
    bool flow_ok = sis.exact_mean >= 0.9 && cv.exact_mean >= 0.99;

    std::string worst;
    double worst_rate = -1;
    bool games_ok = true;
    uint64_t uncovered = 0;
    uint64_t seed = derive_seed(opts.seed, 99);
    auto play = [&](const std::string &game, const std::string &adversary, watermark::CircuitKind circuit) {
        GameSpec spec;
        spec.name = game;
        spec.adversary = adversary;
        spec.trials = 500;
        spec.seed = seed++;
        spec.circuit = circuit;
        GameReport g = run_game(spec);
        uncovered += g.flags["win_uncovered"];
        games_ok = games_ok && g.win_rate <= 0.02 && g.flags["win_uncovered"] == 0;
        if (g.win_rate > worst_rate) {
            worst_rate = g.win_rate;
            worst = game + "/" + adversary;
        }
    };
    for (const auto &a : ssl::lessor_adversary_names()) {
        play("lessor", a, watermark::CircuitKind::Prf);
    }
    for (const auto &a : ssl::cc_adversary_names()) {
        play("lessor-cc", a, watermark::CircuitKind::Cnc);
    }
    r.pass = flow_ok && games_ok;
    r.detail = fmt("lease/100 runs/return success (exact mean over 50 sessions): SIS %.4f (limit 0.9, sampled %d/50), "
                   "CV %.4f (limit 0.99, sampled %d/50); lessor games x500: worst %s %.4f (limit 0.02), "
                   "%llu wins outside the three events",
                   sis.exact_mean, sis.sampled_ok, cv.exact_mean, cv.sampled_ok, worst.c_str(), worst_rate,
                   static_cast<unsigned long long>(uncovered));
    return r;
}

// ---- 10: wire ---------------------------------------------------------------------------------

const char *const kGoldenTranscriptSha256 = "c911f7bc7632b681c77a81a36b9b47e5d8a62b0fcf4962247ff8b76df2469857";

struct Deployment {
    ssl::SslCrs crs;
    ssl::SslSecretKey sk;
    wire::CircuitCatalog catalog;
};

Deployment deployment(uint64_t seed) {
    Rng rng(seed);
    ssl::SslConfig config;
    config.lightning = ssl::LightningBackend::CvClean;
    Deployment d;
    d.crs = ssl::ssl_setup(config, rng);
    d.sk = ssl::ssl_gen(d.crs, config, rng);
    d.catalog = wire::default_catalog(d.crs, derive_seed(seed, 1));
    return d;
}


}  // namespace

std::string golden_session_transcript(uint64_t seed) {
    Deployment d = deployment(seed);
    auto [client_end, server_end] = wire::in_process_pair();
    std::thread server([&d, &server_end, seed] {
        wire::LessorSession session(d.sk, d.catalog, seed, 0);
        wire::serve_connection(*server_end, session);
    });
    std::string out;
    try {
        wire::RecordingTransport rec(*client_end);
        Rng rng(derive_seed(seed, 2));
        ssl::LeasedSoftware sft = wire::lessee_client(ssl::ssl_public_key(d.sk), rec, 1, rng);
        for (uint64_t x : {3, 500, 1023}) {
            ssl::ssl_run(d.crs, sft, x, rng);
        }
        bool ok = wire::lessee_return(rec, d.crs, sft, rng);
        out = wire::format_transcript(rec.transcript());
        out += ok ? "= accepted\n" : "= rejected\n";
    } catch (...) {
        client_end->close();
        server.join();
        throw;
    }
    client_end->close();
    server.join();
    return out;
}

std::string ggm_fixture_lines() {
    std::string out;
    for (int s = 0; s < 4; s++) {
        primitives::PrfKey key;
        key.domain_bits = 10;
        for (int j = 0; j < 16; j++) {
            key.seed.push_back(static_cast<uint8_t>(s * 16 + j));
        }
        for (uint64_t x : {0, 1, 511, 1023}) {
            out += std::to_string(s) + " " + std::to_string(x) + " " + to_hex(primitives::prf_eval(key, x)) + "\n";
        }
    }
    return out;
}

namespace {

CriterionResult c10(const AcceptanceOptions &opts) {
    CriterionResult r;
    // Golden transcript.
    std::string t1 = golden_session_transcript(2026);
    std::string t2 = golden_session_transcript(2026);
    std::string digest = to_hex(primitives::sha256(ByteView(reinterpret_cast<const uint8_t *>(t1.data()), t1.size())));
    bool golden = t1 == t2 && digest == kGoldenTranscriptSha256;

    // Fuzz.
    Deployment d = deployment(derive_seed(opts.seed, 10));
    Rng rng(derive_seed(opts.seed, 11));
    std::vector<Bytes> seeds;
    {
        Rng lrng(derive_seed(opts.seed, 12));
        Bytes pk = ssl::ssl_public_key(d.sk);
        wire::SchemeHeader header = wire::scheme_header(*d.sk.lightning.pk);
        auto [obligation, state] = ssl::cc_lessee1(pk, lrng);
        seeds.push_back(encode_frame(wire::ObligationMsg{header, 1, obligation.snum}.to_frame()));
        ssl::Answer answer = ssl::cc_lessor(d.sk, obligation, d.catalog.at(1), lrng);
        seeds.push_back(encode_frame(wire::AnswerMsg{header, answer.classical}.to_frame()));
        ssl::LeasedSoftware sft = ssl::cc_lessee2(std::move(state), answer);
        seeds.push_back(encode_frame(wire::ReturnCertMsg{header, ssl::cc_sslcert(d.crs, sft, lrng)}.to_frame()));
        seeds.push_back(encode_frame(wire::CheckResultMsg{true}.to_frame()));
        seeds.push_back(encode_frame(wire::ErrorMsg{wire::WireError::Internal, "x"}.to_frame()));
    }
    const uint64_t frames = 100000;
    uint64_t untyped = 0, errors = 0;
    auto session = std::make_unique<wire::LessorSession>(d.sk, d.catalog, opts.seed, 0);
    uint64_t session_id = 0;
    for (uint64_t i = 0; i < frames; i++) {
        if (session->closed() || uniform_below(rng, 8) == 0) {
            session = std::make_unique<wire::LessorSession>(d.sk, d.catalog, opts.seed, ++session_id);
        }
        Bytes input;
        const Bytes &base = seeds[uniform_below(rng, seeds.size())];
        switch (uniform_below(rng, 4)) {
            case 0:
                input = random_bytes(rng, uniform_below(rng, 48));
                break;
            case 1:
                input = base;
                for (uint64_t k = 1 + uniform_below(rng, 4); k > 0; k--) {
                    input[uniform_below(rng, input.size())] ^= static_cast<uint8_t>(1 + uniform_below(rng, 255));
                }
                break;
            case 2:
                input.assign(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, base.size())));
                break;
            default:
                input = base;
                if (uniform_below(rng, 2) == 0) {
                    input.push_back(static_cast<uint8_t>(uniform_below(rng, 256)));
                }
                break;
        }
        wire::Frame reply = session->handle_bytes(input);
        if (reply.type == wire::MsgType::Error) {
            errors++;
            try {
                wire::ErrorMsg::from_frame(reply);
            } catch (const Error &) {
                untyped++;
            }
        } else if (reply.type != wire::MsgType::Answer && reply.type != wire::MsgType::CheckResult) {
            untyped++;
        }
    }

    // Real sockets.
    auto t0 = Clock::now();
    bool tcp_ok = false;
    std::string tcp_error;
    try {
        wire::TcpListener listener("127.0.0.1:0");
        std::thread server([&] { wire::lessor_serve(d.sk, listener, d.catalog, opts.seed, 1); });
        try {
            auto conn = wire::TcpTransport::connect("127.0.0.1:" + std::to_string(listener.port()));
            Rng crng(derive_seed(opts.seed, 13));
            ssl::LeasedSoftware sft = wire::lessee_client(ssl::ssl_public_key(d.sk), *conn, 2, crng);
            bool runs_ok = true;
            for (uint64_t x = 0; x < 10; x++) {
                std::optional<Bytes> y = ssl::ssl_run(d.crs, sft, x * 97, crng);
                runs_ok = runs_ok && y && *y == d.catalog.at(2).evaluate(x * 97);
            }
            tcp_ok = wire::lessee_return(*conn, d.crs, sft, crng) && runs_ok;
        } catch (const std::exception &e) {
            tcp_error = e.what();
        }
        server.join();
    } catch (const std::exception &e) {
        tcp_error = e.what();
    }
    double tcp_seconds = seconds_since(t0);
    r.pass = golden && untyped == 0 && tcp_ok && tcp_seconds < 10;
    r.detail = fmt("golden transcript %s; %llu fuzz frames, %llu typed rejections, %llu untyped replies, no crash; "
                   "TCP lease/run/return %s in %.2fs (limit 10s)%s",
                   golden ? "replays byte-identically" : "DIFFERS", static_cast<unsigned long long>(frames),
                   static_cast<unsigned long long>(errors), static_cast<unsigned long long>(untyped),
                   tcp_ok ? "accepted" : "FAILED", tcp_seconds, tcp_error.empty() ? "" : (" " + tcp_error).c_str());
    return r;
}

}  // namespace

const char *criterion_title(int id) {
    static const char *const titles[] = {
        "",
        "quantum-math exactness",
        "certificate identity",
        "two-tier correctness",
        "reusability",
        "anti-cloning statistics",
        "watermark correctness",
        "puncturable PRF",
        "one-time MAC",
        "SSL end-to-end",
        "wire protocol",
    };
    return id >= 1 && id <= kNumCriteria ? titles[id] : "unknown";
}

CriterionResult run_criterion(int id, const AcceptanceOptions &opts) {
    using Fn = CriterionResult (*)(const AcceptanceOptions &);
    static const Fn fns[] = {nullptr, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    CriterionResult r;
    auto t0 = Clock::now();
    if (id < 1 || id > kNumCriteria) {
        r.id = id;
        r.title = criterion_title(id);
        r.detail = "no such criterion";
        return r;
    }
    try {
        r = fns[id](opts);
    } catch (const std::exception &e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.title = criterion_title(id);
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts) {
    std::vector<int> ids = opts.only;
    if (ids.empty()) {
        for (int i = 1; i <= kNumCriteria; i++) {
            ids.push_back(i);
        }
    }
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id, opts));
    }
    return out;
}

std::string format_result(const CriterionResult &r) {
    return fmt("%s %2d %s (%.1fs): ", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds) + r.detail;
}

}  // namespace qlease::harness
