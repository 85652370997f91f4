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

#include "benchmark/benchmark.h"
#include "qlease/primitives/ggm.h"
#include "qlease/qsim/fourier.h"
#include "qlease/ssl/ssl.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/sis_lightning.h"

using namespace qlease;

namespace {

const ttql::KeyPair &sis_keys() {
    static const ttql::KeyPair k = [] {
        Rng rng(1);
        return ttql::sis_setup(lattice::SisParams{}, rng);
    }();
    return k;
}

const ttql::KeyPair &cv_keys() {
    static const ttql::KeyPair k = [] {
        Rng rng(2);
        return ttql::cv_setup(ttql::CvParams{}, rng);
    }();
    return k;
}

void BM_sis_boltgen(benchmark::State &state) {
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sis_keys().pk->boltgen(rng));
    }
}
BENCHMARK(BM_sis_boltgen)->Unit(benchmark::kMillisecond);

void BM_cv_boltgen(benchmark::State &state) {
    Rng rng(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cv_keys().pk->boltgen(rng));
    }
}
BENCHMARK(BM_cv_boltgen)->Unit(benchmark::kMicrosecond);

void BM_sis_semi_vrfy(benchmark::State &state) {
    Rng rng(5);
    ttql::Minted m = sis_keys().pk->boltgen(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sis_keys().pk->semi_vrfy(m.snum, m.bolt, rng));
    }
}
BENCHMARK(BM_sis_semi_vrfy)->Unit(benchmark::kMillisecond);

void BM_sis_full_vrfy(benchmark::State &state) {
    Rng rng(6);
    ttql::Minted m = sis_keys().pk->boltgen(rng);
    // The first transform pays for FFTW planning.
    qsim::StateVector warm = m.bolt.registers[0].block();
    qsim::qft_zqm(warm);
    for (auto _ : state) {
        state.PauseTiming();
        ttql::Bolt copy;
        for (const auto &r : m.bolt.registers) {
            copy.registers.push_back(r.detached_copy());
        }
        state.ResumeTiming();
        benchmark::DoNotOptimize(sis_keys().sk->full_vrfy(m.snum, copy, rng));
    }
}
BENCHMARK(BM_sis_full_vrfy)->Unit(benchmark::kMillisecond);

void BM_qft_zqm(benchmark::State &state) {
    Rng rng(7);
    ttql::Minted m = sis_keys().pk->boltgen(rng);
    qsim::StateVector s = m.bolt.registers[0].block();
    qsim::qft_zqm(s);
    for (auto _ : state) {
        qsim::qft_zqm(s);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.amplitudes().size()));
}
BENCHMARK(BM_qft_zqm)->Unit(benchmark::kMillisecond);

void BM_cv_certify(benchmark::State &state) {
    Rng rng(8);
    const auto &pk = static_cast<const ttql::CvPublicKey &>(*cv_keys().pk);
    const auto &sk = static_cast<const ttql::CvSecretKey &>(*cv_keys().sk);
    for (auto _ : state) {
        state.PauseTiming();
        ttql::Minted m = pk.boltgen(rng);
        state.ResumeTiming();
        ttql::Certificate cert = pk.bolt_cert(m.bolt, rng);
        benchmark::DoNotOptimize(sk.cert_vrfy(m.snum, cert));
    }
}
BENCHMARK(BM_cv_certify)->Unit(benchmark::kMicrosecond);

void BM_prf_eval(benchmark::State &state) {
    Rng rng(9);
    primitives::PrfKey key = primitives::prf_gen(rng, 10);
    uint64_t x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(primitives::prf_eval(key, x++ & 1023));
    }
}
BENCHMARK(BM_prf_eval);

void BM_prf_puncture(benchmark::State &state) {
    Rng rng(10);
    primitives::PrfKey key = primitives::prf_gen(rng, 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(primitives::prf_puncture(key, 0));
    }
}
BENCHMARK(BM_prf_puncture);

}  // namespace

BENCHMARK_MAIN();
