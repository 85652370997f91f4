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

#include "qlease/qsim/fourier.h"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "qlease/common/error.h"

namespace qlease::qsim {

namespace {

// FFTW planning is not thread safe; execution is.
std::mutex &planner_mutex() {
    static std::mutex mu;
    return mu;
}

// Plans are reused across states of the same shape via the new-array execute interface.
fftw_plan cached_plan(const std::vector<fftw_iodim64> &dims, const std::vector<fftw_iodim64> &loops, int sign,
                      uint64_t size) {
    static std::map<std::vector<ptrdiff_t>, fftw_plan> plans;
    std::vector<ptrdiff_t> key{sign, static_cast<ptrdiff_t>(dims.size())};
    for (const auto *v : {&dims, &loops}) {
        for (const auto &d : *v) {
            key.insert(key.end(), {d.n, d.is});
        }
    }
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto it = plans.find(key);
    if (it != plans.end()) {
        return it->second;
    }
    // Measuring pays off only on large blocks; small ones keep the cheap estimate.
    unsigned flags = FFTW_UNALIGNED | (size >= (uint64_t{1} << 16) ? FFTW_MEASURE : FFTW_ESTIMATE);
    auto *scratch = fftw_alloc_complex(size);
    fftw_plan plan = fftw_plan_guru64_dft(static_cast<int>(dims.size()), dims.data(), static_cast<int>(loops.size()),
                                          loops.data(), scratch, scratch, sign, flags);
    fftw_free(scratch);
    if (plan == nullptr) {
        fail(ErrorCode::Parameter, "fftw could not plan the transform");
    }
    plans.emplace(std::move(key), plan);
    return plan;
}

}  // namespace

void qft_component(StateVector &state, size_t component, bool inverse) {
    const Basis &basis = state.basis();
    if (component >= basis.num_components()) {
        fail(ErrorCode::BasisMismatch, "no such component");
    }
    const Component &comp = basis.component(component);
    if (comp.length == 0) {
        return;
    }
    size_t begin = basis.digit_offset(component);
    size_t end = begin + comp.length;

    std::vector<fftw_iodim64> dims;
    std::vector<fftw_iodim64> loops;
    for (size_t d = 0; d < basis.num_digits(); d++) {
        fftw_iodim64 dim;
        dim.n = basis.digit_radix(d);
        dim.is = static_cast<ptrdiff_t>(basis.digit_stride(d));
        dim.os = dim.is;
        if (d >= begin && d < end) {
            dims.push_back(dim);
        } else {
            loops.push_back(dim);
        }
    }

    auto *data = reinterpret_cast<fftw_complex *>(state.amplitudes().data());
    // FFTW_BACKWARD carries the exp(+2 pi i jk/n) kernel.
    int sign = inverse ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_execute_dft(cached_plan(dims, loops, sign, state.amplitudes().size()), data, data);
    double scale = 1.0 / std::sqrt(static_cast<double>(comp.size()));
    for (auto &a : state.amplitudes()) {
        a *= scale;
    }
}

static void require_single(const StateVector &state, ComponentKind kind) {
    const Basis &basis = state.basis();
    if (basis.num_components() != 1 || basis.component(0).kind != kind) {
        fail(ErrorCode::BasisMismatch,
             kind == ComponentKind::Residues ? "expected a basis of exactly Z_q^m" : "expected a bit-string basis");
    }
}

void qft_zqm(StateVector &state) {
    require_single(state, ComponentKind::Residues);
    qft_component(state, 0, false);
}

void inverse_qft_zqm(StateVector &state) {
    require_single(state, ComponentKind::Residues);
    qft_component(state, 0, true);
}

void hadamard_component(StateVector &state, size_t component) {
    const Basis &basis = state.basis();
    if (component >= basis.num_components() || basis.component(component).kind != ComponentKind::Bits) {
        fail(ErrorCode::BasisMismatch, "hadamard needs a bit-string component");
    }
    const double s = 1.0 / std::sqrt(2.0);
    auto &amps = state.amplitudes();
    size_t begin = basis.digit_offset(component);
    for (size_t d = begin; d < begin + basis.component(component).length; d++) {
        uint64_t stride = basis.digit_stride(d);
        for (uint64_t base = 0; base < amps.size(); base += 2 * stride) {
            for (uint64_t k = base; k < base + stride; k++) {
                Amplitude a = amps[k];
                Amplitude b = amps[k + stride];
                amps[k] = (a + b) * s;
                amps[k + stride] = (a - b) * s;
            }
        }
    }
}

void hadamard_bits(StateVector &state) {
    require_single(state, ComponentKind::Bits);
    hadamard_component(state, 0);
}

}  // namespace qlease::qsim
