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

#include "qlease/qsim/state.h"

#include <cmath>
#include <cstdio>

#include "qlease/common/error.h"

namespace qlease::qsim {

StateVector::StateVector(Basis basis, std::vector<Amplitude> amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
    if (amps_.size() != basis_.size()) {
        fail(ErrorCode::DimensionMismatch, "amplitude count does not match basis size");
    }
}

StateVector StateVector::basis_state(const Basis &basis, uint64_t index) {
    if (index >= basis.size()) {
        fail(ErrorCode::DimensionMismatch, "label index out of range");
    }
    std::vector<Amplitude> amps(basis.size());
    amps[index] = 1.0;
    return StateVector(basis, std::move(amps));
}

double StateVector::norm_sq() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double n = std::sqrt(norm_sq());
    if (!(n > 0)) {
        fail(ErrorCode::EmptySupport, "cannot normalize the zero vector");
    }
    double inv = 1.0 / n;
    for (auto &a : amps_) {
        a *= inv;
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (size_t i = 0; i < amps_.size(); i++) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

uint64_t StateVector::support_size() const {
    uint64_t count = 0;
    for (const auto &a : amps_) {
        if (a != Amplitude(0.0, 0.0)) {
            count++;
        }
    }
    return count;
}

std::string StateVector::dump() const {
    std::string out;
    char buf[96];
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (amps_[i] == Amplitude(0.0, 0.0)) {
            continue;
        }
        // Negative zero prints as 0 so that dumps compare textually.
        double re = amps_[i].real() == 0 ? 0.0 : amps_[i].real();
        double im = amps_[i].imag() == 0 ? 0.0 : amps_[i].imag();
        std::snprintf(buf, sizeof(buf), " -> (%.12f, %.12f)\n", re, im);
        out += basis_.label_text(i);
        out += buf;
    }
    return out;
}

Density::Density(std::vector<double> p) : p_(std::move(p)) {
    double total = 0;
    for (double v : p_) {
        if (!(v >= 0)) {
            fail(ErrorCode::Parameter, "density has a negative entry");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        fail(ErrorCode::Parameter, "density does not sum to 1");
    }
}

Density Density::normalized(std::vector<double> weights) {
    double total = 0;
    for (double v : weights) {
        total += v;
    }
    if (!(total > 0)) {
        fail(ErrorCode::EmptySupport, "density weights are all zero");
    }
    for (auto &v : weights) {
        v /= total;
    }
    return Density(std::move(weights));
}

}  // namespace qlease::qsim
