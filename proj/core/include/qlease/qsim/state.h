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

#ifndef QLEASE_QSIM_STATE_H
#define QLEASE_QSIM_STATE_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qlease/qsim/basis.h"

namespace qlease::qsim {

using Amplitude = std::complex<double>;

/// Dense amplitude vector over a Basis, indexed in canonical label order.
class StateVector {
   public:
    StateVector() = default;
    StateVector(Basis basis, std::vector<Amplitude> amplitudes);

    static StateVector basis_state(const Basis &basis, uint64_t index);

    const Basis &basis() const {
        return basis_;
    }
    uint64_t size() const {
        return amps_.size();
    }
    const Amplitude &operator[](uint64_t i) const {
        return amps_[i];
    }
    Amplitude &operator[](uint64_t i) {
        return amps_[i];
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    std::vector<Amplitude> &amplitudes() {
        return amps_;
    }

    double norm_sq() const;
    /// Divides by the positive real norm; throws Error(EmptySupport) on the zero vector.
    void normalize();
    std::vector<double> probabilities() const;
    uint64_t support_size() const;

    /// One line per nonzero label in canonical order: "label -> (re, im)" at 12 digits.
    std::string dump() const;

   private:
    Basis basis_;
    std::vector<Amplitude> amps_;
};

/// Nonnegative function on 0..size-1 summing to 1.
class Density {
   public:
    Density() = default;
    /// Throws Error(Parameter) on negative entries or a sum off 1 by more than 1e-12.
    explicit Density(std::vector<double> p);
    static Density normalized(std::vector<double> weights);

    size_t size() const {
        return p_.size();
    }
    double operator[](size_t i) const {
        return p_[i];
    }
    const std::vector<double> &values() const {
        return p_;
    }

   private:
    std::vector<double> p_;
};

}  // namespace qlease::qsim

#endif
