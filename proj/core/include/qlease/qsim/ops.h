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

#ifndef QLEASE_QSIM_OPS_H
#define QLEASE_QSIM_OPS_H

#include <functional>
#include <map>
#include <vector>

#include "qlease/common/error.h"
#include "qlease/common/rng.h"
#include "qlease/qsim/state.h"

namespace qlease::qsim {

using WeightFn = std::function<double(Digits)>;
using OutcomeFn = std::function<uint64_t(Digits)>;
using PredicateFn = std::function<bool(Digits)>;

/// amplitude(l) = sqrt(weight(l) / sum weight). Throws EmptySupport if every weight is zero.
StateVector prepare_weighted(const Basis &basis, const WeightFn &weight);
StateVector prepare_from_weights(const Basis &basis, const std::vector<double> &weights);

/// Exact pushforward of |amp|^2 under f, keyed by outcome.
std::map<uint64_t, double> outcome_distribution(const StateVector &state, const OutcomeFn &f);

/// Samples an outcome (inverse CDF over outcomes in ascending order) and collapses in place.
uint64_t apply_and_measure(StateVector &state, const OutcomeFn &f, Rng &rng);

double predicate_probability(const StateVector &state, const PredicateFn &pred);

/// Restricts to the labels where pred == branch and renormalizes.
void project(StateVector &state, const PredicateFn &pred, bool branch);

/// True with probability equal to the pred-true mass (drawn as uniform01 < p), then collapses.
bool measure_predicate(StateVector &state, const PredicateFn &pred, Rng &rng);

/// Samples a label index by inverse CDF in canonical order and collapses to it.
uint64_t measure_all(StateVector &state, Rng &rng);

StateVector tensor(const StateVector &a, const StateVector &b);

/// Replaces components [first, first + count) by `replacement`. `local_map` receives the digits
/// of the replaced components and returns an index into the replacement sub-basis; it must be
/// injective on the support.
StateVector replace_components(const StateVector &state, size_t first, size_t count,
                               std::vector<Component> replacement, const OutcomeFn &local_map);

/// Index-predicate fast paths used by the schemes on large registers.
template <typename IndexPred>
double mass_where(const StateVector &state, IndexPred &&pred) {
    double mass = 0;
    const auto &amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        if (p != 0 && pred(i)) {
            mass += p;
        }
    }
    return mass;
}

template <typename IndexPred>
void project_where(StateVector &state, IndexPred &&pred, bool branch) {
    auto &amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (amps[i] != Amplitude(0.0, 0.0) && static_cast<bool>(pred(i)) != branch) {
            amps[i] = 0;
        }
    }
    state.normalize();
}

template <typename IndexPred>
bool measure_where(StateVector &state, IndexPred &&pred, Rng &rng) {
    double p = mass_where(state, pred) / state.norm_sq();
    bool result = uniform01(rng) < p;
    project_where(state, pred, result);
    return result;
}

}  // namespace qlease::qsim

#endif
