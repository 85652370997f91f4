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

#include "qlease/qsim/ops.h"

#include <cmath>

namespace qlease::qsim {

StateVector prepare_from_weights(const Basis &basis, const std::vector<double> &weights) {
    if (weights.size() != basis.size()) {
        fail(ErrorCode::DimensionMismatch, "weight count does not match basis size");
    }
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0)) {
            fail(ErrorCode::Parameter, "weights must be nonnegative");
        }
        total += w;
    }
    if (!(total > 0)) {
        fail(ErrorCode::EmptySupport, "all weights are zero");
    }
    std::vector<Amplitude> amps(weights.size());
    for (size_t i = 0; i < weights.size(); i++) {
        amps[i] = std::sqrt(weights[i] / total);
    }
    return StateVector(basis, std::move(amps));
}

StateVector prepare_weighted(const Basis &basis, const WeightFn &weight) {
    std::vector<double> weights(basis.size());
    std::vector<uint32_t> digits(basis.num_digits(), 0);
    for (uint64_t i = 0; i < basis.size(); i++) {
        weights[i] = weight(digits);
        next_label(basis, digits);
    }
    return prepare_from_weights(basis, weights);
}

std::map<uint64_t, double> outcome_distribution(const StateVector &state, const OutcomeFn &f) {
    std::map<uint64_t, double> dist;
    const Basis &basis = state.basis();
    std::vector<uint32_t> digits(basis.num_digits());
    for (uint64_t i = 0; i < state.size(); i++) {
        double p = std::norm(state[i]);
        if (p == 0) {
            continue;
        }
        basis.decode(i, digits);
        dist[f(digits)] += p;
    }
    return dist;
}

uint64_t apply_and_measure(StateVector &state, const OutcomeFn &f, Rng &rng) {
    const Basis &basis = state.basis();
    std::map<uint64_t, double> dist;
    std::vector<uint64_t> outcome_of(state.size(), 0);
    std::vector<uint32_t> digits(basis.num_digits());
    for (uint64_t i = 0; i < state.size(); i++) {
        double p = std::norm(state[i]);
        if (p == 0) {
            continue;
        }
        basis.decode(i, digits);
        outcome_of[i] = f(digits);
        dist[outcome_of[i]] += p;
    }
    if (dist.empty()) {
        fail(ErrorCode::EmptySupport, "cannot measure the zero vector");
    }
    std::vector<uint64_t> keys;
    std::vector<double> masses;
    for (const auto &[k, p] : dist) {
        keys.push_back(k);
        masses.push_back(p);
    }
    uint64_t outcome = keys[sample_weighted(rng, masses)];
    auto &amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (amps[i] != Amplitude(0.0, 0.0) && outcome_of[i] != outcome) {
            amps[i] = 0;
        }
    }
    state.normalize();
    return outcome;
}

double predicate_probability(const StateVector &state, const PredicateFn &pred) {
    const Basis &basis = state.basis();
    std::vector<uint32_t> digits(basis.num_digits());
    double mass = 0;
    double total = 0;
    for (uint64_t i = 0; i < state.size(); i++) {
        double p = std::norm(state[i]);
        if (p == 0) {
            continue;
        }
        total += p;
        basis.decode(i, digits);
        if (pred(digits)) {
            mass += p;
        }
    }
    if (!(total > 0)) {
        fail(ErrorCode::EmptySupport, "zero state");
    }
    return mass / total;
}

void project(StateVector &state, const PredicateFn &pred, bool branch) {
    const Basis &basis = state.basis();
    std::vector<uint32_t> digits(basis.num_digits());
    auto &amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (amps[i] == Amplitude(0.0, 0.0)) {
            continue;
        }
        basis.decode(i, digits);
        if (pred(digits) != branch) {
            amps[i] = 0;
        }
    }
    state.normalize();
}

bool measure_predicate(StateVector &state, const PredicateFn &pred, Rng &rng) {
    double p = predicate_probability(state, pred);
    bool result = uniform01(rng) < p;
    project(state, pred, result);
    return result;
}

uint64_t measure_all(StateVector &state, Rng &rng) {
    std::vector<double> p = state.probabilities();
    uint64_t index = sample_weighted(rng, p);
    state = StateVector::basis_state(state.basis(), index);
    return index;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    Basis basis = a.basis().tensor(b.basis());
    std::vector<Amplitude> amps(basis.size());
    uint64_t nb = b.size();
    for (uint64_t i = 0; i < a.size(); i++) {
        if (a[i] == Amplitude(0.0, 0.0)) {
            continue;
        }
        for (uint64_t j = 0; j < nb; j++) {
            amps[i * nb + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(basis), std::move(amps));
}

StateVector replace_components(const StateVector &state, size_t first, size_t count,
                               std::vector<Component> replacement, const OutcomeFn &local_map) {
    const Basis &old_basis = state.basis();
    if (first + count > old_basis.num_components()) {
        fail(ErrorCode::BasisMismatch, "component range out of bounds");
    }
    std::vector<Component> comps;
    for (size_t c = 0; c < first; c++) {
        comps.push_back(old_basis.component(c));
    }
    Basis local_new(replacement);
    comps.insert(comps.end(), replacement.begin(), replacement.end());
    for (size_t c = first + count; c < old_basis.num_components(); c++) {
        comps.push_back(old_basis.component(c));
    }
    Basis new_basis(std::move(comps));

    size_t d_begin = first < old_basis.num_components() ? old_basis.digit_offset(first) : old_basis.num_digits();
    size_t d_end = first + count < old_basis.num_components() ? old_basis.digit_offset(first + count)
                                                              : old_basis.num_digits();
    uint64_t suffix_size = 1;
    for (size_t d = d_end; d < old_basis.num_digits(); d++) {
        suffix_size *= old_basis.digit_radix(d);
    }
    uint64_t old_mid_size = 1;
    for (size_t d = d_begin; d < d_end; d++) {
        old_mid_size *= old_basis.digit_radix(d);
    }
    uint64_t new_mid_size = local_new.size();

    std::vector<Amplitude> amps(new_basis.size());
    std::vector<bool> used(new_basis.size(), false);
    std::vector<uint32_t> digits(old_basis.num_digits());
    for (uint64_t i = 0; i < state.size(); i++) {
        if (state[i] == Amplitude(0.0, 0.0)) {
            continue;
        }
        old_basis.decode(i, digits);
        uint64_t local = local_map(Digits(digits).subspan(d_begin, d_end - d_begin));
        if (local >= new_mid_size) {
            fail(ErrorCode::Parameter, "relabel map leaves the target register");
        }
        uint64_t prefix = i / (old_mid_size * suffix_size);
        uint64_t suffix = i % suffix_size;
        uint64_t j = (prefix * new_mid_size + local) * suffix_size + suffix;
        if (used[j]) {
            fail(ErrorCode::Parameter, "relabel map is not injective on the support");
        }
        used[j] = true;
        amps[j] = state[i];
    }
    return StateVector(std::move(new_basis), std::move(amps));
}

}  // namespace qlease::qsim
