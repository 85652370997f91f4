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

#include "qlease/qsim/registers.h"

#include "qlease/common/error.h"
#include "qlease/qsim/fourier.h"

namespace qlease::qsim {

Register Register::own(StateVector state) {
    Register r;
    size_t n = state.basis().num_components();
    r.block_ = std::make_shared<StateVector>(std::move(state));
    for (size_t c = 0; c < n; c++) {
        r.components_.push_back(c);
    }
    return r;
}

std::vector<Register> Register::split(StateVector state, const std::vector<std::vector<size_t>> &groups) {
    auto block = std::make_shared<StateVector>(std::move(state));
    std::vector<bool> seen(block->basis().num_components(), false);
    std::vector<Register> out;
    for (const auto &g : groups) {
        Register r;
        r.block_ = block;
        for (size_t c : g) {
            if (c >= seen.size() || seen[c]) {
                fail(ErrorCode::Parameter, "component groups must be disjoint and in range");
            }
            seen[c] = true;
            r.components_.push_back(c);
        }
        out.push_back(std::move(r));
    }
    return out;
}

const StateVector &Register::block() const {
    if (block_ == nullptr) {
        fail(ErrorCode::ArityMismatch, "register is empty");
    }
    return *block_;
}

StateVector &Register::block() {
    if (block_ == nullptr) {
        fail(ErrorCode::ArityMismatch, "register is empty");
    }
    return *block_;
}

bool Register::owns_whole_block() const {
    return block_ != nullptr && components_.size() == block_->basis().num_components();
}

Basis Register::local_basis() const {
    std::vector<Component> comps;
    for (size_t c : components_) {
        comps.push_back(block().basis().component(c));
    }
    return Basis(std::move(comps));
}

std::vector<size_t> Register::digit_positions() const {
    const Basis &basis = block().basis();
    std::vector<size_t> pos;
    for (size_t c : components_) {
        size_t off = basis.digit_offset(c);
        for (uint32_t i = 0; i < basis.component(c).length; i++) {
            pos.push_back(off + i);
        }
    }
    return pos;
}

PredicateFn Register::lift(PredicateFn local) const {
    std::vector<size_t> pos = digit_positions();
    return [pos, local = std::move(local), scratch = std::vector<uint32_t>(pos.size())](Digits d) mutable {
        for (size_t i = 0; i < pos.size(); i++) {
            scratch[i] = d[pos[i]];
        }
        return local(scratch);
    };
}

OutcomeFn Register::lift(OutcomeFn local) const {
    std::vector<size_t> pos = digit_positions();
    return [pos, local = std::move(local), scratch = std::vector<uint32_t>(pos.size())](Digits d) mutable {
        for (size_t i = 0; i < pos.size(); i++) {
            scratch[i] = d[pos[i]];
        }
        return local(scratch);
    };
}

Register Register::detached_copy() const {
    Register r;
    r.block_ = std::make_shared<StateVector>(block());
    r.components_ = components_;
    return r;
}

bool measure_register(Register &reg, const PredicateFn &local_pred, Rng &rng) {
    return measure_predicate(reg.block(), reg.lift(local_pred), rng);
}

double register_probability(const Register &reg, const PredicateFn &local_pred) {
    return predicate_probability(reg.block(), reg.lift(local_pred));
}

// Local label index equals the block index when the register is the whole block in order.
static bool identity_layout(const Register &reg) {
    if (!reg.owns_whole_block()) {
        return false;
    }
    for (size_t i = 0; i < reg.components().size(); i++) {
        if (reg.components()[i] != i) {
            return false;
        }
    }
    return true;
}

uint64_t measure_register_all(Register &reg, Rng &rng) {
    if (identity_layout(reg)) {
        return measure_all(reg.block(), rng);
    }
    Basis local = reg.local_basis();
    return apply_and_measure(reg.block(), reg.lift(OutcomeFn([local](Digits d) { return local.encode(d); })), rng);
}

std::map<uint64_t, double> register_distribution(const Register &reg) {
    if (identity_layout(reg)) {
        std::map<uint64_t, double> out;
        const StateVector &s = reg.block();
        const auto &amps = s.amplitudes();
        for (uint64_t i = 0; i < amps.size(); i++) {
            double p = std::norm(amps[i]);
            if (p != 0) {
                out.emplace_hint(out.end(), i, p);
            }
        }
        return out;
    }
    Basis local = reg.local_basis();
    return outcome_distribution(reg.block(), reg.lift(OutcomeFn([local](Digits d) { return local.encode(d); })));
}

void qft_register(Register &reg, size_t local, bool inverse) {
    if (local >= reg.components().size()) {
        fail(ErrorCode::BasisMismatch, "no such register component");
    }
    qft_component(reg.block(), reg.components()[local], inverse);
}

void hadamard_register(Register &reg, size_t local) {
    if (local >= reg.components().size()) {
        fail(ErrorCode::BasisMismatch, "no such register component");
    }
    hadamard_component(reg.block(), reg.components()[local]);
}

void relabel_register(Register &reg, size_t local, Component replacement, const OutcomeFn &map) {
    if (local >= reg.components().size()) {
        fail(ErrorCode::BasisMismatch, "no such register component");
    }
    size_t c = reg.components()[local];
    reg.block() = replace_components(reg.block(), c, 1, {replacement}, map);
}

}  // namespace qlease::qsim
