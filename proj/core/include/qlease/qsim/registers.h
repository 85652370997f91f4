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

#ifndef QLEASE_QSIM_REGISTERS_H
#define QLEASE_QSIM_REGISTERS_H

#include <memory>
#include <vector>

#include "qlease/common/rng.h"
#include "qlease/qsim/ops.h"

namespace qlease::qsim {

/// Handle to some components of a state block. Registers that share a block may be entangled;
/// operations on one act on the shared block with the other components as spectators.
class Register {
   public:
    Register() = default;

    /// A register covering every component of a fresh block.
    static Register own(StateVector state);
    /// Splits one block into registers over the given component groups.
    static std::vector<Register> split(StateVector state, const std::vector<std::vector<size_t>> &groups);

    bool empty() const {
        return block_ == nullptr;
    }
    void release() {
        block_.reset();
        components_.clear();
    }

    const std::vector<size_t> &components() const {
        return components_;
    }
    const StateVector &block() const;
    StateVector &block();
    bool owns_whole_block() const;

    Basis local_basis() const;
    /// Digit positions of this register inside the block, in local order.
    std::vector<size_t> digit_positions() const;

    /// Adapters from register-local digits to whole-block digits.
    PredicateFn lift(PredicateFn local) const;
    OutcomeFn lift(OutcomeFn local) const;

    /// Deep copy of the block with the same component indices, for exact what-if computations.
    Register detached_copy() const;

   private:
    std::shared_ptr<StateVector> block_;
    std::vector<size_t> components_;
};

/// Predicate measurement restricted to the register's digits.
bool measure_register(Register &reg, const PredicateFn &local_pred, Rng &rng);
double register_probability(const Register &reg, const PredicateFn &local_pred);

/// Measures the register in the computational basis; returns its local label index.
uint64_t measure_register_all(Register &reg, Rng &rng);

/// Exact distribution of the register's local label index.
std::map<uint64_t, double> register_distribution(const Register &reg);

/// Local component `local` (an index into components()).
void qft_register(Register &reg, size_t local, bool inverse = false);
void hadamard_register(Register &reg, size_t local);

/// Replaces one local component by `replacement` using an injective map on its digits.
void relabel_register(Register &reg, size_t local, Component replacement, const OutcomeFn &map);

}  // namespace qlease::qsim

#endif
