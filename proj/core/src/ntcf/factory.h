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

#ifndef QLEASE_NTCF_FACTORY_H
#define QLEASE_NTCF_FACTORY_H

#include "qlease/ntcf/ntcf.h"

namespace qlease::ntcf {

struct NtcfFactory {
    static NtcfPair make_clean(const CleanParams &params, uint32_t j_width, Rng &rng);
    static NtcfPair make_lwe(const LweParams &params, uint32_t j_width, Rng &rng);

    static NtcfKey clean_key(uint32_t bits, uint32_t j_width, std::vector<uint32_t> f0, std::vector<uint32_t> f1);
    static NtcfKey lwe_key(lattice::ModQMatrix a, lattice::ModQVector u, uint32_t noise_bound, uint32_t j_width);
    static NtcfTrapdoor clean_trapdoor(const NtcfKey &key);
    static NtcfTrapdoor lwe_trapdoor(const NtcfKey &key, lattice::ModQVector s, lattice::ModQVector e0);
};

/// Throws ParameterError unless |X| fits in width bits and the sampler fits under the cap.
void check_sizes(uint64_t x_size, uint64_t y_size, uint32_t j_width);

}  // namespace qlease::ntcf

#endif
