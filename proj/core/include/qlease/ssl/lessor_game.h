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

#ifndef QLEASE_SSL_LESSOR_GAME_H
#define QLEASE_SSL_LESSOR_GAME_H

#include <functional>
#include <string>

#include "qlease/ssl/ssl_cc.h"

namespace qlease::ssl {

enum class LessorVariant { Perfect, Average };

/// A challenger instance: keys are drawn once and reused across trials.
struct LessorInstance {
    SslConfig config;
    SslCrs crs;
    SslSecretKey sk;
    /// Fixed inner table of the compute-and-compare distribution (alpha is drawn per trial).
    watermark::CncTable cnc_inner;
};

LessorInstance make_lessor_instance(const SslConfig &config, Rng &rng);
watermark::Circuit sample_circuit(const LessorInstance &inst, Rng &rng);

/// Win conditions (a)-(d) and the three events that cover every win.
struct LessorFlags {
    bool mac_ok = false;
    bool full_ok = false;
    bool semi_ok = false;
    bool eval_ok = false;
    bool clone = false;
    bool mac_forgery = false;
    bool mark_removal = false;
};

struct LessorOutcome {
    bool win = false;
    RunProbability run;
    LessorFlags flags;
};

/// Bipartite output: classical parts and registers R1, R2 (which may share a block).
struct BipartiteOutput {
    ClassicalPart first;
    ClassicalPart second;
    ttql::Bolt r1;
    ttql::Bolt r2;
};

using LessorAdversary = std::function<BipartiteOutput(const SslCrs &crs, LeasedSoftware sft, Rng &rng)>;

/// honest, measure-and-copy, proof-strip, message-swap, classical-duplicate.
LessorAdversary lessor_adversary(const std::string &name);
std::vector<std::string> lessor_adversary_names();

/// Check runs on R1 and the second copy is judged on the post-measurement state of R2.
LessorOutcome lessor_game(const LessorInstance &inst, LessorVariant variant, double threshold,
                          const LessorAdversary &adversary, Rng &rng);

class CcAdversary {
   public:
    virtual ~CcAdversary() = default;
    virtual Obligation obligate(const SslCrs &crs, ByteView ssl_pk, Rng &rng) = 0;
    virtual std::pair<ReturnCert, LeasedSoftware> finish(const Answer &answer, Rng &rng) = 0;
};

/// honest, keep-and-guess, measure-and-copy, classical-duplicate.
std::unique_ptr<CcAdversary> cc_adversary(const std::string &name);
std::vector<std::string> cc_adversary_names();

LessorOutcome lessor_game_cc(const LessorInstance &inst, LessorVariant variant, double threshold,
                             CcAdversary &adversary, Rng &rng);

}  // namespace qlease::ssl

#endif
