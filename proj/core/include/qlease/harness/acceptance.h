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

#ifndef QLEASE_HARNESS_ACCEPTANCE_H
#define QLEASE_HARNESS_ACCEPTANCE_H

#include <cstdint>
#include <string>
#include <vector>

namespace qlease::harness {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    uint64_t seed = 2026;
    /// Criteria to run; empty means 1 through 10.
    std::vector<int> only;
};

constexpr int kNumCriteria = 10;

const char *criterion_title(int id);
/// Never throws: an exception inside a check is reported as a failure.
CriterionResult run_criterion(int id, const AcceptanceOptions &opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts);
/// "PASS  3 two-tier correctness (1.2s): detail"
std::string format_result(const CriterionResult &r);

/// Transcript of an honest seeded lease over the in-process transport (cv-clean, PRF circuits):
/// lease circuit 1, three runs, return.
std::string golden_session_transcript(uint64_t seed);

/// Eval outputs used as frozen GGM fixtures: one "seed x hex" line per entry.
std::string ggm_fixture_lines();

}  // namespace qlease::harness

#endif
