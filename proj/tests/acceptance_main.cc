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

// Prints one PASS/FAIL line per acceptance criterion. Optional arguments select criteria.

#include <cstdlib>
#include <iostream>
#include <string>

#include "qlease/harness/acceptance.h"

int main(int argc, char **argv) {
    qlease::harness::AcceptanceOptions opts;
    for (int i = 1; i < argc; i++) {
        opts.only.push_back(std::atoi(argv[i]));
    }
    if (opts.only.empty()) {
        for (int id = 1; id <= qlease::harness::kNumCriteria; id++) {
            opts.only.push_back(id);
        }
    }
    bool all = true;
    for (int id : opts.only) {
        qlease::harness::CriterionResult r = qlease::harness::run_criterion(id, opts);
        std::cout << qlease::harness::format_result(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
