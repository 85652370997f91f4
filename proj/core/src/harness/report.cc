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

#include "qlease/harness/report.h"

#include <cstdio>

#include "json.hpp"

namespace qlease::harness {

std::string report_json(const GameReport &r, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["game"] = r.game;
    j["scheme"] = r.scheme;
    j["adversary"] = r.adversary;
    if (!r.circuit.empty()) {
        j["circuit"] = r.circuit;
    }
    if (!r.variant.empty()) {
        j["variant"] = r.variant;
    }
    j["trials"] = r.trials;
    j["wins"] = r.wins;
    j["win_rate"] = r.win_rate;
    j["wilson99"] = {{"lower", r.wilson.lower}, {"upper", r.wilson.upper}};
    j["flags"] = r.flags;
    j["params"] = r.params;
    j["seed"] = r.seed;
    j["wall_seconds"] = r.wall_seconds;
    return j.dump(indent);
}

std::string report_text(const GameReport &r) {
    char line[256];
    std::snprintf(line, sizeof(line), "%s [%s] adversary=%s: %llu/%llu wins (%.4f, 99%% CI %.4f..%.4f) in %.2fs\n",
                  r.game.c_str(), r.scheme.c_str(), r.adversary.c_str(), static_cast<unsigned long long>(r.wins),
                  static_cast<unsigned long long>(r.trials), r.win_rate, r.wilson.lower, r.wilson.upper,
                  r.wall_seconds);
    std::string out = line;
    for (const auto &[k, v] : r.flags) {
        out += "  " + k + " = " + std::to_string(v) + "\n";
    }
    return out;
}

}  // namespace qlease::harness
