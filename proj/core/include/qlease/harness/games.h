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

#ifndef QLEASE_HARNESS_GAMES_H
#define QLEASE_HARNESS_GAMES_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlease/harness/stats.h"
#include "qlease/ssl/lessor_game.h"

namespace qlease::harness {

constexpr int kReportSchemaVersion = 1;

struct GameReport {
    std::string game;
    std::string scheme;
    std::string adversary;
    std::string circuit;
    std::string variant;
    uint64_t trials = 0;
    uint64_t wins = 0;
    double win_rate = 0;
    Interval wilson;
    /// Per-condition counts over all trials, plus "win_*" counts over winning trials only.
    std::map<std::string, uint64_t> flags;
    std::map<std::string, double> params;
    uint64_t seed = 0;
    double wall_seconds = 0;
};

struct GameSpec {
    /// tt-unclone, tt-unclone-cv, unremovability, lessor, lessor-cc.
    std::string name;
    std::string adversary;
    uint64_t trials = 100;
    uint64_t seed = 1;
    /// Defaults: sis for tt-unclone and lessor, cv-clean for tt-unclone-cv and lessor-cc.
    std::optional<ssl::LightningBackend> backend;
    watermark::CircuitKind circuit = watermark::CircuitKind::Prf;
    ssl::LessorVariant variant = ssl::LessorVariant::Average;
    /// epsilon for average-case and unremovability games, beta for the perfect variant.
    double threshold = 0.5;
    lattice::SisParams sis;
    ttql::CvParams cv;
};

std::vector<std::string> game_names();
/// Usage error for an unknown game.
std::vector<std::string> adversary_names(const std::string &game);

/// Trial i draws its randomness from derive_seed(seed, i + 1); setup uses derive_seed(seed, 0).
GameReport run_game(const GameSpec &spec);

GameReport game_tt_unclone(const GameSpec &spec);
GameReport game_tt_unclone_cv(const GameSpec &spec);
GameReport game_unremovability(const GameSpec &spec);
GameReport game_lessor(const GameSpec &spec);
GameReport game_lessor_cc(const GameSpec &spec);

}  // namespace qlease::harness

#endif
