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

#include <cmath>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qlease/common/error.h"
#include "qlease/harness/acceptance.h"
#include "qlease/harness/cli.h"
#include "qlease/harness/games.h"
#include "qlease/harness/report.h"
#include "qlease/harness/stats.h"

using namespace qlease;
using namespace qlease::harness;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(stats, wilson_matches_closed_form) {
    for (auto [wins, trials] : {std::pair<uint64_t, uint64_t>{0, 500}, {7, 500}, {250, 500}, {1, 1}, {22, 1000000}}) {
        double n = static_cast<double>(trials), p = static_cast<double>(wins) / n, z = kZ99;
        double center = (p + z * z / (2 * n)) / (1 + z * z / n);
        double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / (1 + z * z / n);
        Interval w = wilson(wins, trials);
        EXPECT_NEAR(w.lower, std::max(0.0, center - half), 1e-12);
        EXPECT_NEAR(w.upper, std::min(1.0, center + half), 1e-12);
    }
    // Zero wins: upper = z^2 / (n + z^2).
    EXPECT_NEAR(wilson(0, 500).upper, kZ99 * kZ99 / (500 + kZ99 * kZ99), 1e-12);
    EXPECT_EQ(wilson(0, 500).lower, 0.0);
    Interval empty = wilson(0, 0);
    EXPECT_EQ(empty.lower, 0.0);
    EXPECT_EQ(empty.upper, 1.0);
    EXPECT_EQ(rate(0, 0), 0.0);
    EXPECT_EQ(rate(3, 4), 0.75);
}

TEST(games, names_and_adversaries) {
    std::vector<std::string> expected{"tt-unclone", "tt-unclone-cv", "unremovability", "lessor", "lessor-cc"};
    EXPECT_EQ(game_names(), expected);
    for (const auto &g : game_names()) {
        EXPECT_FALSE(adversary_names(g).empty()) << g;
    }
    try {
        adversary_names("chess");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Usage);
    }
}

TEST(games, every_game_and_adversary_runs_deterministically) {
    for (const auto &g : game_names()) {
        for (const auto &a : adversary_names(g)) {
            GameSpec spec;
            spec.name = g;
            spec.adversary = a;
            spec.trials = 3;
            spec.seed = 80;
            GameReport r1 = run_game(spec), r2 = run_game(spec);
            EXPECT_EQ(r1.trials, 3u);
            EXPECT_LE(r1.wins, r1.trials);
            EXPECT_EQ(r1.wins, r2.wins) << g << " " << a;
            EXPECT_EQ(r1.flags, r2.flags) << g << " " << a;
            EXPECT_EQ(r1.game, g);
            EXPECT_EQ(r1.adversary, a);
        }
    }
}

TEST(games, honest_lessor_never_wins) {
    GameSpec spec;
    spec.name = "lessor";
    spec.adversary = "honest";
    spec.trials = 20;
    GameReport r = run_game(spec);
    EXPECT_EQ(r.wins, 0u);
    EXPECT_EQ(r.win_rate, 0.0);
    EXPECT_NEAR(r.wilson.upper, wilson(0, 20).upper, 1e-15);
}

TEST(report, json_schema) {
    GameSpec spec;
    spec.name = "tt-unclone-cv";
    spec.adversary = "keep-and-guess";
    spec.trials = 10;
    spec.seed = 81;
    GameReport r = run_game(spec);
    auto j = nlohmann::json::parse(report_json(r));
    EXPECT_EQ(j.at("schema_version").get<int>(), kReportSchemaVersion);
    for (const char *key : {"game", "scheme", "adversary", "trials", "wins", "win_rate", "wilson99", "flags",
                            "params", "seed", "wall_seconds"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("game"), "tt-unclone-cv");
    EXPECT_EQ(j.at("trials").get<uint64_t>(), 10u);
    EXPECT_EQ(j.at("seed").get<uint64_t>(), 81u);
    EXPECT_LE(j.at("wilson99").at("lower").get<double>(), j.at("wilson99").at("upper").get<double>());
    EXPECT_NE(report_text(r).find("keep-and-guess"), std::string::npos);
}

TEST(acceptance, titles_and_formatting) {
    for (int i = 1; i <= kNumCriteria; i++) {
        EXPECT_STRNE(criterion_title(i), "");
    }
    CriterionResult r;
    r.id = 3;
    r.title = criterion_title(3);
    r.pass = true;
    r.detail = "ok";
    r.seconds = 1.25;
    std::string line = format_result(r);
    EXPECT_EQ(line.rfind("PASS  3 ", 0), 0u) << line;
    EXPECT_NE(line.find("ok"), std::string::npos);
    r.id = 10;
    r.pass = false;
    EXPECT_EQ(format_result(r).rfind("FAIL 10 ", 0), 0u);
    CriterionResult bad = run_criterion(42, AcceptanceOptions{});
    EXPECT_FALSE(bad.pass);
}

TEST(acceptance, fast_criteria_pass) {
    AcceptanceOptions opts;
    for (int id : {2, 4, 7}) {
        CriterionResult r = run_criterion(id, opts);
        EXPECT_TRUE(r.pass) << format_result(r);
    }
}

TEST(cli, exit_codes) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    CliResult unknown = cli({"frobnicate"});
    EXPECT_EQ(unknown.code, kExitUsage);
    EXPECT_NE(unknown.err.find("--help-all"), std::string::npos);
    EXPECT_EQ(cli({"--help-all"}).code, kExitOk);
    EXPECT_EQ(cli({"game", "--name", "tt-unclone"}).code, kExitUsage);
    EXPECT_EQ(cli({"game", "--name", "nope", "--adversary", "x"}).code, kExitUsage);
    EXPECT_EQ(cli({"mint", "--backend", "rsa"}).code, kExitUsage);
    EXPECT_EQ(cli({"run", "--seed", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "--key", "/nonexistent/key.json"}).code, kExitUsage);
    std::string bad = ::testing::TempDir() + "qlease_bad_key.json";
    std::ofstream(bad) << "{ not json";
    EXPECT_EQ(cli({"verify", "--key", bad}).code, kExitFailure);
}

TEST(cli, keygen_mint_and_game) {
    CliResult key = cli({"keygen", "--seed", "5", "--backend", "cv-clean"});
    ASSERT_EQ(key.code, kExitOk) << key.err;
    auto j = nlohmann::json::parse(key.out);
    EXPECT_EQ(j.at("backend"), "cv-clean");
    EXPECT_EQ(cli({"keygen", "--seed", "5", "--backend", "cv-clean"}).out, key.out);

    CliResult mint = cli({"mint", "--seed", "5", "--json"});
    ASSERT_EQ(mint.code, kExitOk) << mint.err;
    EXPECT_NO_THROW(nlohmann::json::parse(mint.out));

    CliResult run = cli({"run", "--seed", "5", "-x", "3", "-x", "700", "--json"});
    ASSERT_EQ(run.code, kExitOk) << run.err;

    CliResult game = cli({"game", "--name", "lessor-cc", "--adversary", "honest", "--trials", "4", "--json"});
    ASSERT_EQ(game.code, kExitOk) << game.err;
    auto g = nlohmann::json::parse(game.out);
    EXPECT_EQ(g.at("wins").get<uint64_t>(), 0u);

    CliResult st = cli({"selftest", "--criteria", "2"});
    EXPECT_EQ(st.code, kExitOk) << st.out;
    EXPECT_EQ(st.out.rfind("PASS  2 ", 0), 0u) << st.out;
}
