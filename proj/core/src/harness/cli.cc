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

#include "qlease/harness/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlease/common/error.h"
#include "qlease/harness/acceptance.h"
#include "qlease/harness/report.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/wire/service.h"

namespace qlease::harness {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
    uint64_t seed = 1;
    std::string backend;
    std::string circuit = "prf";
    std::string key_file;
    bool json = false;
};

watermark::CircuitKind parse_circuit(const std::string &s) {
    if (s == "prf") {
        return watermark::CircuitKind::Prf;
    }
    if (s == "cnc") {
        return watermark::CircuitKind::Cnc;
    }
    fail(ErrorCode::Usage, "unknown circuit class '" + s + "' (expected prf or cnc)");
}

struct Keys {
    ssl::SslConfig config;
    ssl::SslSecretKey sk;
    uint64_t catalog_seed = 0;
};

Bytes hex_field(const Json &j, const char *name) {
    if (!j.contains(name) || !j[name].is_string()) {
        fail(ErrorCode::Decode, std::string("key file lacks '") + name + "'");
    }
    return from_hex(j[name].get<std::string>());
}

// Keys from --key when given, otherwise derived from --seed.
Keys load_keys(const Common &c, const std::string &default_backend) {
    Keys k;
    if (!c.key_file.empty()) {
        std::ifstream in(c.key_file);
        if (!in) {
            fail(ErrorCode::Usage, "cannot read key file " + c.key_file);
        }
        Json j;
        try {
            j = Json::parse(in);
        } catch (const std::exception &e) {
            fail(ErrorCode::Decode, std::string("key file is not JSON: ") + e.what());
        }
        k.sk = ssl::SslSecretKey::deserialize(hex_field(j, "ssl_sk"));
        k.config.lightning = ssl::parse_backend(j.value("backend", std::string("sis")));
        k.config.circuit = k.sk.pp.variant;
        k.catalog_seed = j.value("catalog_seed", uint64_t{0});
        return k;
    }
    k.config.lightning = ssl::parse_backend(c.backend.empty() ? default_backend : c.backend);
    k.config.circuit = parse_circuit(c.circuit);
    Rng rng(c.seed);
    ssl::SslCrs crs = ssl::ssl_setup(k.config, rng);
    k.sk = ssl::ssl_gen(crs, k.config, rng);
    k.catalog_seed = derive_seed(c.seed, 1);
    return k;
}

void emit(std::ostream &out, const Common &c, const Json &j, const std::string &text) {
    if (c.json) {
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

std::string yes_no(bool b) {
    return b ? "accepted" : "rejected";
}

void add_common(CLI::App *cmd, Common &c, bool with_backend = true) {
    cmd->add_option("--seed", c.seed, "Seed for every random choice");
    if (with_backend) {
        cmd->add_option("--backend", c.backend, "Lightning backend: sis, cv-clean or cv-lwe");
        cmd->add_option("--circuit", c.circuit, "Circuit class: prf or cnc");
        cmd->add_option("--key", c.key_file, "Key file written by keygen (overrides --seed/--backend/--circuit)");
    }
    cmd->add_flag("--json", c.json, "Print a JSON document instead of text");
}

int cmd_keygen(const Common &c, const std::string &out_file, std::ostream &out) {
    Keys k = load_keys(c, "sis");
    Json j;
    j["schema_version"] = 1;
    j["backend"] = ssl::backend_name(k.config.lightning);
    j["circuit"] = watermark::circuit_kind_name(k.sk.pp.variant);
    j["catalog_seed"] = k.catalog_seed;
    j["crs"] = to_hex(k.sk.pp.serialize());
    j["ssl_pk"] = to_hex(ssl::ssl_public_key(k.sk));
    j["ssl_sk"] = to_hex(k.sk.serialize());
    if (out_file.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_file);
        if (!f) {
            fail(ErrorCode::Usage, "cannot write " + out_file);
        }
        f << j.dump(2) << "\n";
        emit(out, c, Json{{"written", out_file}}, "wrote keys to " + out_file + "\n");
    }
    return kExitOk;
}

int cmd_mint(const Common &c, bool sampled, std::ostream &out) {
    Keys k = load_keys(c, "sis");
    Rng rng(derive_seed(c.seed, 100));
    const ttql::KeyPair &kp = k.sk.lightning;
    ttql::Minted minted = kp.pk->boltgen(rng);
    Json j;
    j["backend"] = ssl::backend_name(k.config.lightning);
    j["snum"] = to_hex(minted.snum);
    double semi_p = kp.pk->semi_probability(minted.snum, minted.bolt);
    double full_p = kp.sk->full_probability(minted.snum, minted.bolt);
    j["semi_probability"] = semi_p;
    j["full_probability"] = full_p;
    std::ostringstream text;
    text << "snum " << to_hex(minted.snum) << "\nsemi-verify acceptance " << semi_p << "\nfull-verify acceptance "
         << full_p << "\n";
    if (sampled) {
        bool semi = kp.pk->semi_vrfy(minted.snum, minted.bolt, rng);
        bool full = kp.sk->full_vrfy(minted.snum, minted.bolt, rng);
        j["semi_vrfy"] = semi;
        j["full_vrfy"] = full;
        text << "semi-verify " << yes_no(semi) << "\nfull-verify " << yes_no(full) << "\n";
        emit(out, c, j, text.str());
        return semi && full ? kExitOk : kExitFailure;
    }
    emit(out, c, j, text.str());
    return kExitOk;
}

int cmd_certify(const Common &c, std::ostream &out) {
    Keys k = load_keys(c, "cv-clean");
    const auto *pk = dynamic_cast<const ttql::CvPublicKey *>(k.sk.lightning.pk.get());
    if (pk == nullptr) {
        fail(ErrorCode::BackendMismatch, "certify needs a cv backend");
    }
    Rng rng(derive_seed(c.seed, 100));
    ttql::Minted minted = pk->boltgen(rng);
    ttql::Certificate cert = pk->bolt_cert(minted.bolt, rng);
    bool ok = static_cast<const ttql::CvSecretKey &>(*k.sk.lightning.sk).cert_vrfy(minted.snum, cert);
    bool reuse = pk->semi_vrfy(minted.snum, minted.bolt, rng);
    Json j{{"snum", to_hex(minted.snum)}, {"certificate", to_hex(cert.serialize())}, {"cert_vrfy", ok},
           {"semi_vrfy_after_cert", reuse}};
    emit(out, c, j,
         "certificate " + to_hex(cert.serialize()) + "\ncert-verify " + yes_no(ok) +
             "\nsemi-verify of the returned bolt " + yes_no(reuse) + "\n");
    return ok ? kExitOk : kExitFailure;
}

struct LeaseRun {
    std::vector<uint64_t> inputs;
    uint32_t circuit_id = 1;
    bool check = false;
};

int cmd_lease(const Common &c, const LeaseRun &lr, std::ostream &out) {
    Keys k = load_keys(c, "sis");
    wire::CircuitCatalog catalog = wire::default_catalog(k.sk.pp, k.catalog_seed);
    auto it = catalog.find(lr.circuit_id);
    if (it == catalog.end()) {
        fail(ErrorCode::Usage, "no circuit with id " + std::to_string(lr.circuit_id));
    }
    Rng rng(derive_seed(c.seed, 100));
    ssl::LeasedSoftware sft = ssl::ssl_lessor(k.sk, it->second, rng);
    Json j;
    j["circuit_id"] = lr.circuit_id;
    j["program_bytes"] = sft.classical.program.size();
    j["tag"] = sft.classical.tag;
    std::optional<Bytes> snum = ssl::extracted_snum(k.sk.pp, sft.classical);
    j["snum"] = snum ? to_hex(*snum) : "";
    std::ostringstream text;
    text << "leased circuit " << lr.circuit_id << ": program " << sft.classical.program.size() << " bytes, snum "
         << j["snum"].get<std::string>() << "\n";
    bool ok = true;
    Json runs = Json::array();
    for (uint64_t x : lr.inputs) {
        std::optional<Bytes> y = ssl::ssl_run(k.sk.pp, sft, x, rng);
        bool correct = y && *y == it->second.evaluate(x);
        ok = ok && correct;
        runs.push_back({{"x", x}, {"y", y ? to_hex(*y) : "bottom"}, {"correct", correct}});
        text << "run(" << x << ") = " << (y ? to_hex(*y) : "bottom") << (correct ? "" : "  (WRONG)") << "\n";
    }
    if (!lr.inputs.empty()) {
        j["runs"] = runs;
    }
    if (lr.check) {
        bool checked = ssl::ssl_check(k.sk, sft, rng);
        ok = ok && checked;
        j["check"] = checked;
        text << "check " << yes_no(checked) << "\n";
    }
    emit(out, c, j, text.str());
    return ok ? kExitOk : kExitFailure;
}

int cmd_serve(const Common &c, const std::string &listen, size_t sessions, std::ostream &out) {
    Keys k = load_keys(c, "cv-clean");
    wire::CircuitCatalog catalog = wire::default_catalog(k.sk.pp, k.catalog_seed);
    wire::TcpListener listener(listen);
    out << (c.json ? Json{{"listening", listener.port()}}.dump() : "listening on port " + std::to_string(listener.port()))
        << std::endl;
    wire::lessor_serve(k.sk, listener, catalog, c.seed, sessions);
    return kExitOk;
}

int cmd_client(const Common &c, const std::string &connect, const LeaseRun &lr, std::ostream &out) {
    Keys k = load_keys(c, "cv-clean");
    auto conn = wire::TcpTransport::connect(connect);
    Rng rng(derive_seed(c.seed, 200));
    ssl::LeasedSoftware sft = wire::lessee_client(ssl::ssl_public_key(k.sk), *conn, lr.circuit_id, rng);
    Json j;
    Json runs = Json::array();
    std::ostringstream text;
    for (uint64_t x : lr.inputs) {
        std::optional<Bytes> y = ssl::ssl_run(k.sk.pp, sft, x, rng);
        runs.push_back({{"x", x}, {"y", y ? to_hex(*y) : "bottom"}});
        text << "run(" << x << ") = " << (y ? to_hex(*y) : "bottom") << "\n";
    }
    bool ok = wire::lessee_return(*conn, k.sk.pp, sft, rng);
    j["circuit_id"] = lr.circuit_id;
    j["runs"] = runs;
    j["returned"] = ok;
    text << "return " << yes_no(ok) << "\n";
    emit(out, c, j, text.str());
    return ok ? kExitOk : kExitFailure;
}

int cmd_selftest(const Common &c, const std::vector<int> &only, std::ostream &out) {
    AcceptanceOptions opts;
    opts.seed = c.seed;
    opts.only = only;
    bool all = true;
    Json results = Json::array();
    for (int id : opts.only.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10} : opts.only) {
        CriterionResult r = run_criterion(id, opts);
        all = all && r.pass;
        if (c.json) {
            results.push_back(
                {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
            out << format_result(r) << std::endl;
        }
    }
    if (c.json) {
        out << Json{{"schema_version", 1}, {"pass", all}, {"criteria", results}}.dump(2) << "\n";
    }
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qlease: secure software leasing on an exact quantum simulator", "qlease"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Common c;
    std::string out_file, listen = "127.0.0.1:7465", connect = "127.0.0.1:7465";
    size_t sessions = 0;
    LeaseRun lr;
    std::vector<int> only;
    GameSpec spec;
    std::string variant = "average";

    auto *keygen = app.add_subcommand("keygen", "Generate a key file (crs, lessor key)");
    add_common(keygen, c);
    keygen->add_option("--out", out_file, "Write the key file here instead of stdout");

    auto *mint = app.add_subcommand("mint", "Mint a bolt and print its serial number and exact acceptance");
    add_common(mint, c);
    auto *verify = app.add_subcommand("verify", "Mint a bolt, then semi-verify and full-verify it");
    add_common(verify, c);
    auto *certify = app.add_subcommand("certify", "Mint a cv bolt and turn it into a deletion certificate");
    add_common(certify, c);

    auto *lease = app.add_subcommand("lease", "Lease a catalog circuit");
    add_common(lease, c);
    lease->add_option("--circuit-id", lr.circuit_id, "Catalog id (1-4)");
    auto *run = app.add_subcommand("run", "Lease a circuit and run it on inputs");
    add_common(run, c);
    run->add_option("--circuit-id", lr.circuit_id, "Catalog id (1-4)");
    run->add_option("--input,-x", lr.inputs, "Input in [0, 1024)")->required();
    auto *check = app.add_subcommand("check", "Lease a circuit, optionally run it, then check the returned copy");
    add_common(check, c);
    check->add_option("--circuit-id", lr.circuit_id, "Catalog id (1-4)");
    check->add_option("--input,-x", lr.inputs, "Inputs to run before the check");

    auto *serve = app.add_subcommand("serve", "Run the lessor service over TCP (cv backends)");
    add_common(serve, c);
    serve->add_option("--listen", listen, "host:port");
    serve->add_option("--sessions", sessions, "Stop after this many sessions (0 = never)");
    auto *client = app.add_subcommand("client", "Lease over TCP, run, and return the certificate");
    add_common(client, c);
    client->add_option("--connect", connect, "host:port");
    client->add_option("--circuit-id", lr.circuit_id, "Catalog id (1-4)");
    client->add_option("--input,-x", lr.inputs, "Inputs to run before returning");

    auto *game = app.add_subcommand("game", "Play a security game and report win statistics");
    add_common(game, c);
    game->add_option("--name", spec.name, "tt-unclone, tt-unclone-cv, unremovability, lessor, lessor-cc")->required();
    game->add_option("--adversary", spec.adversary, "Built-in adversary")->required();
    game->add_option("--trials", spec.trials, "Number of trials");
    game->add_option("--variant", variant, "Lessor game variant: perfect or average");
    game->add_option("--threshold", spec.threshold, "epsilon (average, unremovability) or beta (perfect)");

    auto *selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    add_common(selftest, c, false);
    selftest->add_option("--criteria", only, "Only these criteria (1-10)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\nrun 'qlease --help-all' for usage\n";
        return kExitUsage;
    }

    try {
        if (keygen->parsed()) {
            return cmd_keygen(c, out_file, out);
        }
        if (mint->parsed()) {
            return cmd_mint(c, false, out);
        }
        if (verify->parsed()) {
            return cmd_mint(c, true, out);
        }
        if (certify->parsed()) {
            return cmd_certify(c, out);
        }
        if (lease->parsed()) {
            lr.inputs.clear();
            return cmd_lease(c, lr, out);
        }
        if (run->parsed()) {
            return cmd_lease(c, lr, out);
        }
        if (check->parsed()) {
            lr.check = true;
            return cmd_lease(c, lr, out);
        }
        if (serve->parsed()) {
            return cmd_serve(c, listen, sessions, out);
        }
        if (client->parsed()) {
            return cmd_client(c, connect, lr, out);
        }
        if (game->parsed()) {
            spec.seed = c.seed;
            if (!c.backend.empty()) {
                spec.backend = ssl::parse_backend(c.backend);
            }
            spec.circuit = parse_circuit(c.circuit);
            if (variant == "perfect") {
                spec.variant = ssl::LessorVariant::Perfect;
            } else if (variant != "average") {
                fail(ErrorCode::Usage, "unknown variant '" + variant + "' (expected perfect or average)");
            }
            GameReport r = run_game(spec);
            out << (c.json ? report_json(r) + "\n" : report_text(r));
            return kExitOk;
        }
        if (selftest->parsed()) {
            return cmd_selftest(c, only, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Usage ? kExitUsage : kExitFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

int cli_main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace qlease::harness
