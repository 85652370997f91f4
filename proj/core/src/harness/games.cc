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

#include "qlease/harness/games.h"

#include <chrono>

#include "qlease/common/error.h"
#include "qlease/lattice/trapdoor.h"
#include "qlease/ttql/cv_lightning.h"
#include "qlease/ttql/sis_lightning.h"

namespace qlease::harness {

namespace {

using Clock = std::chrono::steady_clock;

ssl::LightningBackend backend_or(const GameSpec &spec, ssl::LightningBackend fallback) {
    return spec.backend.value_or(fallback);
}

void require_adversary(const std::string &game, const std::string &adversary) {
    for (const auto &n : adversary_names(game)) {
        if (n == adversary) {
            return;
        }
    }
    std::string known;
    for (const auto &n : adversary_names(game)) {
        known += (known.empty() ? "" : ", ") + n;
    }
    fail(ErrorCode::Usage, "unknown adversary '" + adversary + "' for " + game + " (expected " + known + ")");
}

GameReport start(const GameSpec &spec, const std::string &scheme) {
    GameReport r;
    r.game = spec.name;
    r.scheme = scheme;
    r.adversary = spec.adversary;
    r.trials = spec.trials;
    r.seed = spec.seed;
    return r;
}

void finish(GameReport &r, Clock::time_point t0) {
    r.win_rate = rate(r.wins, r.trials);
    r.wilson = wilson(r.wins, r.trials);
    r.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

ttql::KeyPair lightning_setup(ssl::LightningBackend backend, const GameSpec &spec, Rng &rng) {
    if (backend == ssl::LightningBackend::Sis) {
        return ttql::sis_setup(spec.sis, rng);
    }
    ttql::CvParams cv = spec.cv;
    cv.ntcf.backend = backend == ssl::LightningBackend::CvClean ? ntcf::Backend::Clean : ntcf::Backend::Lwe;
    return ttql::cv_setup(cv, rng);
}

ttql::Bolt junk_like(const ttql::Bolt &bolt, Rng &rng) {
    ttql::Bolt junk;
    for (const auto &reg : bolt.registers) {
        qsim::Basis basis = reg.local_basis();
        junk.registers.push_back(
            qsim::Register::own(qsim::StateVector::basis_state(basis, uniform_below(rng, basis.size()))));
    }
    return junk;
}

// Reduction step of the SIS anti-cloning argument: measure both winning states and test x0 - x1.
bool sis_witness(const ttql::SisPublicKey &pk, ttql::Bolt &l0, ttql::Bolt &l1, Rng &rng) {
    qsim::Basis basis = pk.bolt_basis();
    uint32_t q = pk.params().q;
    uint64_t x0 = qsim::measure_register_all(l0.registers[0], rng);
    uint64_t x1 = qsim::measure_register_all(l1.registers[0], rng);
    std::vector<uint32_t> d0(basis.num_digits()), d1(basis.num_digits()), diff(basis.num_digits());
    basis.decode(x0, d0);
    basis.decode(x1, d1);
    for (size_t i = 0; i < diff.size(); i++) {
        diff[i] = (d0[i] + q - d1[i]) % q;
    }
    return lattice::sis_witness_check(pk.matrix(), lattice::ModQVector(q, diff), pk.params().beta);
}

}  // namespace

std::vector<std::string> game_names() {
    return {"tt-unclone", "tt-unclone-cv", "unremovability", "lessor", "lessor-cc"};
}

std::vector<std::string> adversary_names(const std::string &game) {
    if (game == "tt-unclone") {
        return {"honest", "measure-and-copy", "trivial-loser"};
    }
    if (game == "tt-unclone-cv") {
        return {"certify-then-keep", "keep-and-guess", "honest-split", "measure-and-copy"};
    }
    if (game == "unremovability") {
        return {"identity", "proof-strip", "message-swap"};
    }
    if (game == "lessor") {
        return ssl::lessor_adversary_names();
    }
    if (game == "lessor-cc") {
        return ssl::cc_adversary_names();
    }
    fail(ErrorCode::Usage, "unknown game: " + game);
}

GameReport run_game(const GameSpec &spec) {
    if (spec.name == "tt-unclone") {
        return game_tt_unclone(spec);
    }
    if (spec.name == "tt-unclone-cv") {
        return game_tt_unclone_cv(spec);
    }
    if (spec.name == "unremovability") {
        return game_unremovability(spec);
    }
    if (spec.name == "lessor") {
        return game_lessor(spec);
    }
    if (spec.name == "lessor-cc") {
        return game_lessor_cc(spec);
    }
    fail(ErrorCode::Usage, "unknown game: " + spec.name);
}

GameReport game_tt_unclone(const GameSpec &spec) {
    require_adversary("tt-unclone", spec.adversary);
    auto t0 = Clock::now();
    ssl::LightningBackend backend = backend_or(spec, ssl::LightningBackend::Sis);
    GameReport r = start(spec, ssl::backend_name(backend));
    Rng setup(derive_seed(spec.seed, 0));
    ttql::KeyPair kp = lightning_setup(backend, spec, setup);
    const auto *sis = dynamic_cast<const ttql::SisPublicKey *>(kp.pk.get());
    r.flags = {{"full_ok", 0}, {"semi_ok", 0}};
    if (sis != nullptr) {
        r.flags["win_witness"] = 0;
    }

    for (uint64_t i = 0; i < spec.trials; i++) {
        Rng rng(derive_seed(spec.seed, i + 1));
        ttql::Minted minted = kp.pk->boltgen(rng);
        ttql::Bolt l0, l1;
        if (spec.adversary == "honest") {
            l1 = junk_like(minted.bolt, rng);
            l0 = std::move(minted.bolt);
        } else if (spec.adversary == "measure-and-copy") {
            l1 = ttql::measure_and_duplicate(minted.bolt, rng);
            l0 = std::move(minted.bolt);
        } else {
            l0 = junk_like(minted.bolt, rng);
            l1 = junk_like(minted.bolt, rng);
        }
        bool full = kp.sk->full_vrfy(minted.snum, l0, rng);
        bool semi = kp.pk->semi_vrfy(minted.snum, l1, rng);
        r.flags["full_ok"] += full;
        r.flags["semi_ok"] += semi;
        if (full && semi) {
            r.wins++;
            if (sis != nullptr) {
                r.flags["win_witness"] += sis_witness(*sis, l0, l1, rng);
            }
        }
    }
    finish(r, t0);
    return r;
}

GameReport game_tt_unclone_cv(const GameSpec &spec) {
    require_adversary("tt-unclone-cv", spec.adversary);
    auto t0 = Clock::now();
    ssl::LightningBackend backend = backend_or(spec, ssl::LightningBackend::CvClean);
    if (backend == ssl::LightningBackend::Sis) {
        fail(ErrorCode::BackendMismatch, "tt-unclone-cv needs a cv backend");
    }
    GameReport r = start(spec, ssl::backend_name(backend));
    Rng setup(derive_seed(spec.seed, 0));
    ttql::KeyPair kp = lightning_setup(backend, spec, setup);
    const auto &pk = static_cast<const ttql::CvPublicKey &>(*kp.pk);
    const auto &sk = static_cast<const ttql::CvSecretKey &>(*kp.sk);
    r.flags = {{"cert_ok", 0}, {"semi_ok", 0}};
    r.params["reps"] = static_cast<double>(pk.arity());

    for (uint64_t i = 0; i < spec.trials; i++) {
        Rng rng(derive_seed(spec.seed, i + 1));
        ttql::Minted minted = pk.boltgen(rng);
        ttql::Certificate cert;
        ttql::Bolt kept;
        if (spec.adversary == "certify-then-keep") {
            cert = pk.bolt_cert(minted.bolt, rng);
            kept = std::move(minted.bolt);
        } else if (spec.adversary == "keep-and-guess") {
            cert.backend = pk.backend();
            cert.width = pk.width();
            for (size_t j = 0; j < pk.arity(); j++) {
                uint32_t m = static_cast<uint32_t>(uniform_below(rng, 2));
                uint64_t d = 1 + uniform_below(rng, (uint64_t{1} << pk.width()) - 1);
                cert.entries.emplace_back(m, d);
            }
            kept = std::move(minted.bolt);
        } else if (spec.adversary == "honest-split") {
            ttql::Minted other = pk.boltgen(rng);
            cert = pk.bolt_cert(minted.bolt, rng);
            kept = std::move(other.bolt);
        } else {
            kept = ttql::measure_and_duplicate(minted.bolt, rng);
            cert = pk.bolt_cert(minted.bolt, rng);
        }
        bool cert_ok = sk.cert_vrfy(minted.snum, cert);
        bool semi = pk.semi_vrfy(minted.snum, kept, rng);
        r.flags["cert_ok"] += cert_ok;
        r.flags["semi_ok"] += semi;
        r.wins += cert_ok && semi;
    }
    finish(r, t0);
    return r;
}

GameReport game_unremovability(const GameSpec &spec) {
    require_adversary("unremovability", spec.adversary);
    auto t0 = Clock::now();
    GameReport r = start(spec, "watermark");
    r.circuit = watermark::circuit_kind_name(spec.circuit);
    r.params["epsilon"] = spec.threshold;
    Rng setup(derive_seed(spec.seed, 0));
    watermark::WmParams pp = watermark::wm_gen(spec.circuit, setup);
    watermark::CncTable inner = watermark::cnc_table_gen(setup);
    watermark::WmAdversary adversary = watermark::wm_adversary(spec.adversary);
    r.flags = {{"agreement_ok", 0}, {"message_changed", 0}};
    for (uint64_t i = 0; i < spec.trials; i++) {
        Rng rng(derive_seed(spec.seed, i + 1));
        watermark::UnremovabilityOutcome o = watermark::unremovability_game(pp, inner, adversary, spec.threshold, rng);
        r.flags["agreement_ok"] += o.agreement >= spec.threshold;
        r.flags["message_changed"] += o.message_changed;
        r.wins += o.win;
    }
    finish(r, t0);
    return r;
}

namespace {

void tally_lessor(GameReport &r, const ssl::LessorOutcome &o) {
    const ssl::LessorFlags &f = o.flags;
    r.flags["mac_ok"] += f.mac_ok;
    r.flags["full_ok"] += f.full_ok;
    r.flags["semi_ok"] += f.semi_ok;
    r.flags["eval_ok"] += f.eval_ok;
    if (o.win) {
        r.wins++;
        r.flags["win_clone"] += f.clone;
        r.flags["win_mac_forgery"] += f.mac_forgery;
        r.flags["win_mark_removal"] += f.mark_removal;
        r.flags["win_uncovered"] += !(f.clone || f.mac_forgery || f.mark_removal);
    }
}

GameReport lessor_common(const GameSpec &spec, ssl::LightningBackend fallback, ssl::LessorInstance &inst) {
    ssl::LightningBackend backend = backend_or(spec, fallback);
    GameReport r = start(spec, ssl::backend_name(backend));
    r.circuit = watermark::circuit_kind_name(spec.circuit);
    r.variant = spec.variant == ssl::LessorVariant::Perfect ? "perfect" : "average";
    r.params[spec.variant == ssl::LessorVariant::Perfect ? "beta" : "epsilon"] = spec.threshold;
    for (const char *k : {"mac_ok", "full_ok", "semi_ok", "eval_ok", "win_clone", "win_mac_forgery",
                          "win_mark_removal", "win_uncovered"}) {
        r.flags[k] = 0;
    }
    ssl::SslConfig config;
    config.lightning = backend;
    config.circuit = spec.circuit;
    config.sis = spec.sis;
    config.cv = spec.cv;
    Rng setup(derive_seed(spec.seed, 0));
    inst = ssl::make_lessor_instance(config, setup);
    return r;
}

}  // namespace

GameReport game_lessor(const GameSpec &spec) {
    require_adversary("lessor", spec.adversary);
    auto t0 = Clock::now();
    ssl::LessorInstance inst;
    GameReport r = lessor_common(spec, ssl::LightningBackend::Sis, inst);
    ssl::LessorAdversary adversary = ssl::lessor_adversary(spec.adversary);
    for (uint64_t i = 0; i < spec.trials; i++) {
        Rng rng(derive_seed(spec.seed, i + 1));
        tally_lessor(r, ssl::lessor_game(inst, spec.variant, spec.threshold, adversary, rng));
    }
    finish(r, t0);
    return r;
}

GameReport game_lessor_cc(const GameSpec &spec) {
    require_adversary("lessor-cc", spec.adversary);
    if (spec.backend == ssl::LightningBackend::Sis) {
        fail(ErrorCode::BackendMismatch, "lessor-cc needs a cv backend");
    }
    auto t0 = Clock::now();
    ssl::LessorInstance inst;
    GameReport r = lessor_common(spec, ssl::LightningBackend::CvClean, inst);
    for (uint64_t i = 0; i < spec.trials; i++) {
        Rng rng(derive_seed(spec.seed, i + 1));
        std::unique_ptr<ssl::CcAdversary> adversary = ssl::cc_adversary(spec.adversary);
        tally_lessor(r, ssl::lessor_game_cc(inst, spec.variant, spec.threshold, *adversary, rng));
    }
    finish(r, t0);
    return r;
}

}  // namespace qlease::harness
