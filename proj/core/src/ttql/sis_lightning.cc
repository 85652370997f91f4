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

#include "qlease/ttql/sis_lightning.h"

#include <cmath>

#include "qlease/common/error.h"
#include "qlease/lattice/gaussian.h"
#include "qlease/qsim/fourier.h"

namespace qlease::ttql {

using lattice::ModQMatrix;
using lattice::ModQVector;

SisPublicKey::SisPublicKey(lattice::SisParams params, ModQMatrix a) : params_(params), a_(std::move(a)) {
    params_.validate();
    if (a_.rows() != params_.n || a_.cols() != params_.m || a_.modulus() != params_.q) {
        fail(ErrorCode::DimensionMismatch, "matrix shape does not match the parameters");
    }
    (void)bolt_basis();
}

qsim::Basis SisPublicKey::bolt_basis() const {
    return qsim::Basis::residues(params_.q, params_.m);
}

const SisPublicKey::Cache &SisPublicKey::cache() const {
    std::call_once(cache_once_, [this] {
        auto c = std::make_unique<Cache>();
        qsim::Basis basis = bolt_basis();
        const uint32_t q = params_.q;
        const size_t m = params_.m;
        const size_t n = params_.n;
        uint64_t y_count = 1;
        for (size_t i = 0; i < n; i++) {
            y_count *= q;
        }
        c->weights.resize(basis.size());
        c->is_short.resize(basis.size());
        c->y_index.resize(basis.size());
        c->y_mass.assign(y_count, 0.0);
        std::vector<uint32_t> digits(m, 0);
        double total = 0;
        for (uint64_t idx = 0; idx < basis.size(); idx++) {
            int64_t norm_sq = 0;
            for (uint32_t d : digits) {
                int64_t z = lattice::center(d, q);
                norm_sq += z * z;
            }
            double w = 0;
            c->is_short[idx] = lattice::within_half_beta(norm_sq, params_.beta);
            if (c->is_short[idx]) {
                w = std::exp(-M_PI * static_cast<double>(norm_sq) / (params_.s_beta * params_.s_beta));
            }
            uint64_t y = 0;
            for (size_t r = 0; r < n; r++) {
                uint64_t acc = 0;
                for (size_t j = 0; j < m; j++) {
                    acc += uint64_t{a_.at(r, j)} * digits[j];
                }
                y = y * q + acc % q;
            }
            c->weights[idx] = w;
            c->y_index[idx] = static_cast<uint32_t>(y);
            c->y_mass[y] += w;
            total += w;
            qsim::next_label(basis, digits);
        }
        for (double &p : c->y_mass) {
            p /= total;
        }
        cache_ = std::move(c);
    });
    return *cache_;
}

Minted SisPublicKey::boltgen(Rng &rng) const {
    const Cache &c = cache();
    uint64_t y = sample_weighted(rng, c.y_mass);
    qsim::Basis basis = bolt_basis();
    std::vector<qsim::Amplitude> amps(basis.size());
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (c.y_index[i] == y) {
            amps[i] = std::sqrt(c.weights[i]);
        }
    }
    qsim::StateVector state(basis, std::move(amps));
    state.normalize();

    std::vector<uint32_t> ye(params_.n);
    for (size_t i = params_.n; i-- > 0;) {
        ye[i] = static_cast<uint32_t>(y % params_.q);
        y /= params_.q;
    }
    Minted out;
    out.snum = ModQVector(params_.q, std::move(ye)).serialize();
    out.bolt.registers.push_back(qsim::Register::own(std::move(state)));
    return out;
}

bool SisPublicKey::decode_snum(ByteView snum, ModQVector &y) const {
    try {
        y = ModQVector::deserialize(snum);
    } catch (const Error &) {
        return false;
    }
    return y.dim() == params_.n && y.modulus() == params_.q;
}

qsim::PredicateFn SisPublicKey::semi_predicate(const ModQVector &y) const {
    return [a = a_, y, beta = params_.beta](qsim::Digits x) {
        const uint32_t q = a.modulus();
        for (size_t r = 0; r < a.rows(); r++) {
            uint64_t acc = 0;
            for (size_t j = 0; j < a.cols(); j++) {
                acc += uint64_t{a.at(r, j)} * x[j];
            }
            if (acc % q != y[r]) {
                return false;
            }
        }
        int64_t norm_sq = 0;
        for (uint32_t d : x) {
            int64_t z = lattice::center(d, q);
            norm_sq += z * z;
        }
        return lattice::within_half_beta(norm_sq, beta);
    };
}

static bool well_formed(const Bolt &bolt, const qsim::Basis &basis) {
    return bolt.registers.size() == 1 && !bolt.registers[0].empty() &&
           bolt.registers[0].local_basis() == basis;
}

bool SisPublicKey::native_layout(const qsim::Register &reg) const {
    return reg.owns_whole_block() && reg.components().size() == 1 && reg.components()[0] == 0 &&
           reg.block().basis() == bolt_basis();
}

uint64_t SisPublicKey::y_index(const ModQVector &y) const {
    uint64_t out = 0;
    for (size_t r = 0; r < y.dim(); r++) {
        out = out * params_.q + y[r];
    }
    return out;
}

bool SisPublicKey::semi_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const {
    ModQVector y;
    if (!decode_snum(snum, y) || !well_formed(bolt, bolt_basis())) {
        return false;
    }
    qsim::Register &reg = bolt.registers[0];
    if (native_layout(reg)) {
        uint64_t yi = y_index(y);
        return qsim::measure_where(reg.block(), [&](uint64_t i) { return semi_index(i, yi); }, rng);
    }
    return qsim::measure_register(reg, semi_predicate(y), rng);
}

double SisPublicKey::semi_probability(ByteView snum, const Bolt &bolt) const {
    ModQVector y;
    if (!decode_snum(snum, y) || !well_formed(bolt, bolt_basis())) {
        return 0;
    }
    const qsim::Register &reg = bolt.registers[0];
    if (native_layout(reg)) {
        uint64_t yi = y_index(y);
        return qsim::mass_where(reg.block(), [&](uint64_t i) { return semi_index(i, yi); }) / reg.block().norm_sq();
    }
    return qsim::register_probability(reg, semi_predicate(y));
}

void SisPublicKey::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(Scheme::Sis));
    params_.serialize_to(out);
    a_.serialize_to(out);
}

Bytes SisPublicKey::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

SisSecretKey::SisSecretKey(std::shared_ptr<const SisPublicKey> pk, lattice::SisTrapdoor td)
    : pk_(std::move(pk)), td_(std::move(td)) {
    if (td_.columns.empty()) {
        fail(ErrorCode::Parameter, "trapdoor has no columns");
    }
    for (const auto &v : td_.columns) {
        if (v.dim() != pk_->params().m || v.modulus() != pk_->params().q || !pk_->matrix().mul(v).is_zero()) {
            fail(ErrorCode::Parameter, "trapdoor column is not in the kernel of A");
        }
    }
}

qsim::PredicateFn SisSecretKey::dual_predicate(const ModQVector &v) const {
    return [v, h = static_cast<int64_t>(pk_->params().h)](qsim::Digits w) {
        uint64_t acc = 0;
        for (size_t j = 0; j < v.dim(); j++) {
            acc += uint64_t{v[j]} * w[j];
        }
        int64_t c = lattice::center(static_cast<uint32_t>(acc % v.modulus()), v.modulus());
        return std::llabs(c) < h;
    };
}

const std::vector<std::vector<uint8_t>> &SisSecretKey::dual_tables() const {
    std::call_once(dual_once_, [this] {
        qsim::Basis basis = pk_->bolt_basis();
        std::vector<uint32_t> digits(basis.num_digits(), 0);
        std::vector<qsim::PredicateFn> preds;
        for (const auto &v : td_.columns) {
            preds.push_back(dual_predicate(v));
            dual_tables_.emplace_back(basis.size());
        }
        for (uint64_t idx = 0; idx < basis.size(); idx++) {
            for (size_t j = 0; j < preds.size(); j++) {
                dual_tables_[j][idx] = preds[j](digits);
            }
            qsim::next_label(basis, digits);
        }
    });
    return dual_tables_;
}

bool SisSecretKey::full_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const {
    if (!pk_->semi_vrfy(snum, bolt, rng)) {
        return false;
    }
    qsim::Register &reg = bolt.registers[0];
    bool native = pk_->native_layout(reg);
    qsim::qft_register(reg, 0);
    bool pass = true;
    for (size_t j = 0; j < td_.columns.size() && pass; j++) {
        if (native) {
            const auto &table = dual_tables()[j];
            pass = qsim::measure_where(reg.block(), [&](uint64_t i) { return table[i] != 0; }, rng);
        } else {
            pass = qsim::measure_register(reg, dual_predicate(td_.columns[j]), rng);
        }
    }
    qsim::qft_register(reg, 0, true);
    return pass;
}

double SisSecretKey::full_probability(ByteView snum, const Bolt &bolt) const {
    double p = pk_->semi_probability(snum, bolt);
    if (p == 0) {
        return 0;
    }
    ModQVector y;
    pk_->decode_snum(snum, y);
    qsim::Register copy = bolt.registers[0].detached_copy();
    if (pk_->native_layout(copy)) {
        uint64_t yi = pk_->y_index(y);
        qsim::project_where(copy.block(), [&](uint64_t i) { return pk_->semi_index(i, yi); }, true);
        qsim::qft_register(copy, 0);
        for (const auto &table : dual_tables()) {
            auto pred = [&](uint64_t i) { return table[i] != 0; };
            p *= qsim::mass_where(copy.block(), pred) / copy.block().norm_sq();
            if (p == 0) {
                return 0;
            }
            qsim::project_where(copy.block(), pred, true);
        }
        return p;
    }
    qsim::project(copy.block(), copy.lift(pk_->semi_predicate(y)), true);
    qsim::qft_register(copy, 0);
    for (const auto &v : td_.columns) {
        qsim::PredicateFn pred = copy.lift(dual_predicate(v));
        double pv = qsim::predicate_probability(copy.block(), pred);
        p *= pv;
        if (p == 0) {
            return 0;
        }
        qsim::project(copy.block(), pred, true);
    }
    return p;
}

Bytes SisSecretKey::serialize() const {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(Scheme::Sis));
    td_.serialize_to(w);
    return w.take();
}

std::shared_ptr<SisSecretKey> SisSecretKey::deserialize(ByteReader &in, std::shared_ptr<const SisPublicKey> pk) {
    lattice::SisTrapdoor td = lattice::SisTrapdoor::deserialize(in);
    try {
        return std::make_shared<SisSecretKey>(std::move(pk), std::move(td));
    } catch (const Error &e) {
        fail(ErrorCode::Decode, e.what());
    }
}

KeyPair sis_setup(const lattice::SisParams &params, Rng &rng) {
    params.validate();
    lattice::TrapGenResult tg = lattice::trapgen(params, rng);
    auto pk = std::make_shared<SisPublicKey>(params, std::move(tg.a));
    auto sk = std::make_shared<SisSecretKey>(pk, std::move(tg.td));
    return {pk, sk};
}

}  // namespace qlease::ttql
