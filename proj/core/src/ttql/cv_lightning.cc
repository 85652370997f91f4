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

#include "qlease/ttql/cv_lightning.h"

#include <cmath>

#include "qlease/common/error.h"

namespace qlease::ttql {

using ntcf::Backend;

Bytes Certificate::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

void Certificate::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(backend)).u32le(static_cast<uint32_t>(entries.size())).u32le(width);
    for (const auto &[m, d] : entries) {
        out.u8(static_cast<uint8_t>(m)).u64le(d);
    }
}

Certificate Certificate::deserialize(ByteReader &in) {
    Certificate c;
    uint8_t tag = in.u8();
    if (tag != static_cast<uint8_t>(Backend::Clean) && tag != static_cast<uint8_t>(Backend::Lwe)) {
        fail(ErrorCode::Decode, "unknown certificate backend");
    }
    c.backend = static_cast<Backend>(tag);
    uint32_t n = in.u32le();
    c.width = in.u32le();
    if (n == 0 || n > 64 || c.width == 0 || c.width > 30) {
        fail(ErrorCode::Decode, "certificate header out of range");
    }
    for (uint32_t i = 0; i < n; i++) {
        uint32_t m = in.u8();
        uint64_t d = in.u64le();
        if (m > 1 || d >= (uint64_t{1} << c.width)) {
            fail(ErrorCode::Decode, "certificate entry out of range");
        }
        c.entries.emplace_back(m, d);
    }
    return c;
}

Certificate Certificate::deserialize(ByteView data) {
    ByteReader in(data);
    Certificate c = deserialize(in);
    in.expect_done();
    return c;
}

CvPublicKey::CvPublicKey(std::vector<ntcf::NtcfKey> keys) : keys_(std::move(keys)) {
    if (keys_.empty() || keys_.size() > 64) {
        fail(ErrorCode::Parameter, "repetition count must be in [1, 64]");
    }
    for (const auto &k : keys_) {
        if (k.backend() != keys_.front().backend() || k.j_width() != keys_.front().j_width()) {
            fail(ErrorCode::Parameter, "repetitions must share backend and J width");
        }
    }
}

const qsim::StateVector &CvPublicKey::sampler(size_t rep) const {
    std::call_once(samplers_once_, [this] {
        for (const auto &k : keys_) {
            samplers_.push_back(ntcf::ntcf_samp(k));
        }
    });
    return samplers_.at(rep);
}

qsim::Basis CvPublicKey::bolt_basis(size_t rep) const {
    return qsim::Basis({qsim::Component::bits(1), keys_.at(rep).x_component()});
}

qsim::Basis CvPublicKey::embedded_basis() const {
    return qsim::Basis({qsim::Component::bits(1), qsim::Component::bits(width())});
}

Bytes CvPublicKey::encode_snum(const std::vector<uint64_t> &ys) const {
    if (ys.size() != keys_.size()) {
        fail(ErrorCode::ArityMismatch, "one image per repetition");
    }
    ByteWriter w;
    w.u32le(static_cast<uint32_t>(ys.size()));
    for (size_t i = 0; i < ys.size(); i++) {
        w.blob(keys_[i].encode_y(ys[i]));
    }
    return w.take();
}

std::vector<uint64_t> CvPublicKey::decode_snum(ByteView snum) const {
    ByteReader in(snum);
    if (in.u32le() != keys_.size()) {
        fail(ErrorCode::Decode, "serial number has the wrong repetition count");
    }
    std::vector<uint64_t> ys;
    for (const auto &k : keys_) {
        Bytes blob = in.blob();
        ys.push_back(k.decode_y(blob));
    }
    in.expect_done();
    return ys;
}

Minted CvPublicKey::boltgen(Rng &rng) const {
    Minted out;
    std::vector<uint64_t> ys;
    for (size_t i = 0; i < keys_.size(); i++) {
        const qsim::StateVector &samp = sampler(i);
        const uint64_t y_size = keys_[i].y_size();
        std::vector<double> y_mass(y_size, 0.0);
        for (uint64_t idx = 0; idx < samp.size(); idx++) {
            y_mass[idx % y_size] += std::norm(samp[idx]);
        }
        uint64_t y = sample_weighted(rng, y_mass);
        qsim::Basis basis = bolt_basis(i);
        std::vector<qsim::Amplitude> amps(basis.size());
        for (uint64_t bx = 0; bx < basis.size(); bx++) {
            amps[bx] = samp[bx * y_size + y];
        }
        qsim::StateVector state(basis, std::move(amps));
        state.normalize();
        out.bolt.registers.push_back(qsim::Register::own(std::move(state)));
        ys.push_back(y);
    }
    out.snum = encode_snum(ys);
    return out;
}

qsim::PredicateFn CvPublicKey::semi_predicate(size_t rep, uint64_t y, const qsim::Basis &layout) const {
    const ntcf::NtcfKey &key = keys_.at(rep);
    if (layout == bolt_basis(rep)) {
        qsim::Basis xb({key.x_component()});
        return [&key, xb, y](qsim::Digits d) { return key.chk(d[0], xb.encode(d.subspan(1)), y); };
    }
    if (layout == embedded_basis()) {
        return [&key, y](qsim::Digits d) {
            uint64_t j = 0;
            for (size_t i = 1; i < d.size(); i++) {
                j = (j << 1) | d[i];
            }
            return j < key.x_size() && key.chk(d[0], j, y);
        };
    }
    return nullptr;
}

bool CvPublicKey::semi_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const {
    std::vector<uint64_t> ys;
    try {
        ys = decode_snum(snum);
    } catch (const Error &) {
        return false;
    }
    if (bolt.registers.size() != keys_.size()) {
        return false;
    }
    for (size_t i = 0; i < keys_.size(); i++) {
        qsim::Register &reg = bolt.registers[i];
        if (reg.empty()) {
            return false;
        }
        qsim::PredicateFn pred = semi_predicate(i, ys[i], reg.local_basis());
        if (!pred || !qsim::measure_register(reg, pred, rng)) {
            return false;
        }
    }
    return true;
}

double CvPublicKey::semi_probability(ByteView snum, const Bolt &bolt) const {
    std::vector<uint64_t> ys;
    try {
        ys = decode_snum(snum);
    } catch (const Error &) {
        return 0;
    }
    if (bolt.registers.size() != keys_.size()) {
        return 0;
    }
    // Registers may share blocks; project sequentially on private copies of each block.
    std::map<const qsim::StateVector *, qsim::StateVector> copies;
    double p = 1;
    for (size_t i = 0; i < keys_.size(); i++) {
        const qsim::Register &reg = bolt.registers[i];
        if (reg.empty()) {
            return 0;
        }
        qsim::PredicateFn pred = semi_predicate(i, ys[i], reg.local_basis());
        if (!pred) {
            return 0;
        }
        qsim::StateVector &st = copies.try_emplace(&reg.block(), reg.block()).first->second;
        qsim::PredicateFn lifted = reg.lift(pred);
        p *= qsim::predicate_probability(st, lifted);
        if (p == 0) {
            return 0;
        }
        qsim::project(st, lifted, true);
    }
    return p;
}

// Puts the register in the (b, J(x)) layout and applies H to both parts.
static void prepare_cert_measurement(const CvPublicKey &pk, size_t rep, qsim::Register &reg) {
    qsim::Basis layout = reg.local_basis();
    if (layout == pk.bolt_basis(rep)) {
        const ntcf::NtcfKey &key = pk.keys()[rep];
        qsim::Basis xb({key.x_component()});
        uint32_t w = pk.width();
        qsim::relabel_register(reg, 1, qsim::Component::bits(w), [xb, w, &key](qsim::Digits d) {
            return ntcf::j_encode(xb.encode(d), key.x_size(), w);
        });
    } else if (!(layout == pk.embedded_basis())) {
        fail(ErrorCode::BasisMismatch, "register layout is not a bolt layout");
    }
    qsim::hadamard_register(reg, 0);
    qsim::hadamard_register(reg, 1);
}

static void check_arity(const CvPublicKey &pk, const Bolt &bolt) {
    if (bolt.registers.size() != pk.arity()) {
        fail(ErrorCode::ArityMismatch, "bolt has the wrong number of registers");
    }
    for (const auto &r : bolt.registers) {
        if (r.empty()) {
            fail(ErrorCode::ArityMismatch, "bolt register is empty");
        }
    }
}

Certificate CvPublicKey::bolt_cert(Bolt &bolt, Rng &rng) const {
    check_arity(*this, bolt);
    Certificate cert;
    cert.backend = backend();
    cert.width = width();
    const uint64_t d_mask = (uint64_t{1} << width()) - 1;
    for (size_t i = 0; i < keys_.size(); i++) {
        qsim::Register &reg = bolt.registers[i];
        prepare_cert_measurement(*this, i, reg);
        uint64_t outcome = qsim::measure_register_all(reg, rng);
        cert.entries.emplace_back(static_cast<uint32_t>(outcome >> width()), outcome & d_mask);
        reg.release();
    }
    return cert;
}

std::map<uint64_t, double> cert_distribution(const CvPublicKey &pk, size_t rep, const qsim::Register &reg) {
    qsim::Register copy = reg.detached_copy();
    prepare_cert_measurement(pk, rep, copy);
    return qsim::register_distribution(copy);
}

void CvPublicKey::serialize_to(ByteWriter &out) const {
    out.u8(static_cast<uint8_t>(Scheme::Cv)).u32le(static_cast<uint32_t>(keys_.size()));
    for (const auto &k : keys_) {
        out.blob(k.serialize());
    }
}

Bytes CvPublicKey::serialize() const {
    ByteWriter w;
    serialize_to(w);
    return w.take();
}

CvSecretKey::CvSecretKey(std::shared_ptr<const CvPublicKey> pk, std::vector<ntcf::NtcfTrapdoor> tds)
    : pk_(std::move(pk)), tds_(std::move(tds)) {
    if (tds_.size() != pk_->arity()) {
        fail(ErrorCode::ArityMismatch, "one trapdoor per repetition");
    }
    for (const auto &td : tds_) {
        if (td.backend() != pk_->backend()) {
            fail(ErrorCode::BackendMismatch, "trapdoor backend does not match");
        }
    }
}

bool CvSecretKey::entry_ok(size_t rep, uint64_t y, uint32_t m, uint64_t d) const {
    const ntcf::NtcfKey &key = pk_->keys().at(rep);
    const uint32_t w = pk_->width();
    if (m > 1 || !ntcf::g_member(d, w)) {
        return false;
    }
    uint64_t x0, x1;
    try {
        x0 = tds_[rep].inv(0, y);
        x1 = tds_[rep].inv(1, y);
    } catch (const Error &) {
        return false;
    }
    uint64_t diff = ntcf::j_encode(x0, key.x_size(), w) ^ ntcf::j_encode(x1, key.x_size(), w);
    return m == ntcf::inner_product_bit(d, diff);
}

bool CvSecretKey::cert_vrfy(ByteView snum, const Certificate &cert) const {
    std::vector<uint64_t> ys;
    try {
        ys = pk_->decode_snum(snum);
    } catch (const Error &) {
        return false;
    }
    if (cert.backend != pk_->backend() || cert.width != pk_->width() || cert.entries.size() != ys.size()) {
        return false;
    }
    for (size_t i = 0; i < ys.size(); i++) {
        if (!entry_ok(i, ys[i], cert.entries[i].first, cert.entries[i].second)) {
            return false;
        }
    }
    return true;
}

bool CvSecretKey::full_vrfy(ByteView snum, Bolt &bolt, Rng &rng) const {
    Certificate cert;
    try {
        cert = pk_->bolt_cert(bolt, rng);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BasisMismatch) {
            throw;
        }
        for (auto &r : bolt.registers) {
            r.release();
        }
        return false;
    }
    return cert_vrfy(snum, cert);
}

double CvSecretKey::full_probability(ByteView snum, const Bolt &bolt) const {
    check_arity(*pk_, bolt);
    std::vector<uint64_t> ys;
    try {
        ys = pk_->decode_snum(snum);
    } catch (const Error &) {
        return 0;
    }
    for (size_t i = 0; i < bolt.registers.size(); i++) {
        for (size_t j = 0; j < i; j++) {
            if (&bolt.registers[i].block() == &bolt.registers[j].block()) {
                fail(ErrorCode::Parameter, "exact certificate probability needs independent registers");
            }
        }
    }
    const uint32_t w = pk_->width();
    const uint64_t d_mask = (uint64_t{1} << w) - 1;
    double p = 1;
    for (size_t i = 0; i < ys.size(); i++) {
        std::map<uint64_t, double> dist;
        try {
            dist = cert_distribution(*pk_, i, bolt.registers[i]);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BasisMismatch) {
                throw;
            }
            return 0;
        }
        double pi = 0;
        for (const auto &[outcome, q] : dist) {
            if (entry_ok(i, ys[i], static_cast<uint32_t>(outcome >> w), outcome & d_mask)) {
                pi += q;
            }
        }
        p *= pi;
    }
    return p;
}

Bytes CvSecretKey::serialize() const {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(Scheme::Cv)).u32le(static_cast<uint32_t>(tds_.size()));
    for (const auto &td : tds_) {
        ByteWriter b;
        td.serialize_to(b);
        w.blob(b.bytes());
    }
    return w.take();
}

std::shared_ptr<CvSecretKey> CvSecretKey::deserialize(ByteReader &in, std::shared_ptr<const CvPublicKey> pk) {
    uint32_t n = in.u32le();
    if (n != pk->arity()) {
        fail(ErrorCode::Decode, "trapdoor count does not match the public key");
    }
    std::vector<ntcf::NtcfTrapdoor> tds;
    for (uint32_t i = 0; i < n; i++) {
        Bytes blob = in.blob();
        ByteReader tin(blob);
        tds.push_back(ntcf::NtcfTrapdoor::deserialize(tin, pk->keys()[i]));
        tin.expect_done();
    }
    return std::make_shared<CvSecretKey>(std::move(pk), std::move(tds));
}

KeyPair cv_setup(const CvParams &params, Rng &rng) {
    if (params.reps == 0 || params.reps > 64) {
        fail(ErrorCode::Parameter, "repetition count must be in [1, 64]");
    }
    std::vector<ntcf::NtcfKey> keys;
    std::vector<ntcf::NtcfTrapdoor> tds;
    for (uint32_t i = 0; i < params.reps; i++) {
        ntcf::NtcfPair pair = ntcf::ntcf_gen(params.ntcf, rng);
        keys.push_back(std::move(pair.key));
        tds.push_back(std::move(pair.td));
    }
    auto pk = std::make_shared<CvPublicKey>(std::move(keys));
    auto sk = std::make_shared<CvSecretKey>(pk, std::move(tds));
    return {pk, sk};
}

}  // namespace qlease::ttql
