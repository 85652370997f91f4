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

#include "qlease/lattice/trapdoor.h"

#include <bit>
#include <string>

#include "qlease/common/error.h"
#include "qlease/lattice/gaussian.h"

namespace qlease::lattice {

void SisParams::validate() const {
    if (n < 1 || m < 1) {
        fail(ErrorCode::Parameter, "n and m must be positive");
    }
    if (!is_odd_prime(q)) {
        fail(ErrorCode::Parameter, "q must be an odd prime");
    }
    if (h < 1) {
        fail(ErrorCode::Parameter, "h must be at least 1");
    }
    if (!(beta > 0) || !(2 * beta < q)) {
        fail(ErrorCode::Parameter, "beta must satisfy 0 < beta < q/2");
    }
    if (!(s_beta > 0) || !(s_alpha > 0) || !(bound_alpha >= 1)) {
        fail(ErrorCode::Parameter, "gaussian widths must be positive and bound_alpha >= 1");
    }
    if (r < 1 || r >= m) {
        fail(ErrorCode::Parameter, "need 1 <= r < m");
    }
    if (n > m - r) {
        fail(ErrorCode::Parameter, "annihilator of V is too small for n rows");
    }
}

SisParams SisParams::tiny(uint32_t r) {
    SisParams p;
    p.n = 1;
    p.m = 3;
    p.q = 31;
    p.beta = 15;
    p.s_beta = 6;
    p.h = 3;
    p.r = r;
    return p;
}

static void put_double(ByteWriter &out, double v) {
    out.u64le(std::bit_cast<uint64_t>(v));
}

static double get_double(ByteReader &in) {
    return std::bit_cast<double>(in.u64le());
}

void SisParams::serialize_to(ByteWriter &out) const {
    out.u32le(n).u32le(m).u32le(q);
    put_double(out, beta);
    put_double(out, s_beta);
    out.u32le(h).u32le(r);
    put_double(out, s_alpha);
    put_double(out, bound_alpha);
}

SisParams SisParams::deserialize(ByteReader &in) {
    SisParams p;
    p.n = in.u32le();
    p.m = in.u32le();
    p.q = in.u32le();
    p.beta = get_double(in);
    p.s_beta = get_double(in);
    p.h = in.u32le();
    p.r = in.u32le();
    p.s_alpha = get_double(in);
    p.bound_alpha = get_double(in);
    try {
        p.validate();
    } catch (const Error &e) {
        fail(ErrorCode::Decode, e.what());
    }
    return p;
}

void SisTrapdoor::serialize_to(ByteWriter &out) const {
    out.u32le(static_cast<uint32_t>(columns.size()));
    put_double(out, s_alpha);
    for (const auto &c : columns) {
        c.serialize_to(out);
    }
}

SisTrapdoor SisTrapdoor::deserialize(ByteReader &in) {
    SisTrapdoor td;
    uint32_t r = in.u32le();
    td.s_alpha = get_double(in);
    if (r > in.remaining()) {
        fail(ErrorCode::Decode, "trapdoor truncated");
    }
    for (uint32_t i = 0; i < r; i++) {
        td.columns.push_back(ModQVector::deserialize(in));
    }
    return td;
}

bool within_half_beta(int64_t norm_sq, double beta) {
    return 4.0 * static_cast<double>(norm_sq) <= beta * beta;
}

static ModQVector sample_short_column(const SisParams &p, Rng &rng) {
    double bound_sq = p.bound_alpha * p.bound_alpha;
    while (true) {
        ModQVector v = gaussian_sample(p.s_alpha, p.m, p.q, rng);
        if (!v.is_zero() && static_cast<double>(v.norm_sq()) <= bound_sq) {
            return v;
        }
    }
}

TrapGenResult trapgen(const SisParams &params, Rng &rng) {
    params.validate();
    const uint32_t q = params.q;
    for (uint32_t attempt = 0; attempt < params.max_retries; attempt++) {
        SisTrapdoor td;
        td.s_alpha = params.s_alpha;
        ModQMatrix vt = ModQMatrix::zero(params.r, params.m, q);
        for (uint32_t i = 0; i < params.r; i++) {
            td.columns.push_back(sample_short_column(params, rng));
            for (uint32_t j = 0; j < params.m; j++) {
                vt.set(i, j, td.columns.back()[j]);
            }
        }
        if (vt.rank() < params.r) {
            continue;
        }
        // Rows of A live in ker(V^T); each is a uniform combination of a kernel basis.
        std::vector<ModQVector> basis = vt.kernel_basis();
        ModQMatrix a = ModQMatrix::zero(params.n, params.m, q);
        for (uint32_t row = 0; row < params.n; row++) {
            ModQVector acc = ModQVector::zero(q, params.m);
            for (const auto &b : basis) {
                acc = acc + b.scaled(static_cast<uint32_t>(uniform_below(rng, q)));
            }
            for (uint32_t j = 0; j < params.m; j++) {
                a.set(row, j, acc[j]);
            }
        }
        if (a.rank() == params.n) {
            return {std::move(a), std::move(td)};
        }
    }
    fail(ErrorCode::Parameter, "no full-rank A after " + std::to_string(params.max_retries) + " retries");
}

bool sis_witness_check(const ModQMatrix &a, const ModQVector &s, double beta) {
    if (s.dim() != a.cols() || s.modulus() != a.modulus()) {
        fail(ErrorCode::DimensionMismatch, "witness shape does not match A");
    }
    if (s.is_zero()) {
        return false;
    }
    if (!a.mul(s).is_zero()) {
        return false;
    }
    return static_cast<double>(s.norm_sq()) <= beta * beta;
}

}  // namespace qlease::lattice
