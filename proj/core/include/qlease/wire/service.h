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

#ifndef QLEASE_WIRE_SERVICE_H
#define QLEASE_WIRE_SERVICE_H

#include <cstdint>
#include <map>

#include "qlease/ssl/ssl_cc.h"
#include "qlease/wire/messages.h"
#include "qlease/wire/transport.h"

namespace qlease::wire {

using CircuitCatalog = std::map<uint32_t, watermark::Circuit>;

/// Circuits 1..count of the crs variant, drawn from `seed`.
CircuitCatalog default_catalog(const ssl::SslCrs &crs, uint64_t seed, uint32_t count = 4);

enum class Phase { AwaitObligation, AwaitReturn, Closed };

const char *phase_name(Phase p);

struct SessionState {
    uint64_t id = 0;
    Phase phase = Phase::AwaitObligation;
    Bytes snum;
    uint32_t circuit_id = 0;
};

/// Lessor side of one lease. Every input frame gets exactly one response frame; errors close it.
class LessorSession {
   public:
    /// BackendMismatch unless the key has classical-verification lightning.
    LessorSession(const ssl::SslSecretKey &sk, const CircuitCatalog &catalog, uint64_t seed, uint64_t id = 0);

    Frame handle_bytes(ByteView frame) noexcept;
    Frame handle(const Frame &frame) noexcept;

    const SessionState &state() const {
        return state_;
    }
    bool closed() const {
        return state_.phase == Phase::Closed;
    }

   private:
    Frame on_obligation(const Frame &frame);
    Frame on_return(const Frame &frame);
    Frame error(WireError code, const std::string &detail);

    const ssl::SslSecretKey &sk_;
    const CircuitCatalog &catalog_;
    SchemeHeader header_;
    Rng rng_;
    SessionState state_;
};

WireError wire_error_for(ErrorCode code);

/// Drives one connection until the session closes or the peer leaves. Never throws.
void serve_connection(Transport &t, LessorSession &session);

/// Accepts connections and serves each on its own thread. Session i uses derive_seed(seed, i).
/// Returns after `max_sessions` sessions have finished (0 = run until the listener fails).
void lessor_serve(const ssl::SslSecretKey &sk, TcpListener &listener, const CircuitCatalog &catalog, uint64_t seed,
                  size_t max_sessions = 0);

/// Lessee_1 and Lessee_2 over a transport. Throws Protocol on error frames or unexpected replies.
ssl::LeasedSoftware lessee_client(ByteView ssl_pk, Transport &t, uint32_t circuit_id, Rng &rng);

/// Certifies the bolt and sends it back; returns the lessor's verdict. BoltConsumed (nothing sent)
/// when the bolt was already returned.
bool lessee_return(Transport &t, const ssl::SslCrs &crs, ssl::LeasedSoftware &sft, Rng &rng);

/// Passes traffic through and keeps a copy: one entry per direction change.
class RecordingTransport final : public Transport {
   public:
    struct Entry {
        bool sent;
        Bytes bytes;
    };

    explicit RecordingTransport(Transport &inner) : inner_(inner) {
    }
    void send(ByteView data) override;
    Bytes recv_some(size_t max) override;
    void close() override {
        inner_.close();
    }
    const std::vector<Entry> &transcript() const {
        return log_;
    }

   private:
    void record(bool sent, ByteView data);
    Transport &inner_;
    std::vector<Entry> log_;
};

/// One line per entry: "> hex" for sent bytes, "< hex" for received bytes.
std::string format_transcript(const std::vector<RecordingTransport::Entry> &entries);

}  // namespace qlease::wire

#endif
