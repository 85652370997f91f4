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

#include "qlease/wire/service.h"

#include <list>
#include <thread>

#include "qlease/common/error.h"
#include "qlease/ssl/lessor_game.h"
#include "qlease/ttql/cv_lightning.h"

namespace qlease::wire {

CircuitCatalog default_catalog(const ssl::SslCrs &crs, uint64_t seed, uint32_t count) {
    Rng rng(seed);
    CircuitCatalog catalog;
    watermark::CncTable inner = watermark::cnc_table_gen(rng);
    for (uint32_t id = 1; id <= count; id++) {
        if (crs.variant == watermark::CircuitKind::Prf) {
            catalog[id] = watermark::prf_circuit(primitives::prf_gen(rng, 10));
        } else {
            uint32_t alpha = static_cast<uint32_t>(uniform_below(rng, uint64_t{1} << inner.out_bits));
            catalog[id] = watermark::cnc_circuit(inner, alpha);
        }
    }
    return catalog;
}

const char *phase_name(Phase p) {
    switch (p) {
        case Phase::AwaitObligation:
            return "await-obligation";
        case Phase::AwaitReturn:
            return "await-return";
        case Phase::Closed:
            return "closed";
    }
    return "?";
}

WireError wire_error_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::FrameTooLarge:
            return WireError::FrameTooLarge;
        case ErrorCode::BadVersion:
            return WireError::BadVersion;
        case ErrorCode::BadType:
            return WireError::BadType;
        case ErrorCode::Truncated:
            return WireError::Truncated;
        case ErrorCode::BackendMismatch:
            return WireError::BackendMismatch;
        case ErrorCode::Decode:
        case ErrorCode::Protocol:
        case ErrorCode::MalformedSoftware:
        case ErrorCode::ArityMismatch:
        case ErrorCode::Domain:
            return WireError::Malformed;
        default:
            return WireError::Internal;
    }
}

LessorSession::LessorSession(const ssl::SslSecretKey &sk, const CircuitCatalog &catalog, uint64_t seed, uint64_t id)
    : sk_(sk), catalog_(catalog), header_(scheme_header(*sk.lightning.pk)), rng_(derive_seed(seed, id)) {
    state_.id = id;
}

Frame LessorSession::error(WireError code, const std::string &detail) {
    state_.phase = Phase::Closed;
    return ErrorMsg{code, detail}.to_frame();
}

Frame LessorSession::handle_bytes(ByteView bytes) noexcept {
    try {
        return handle(decode_frame(bytes));
    } catch (const Error &e) {
        return error(wire_error_for(e.code()), e.what());
    } catch (const std::exception &e) {
        return error(WireError::Internal, e.what());
    }
}

Frame LessorSession::handle(const Frame &frame) noexcept {
    try {
        if (frame.type == MsgType::Obligation && state_.phase == Phase::AwaitObligation) {
            return on_obligation(frame);
        }
        if (frame.type == MsgType::ReturnCert && state_.phase == Phase::AwaitReturn) {
            return on_return(frame);
        }
        return error(WireError::ProtocolOrder,
                     std::string(msg_type_name(frame.type)) + " frame in phase " + phase_name(state_.phase));
    } catch (const Error &e) {
        return error(wire_error_for(e.code()), e.what());
    } catch (const std::exception &e) {
        return error(WireError::Internal, e.what());
    }
}

Frame LessorSession::on_obligation(const Frame &frame) {
    ObligationMsg msg = ObligationMsg::from_frame(frame);
    if (msg.header != header_) {
        return error(WireError::BackendMismatch, "obligation header does not match this lessor");
    }
    auto it = catalog_.find(msg.circuit_id);
    if (it == catalog_.end()) {
        return error(WireError::UnknownCircuit, "no circuit with id " + std::to_string(msg.circuit_id));
    }
    // Shape check before any signing work.
    static_cast<const ttql::CvPublicKey &>(*sk_.lightning.pk).decode_snum(msg.snum);
    ssl::Answer answer = ssl::cc_lessor(sk_, ssl::Obligation{msg.snum}, it->second, rng_);
    state_.snum = msg.snum;
    state_.circuit_id = msg.circuit_id;
    state_.phase = Phase::AwaitReturn;
    return AnswerMsg{header_, answer.classical}.to_frame();
}

Frame LessorSession::on_return(const Frame &frame) {
    ReturnCertMsg msg = ReturnCertMsg::from_frame(frame);
    if (msg.header != header_) {
        return error(WireError::BackendMismatch, "certificate header does not match this lessor");
    }
    // The returned lease must be the one issued in this session.
    std::optional<Bytes> snum = ssl::extracted_snum(sk_.pp, msg.cert.classical);
    bool ok = snum && *snum == state_.snum && ssl::cc_certvrfy(sk_, msg.cert);
    state_.phase = Phase::Closed;
    return CheckResultMsg{ok}.to_frame();
}

void serve_connection(Transport &t, LessorSession &session) {
    try {
        while (!session.closed()) {
            Bytes bytes;
            try {
                bytes = recv_frame_bytes(t);
            } catch (const Error &e) {
                if (e.code() == ErrorCode::Transport) {
                    break;
                }
                // Header-level damage: the stream cannot be resynchronized.
                send_frame(t, ErrorMsg{wire_error_for(e.code()), e.what()}.to_frame());
                break;
            }
            send_frame(t, session.handle_bytes(bytes));
        }
    } catch (const std::exception &) {
        // Peer went away while we were answering.
    }
    t.close();
}

void lessor_serve(const ssl::SslSecretKey &sk, TcpListener &listener, const CircuitCatalog &catalog, uint64_t seed,
                  size_t max_sessions) {
    std::list<std::thread> workers;
    for (uint64_t id = 0; max_sessions == 0 || id < max_sessions; id++) {
        std::unique_ptr<TcpTransport> conn;
        try {
            conn = listener.accept();
        } catch (const Error &) {
            break;
        }
        workers.emplace_back([&sk, &catalog, seed, id, conn = std::move(conn)]() mutable {
            try {
                LessorSession session(sk, catalog, seed, id);
                serve_connection(*conn, session);
            } catch (const std::exception &) {
                conn->close();
            }
        });
    }
    for (auto &w : workers) {
        w.join();
    }
}

namespace {

Frame expect_reply(Transport &t, MsgType type) {
    Frame f = recv_frame(t);
    if (f.type == MsgType::Error) {
        ErrorMsg e = ErrorMsg::from_frame(f);
        fail(ErrorCode::Protocol, std::string("lessor error ") + wire_error_name(e.code) + ": " + e.detail);
    }
    expect_type(f, type);
    return f;
}

}  // namespace

ssl::LeasedSoftware lessee_client(ByteView ssl_pk, Transport &t, uint32_t circuit_id, Rng &rng) {
    auto [obligation, state] = ssl::cc_lessee1(ssl_pk, rng);
    SchemeHeader header = scheme_header(*ttql::PublicKey::deserialize_cached(ssl_pk));
    send_frame(t, ObligationMsg{header, circuit_id, obligation.snum}.to_frame());
    AnswerMsg answer = AnswerMsg::from_frame(expect_reply(t, MsgType::Answer));
    if (answer.header != header) {
        fail(ErrorCode::Protocol, "answer header does not match the obligation");
    }
    return ssl::cc_lessee2(std::move(state), ssl::Answer{answer.classical});
}

bool lessee_return(Transport &t, const ssl::SslCrs &crs, ssl::LeasedSoftware &sft, Rng &rng) {
    ssl::ReturnCert cert = ssl::cc_sslcert(crs, sft, rng);
    SchemeHeader header;
    header.backend =
        cert.cert.backend == ntcf::Backend::Clean ? ssl::LightningBackend::CvClean : ssl::LightningBackend::CvLwe;
    header.reps = static_cast<uint32_t>(cert.cert.entries.size());
    header.width = cert.cert.width;
    send_frame(t, ReturnCertMsg{header, std::move(cert)}.to_frame());
    return CheckResultMsg::from_frame(expect_reply(t, MsgType::CheckResult)).accepted;
}

void RecordingTransport::record(bool sent, ByteView data) {
    if (data.empty()) {
        return;
    }
    if (log_.empty() || log_.back().sent != sent) {
        log_.push_back(Entry{sent, {}});
    }
    log_.back().bytes.insert(log_.back().bytes.end(), data.begin(), data.end());
}

void RecordingTransport::send(ByteView data) {
    inner_.send(data);
    record(true, data);
}

Bytes RecordingTransport::recv_some(size_t max) {
    Bytes b = inner_.recv_some(max);
    record(false, b);
    return b;
}

std::string format_transcript(const std::vector<RecordingTransport::Entry> &entries) {
    std::string out;
    for (const auto &e : entries) {
        out += e.sent ? "> " : "< ";
        out += to_hex(e.bytes);
        out += '\n';
    }
    return out;
}

}  // namespace qlease::wire
