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

#include <fstream>
#include <sstream>
#include <thread>

#include "gtest/gtest.h"
#include "qlease/common/error.h"
#include "qlease/harness/acceptance.h"
#include "qlease/ssl/ssl_cc.h"
#include "qlease/wire/frame.h"
#include "qlease/wire/messages.h"
#include "qlease/wire/service.h"
#include "qlease/wire/transport.h"

using namespace qlease;
using namespace qlease::wire;

namespace {

struct Lessor {
    ssl::SslCrs crs;
    ssl::SslSecretKey sk;
    CircuitCatalog catalog;
};

const Lessor &lessor() {
    static const Lessor l = [] {
        Rng rng(60);
        ssl::SslConfig config;
        config.lightning = ssl::LightningBackend::CvClean;
        Lessor out;
        out.crs = ssl::ssl_setup(config, rng);
        out.sk = ssl::ssl_gen(out.crs, config, rng);
        out.catalog = default_catalog(out.crs, 61);
        return out;
    }();
    return l;
}

template <typename F>
void expect_code(ErrorCode code, F &&f) {
    try {
        f();
        ADD_FAILURE() << "no exception";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

WireError error_code_of(const Frame &f) {
    EXPECT_EQ(f.type, MsgType::Error);
    return ErrorMsg::from_frame(f).code;
}

// One valid frame of each type, produced by an honest run.
std::map<MsgType, Frame> sample_frames() {
    const Lessor &l = lessor();
    Rng rng(62);
    SchemeHeader h = scheme_header(*l.sk.lightning.pk);
    auto [ob, state] = ssl::cc_lessee1(ssl::ssl_public_key(l.sk), rng);
    ssl::Answer ans = ssl::cc_lessor(l.sk, ob, l.catalog.at(1), rng);
    ssl::LeasedSoftware sft = ssl::cc_lessee2(std::move(state), ans);
    ssl::ReturnCert cert = ssl::cc_sslcert(l.crs, sft, rng);
    return {
        {MsgType::Obligation, ObligationMsg{h, 1, ob.snum}.to_frame()},
        {MsgType::Answer, AnswerMsg{h, ans.classical}.to_frame()},
        {MsgType::ReturnCert, ReturnCertMsg{h, cert}.to_frame()},
        {MsgType::CheckResult, CheckResultMsg{true}.to_frame()},
        {MsgType::Error, ErrorMsg{WireError::Malformed, "x"}.to_frame()},
    };
}

}  // namespace

TEST(frame, roundtrip) {
    Rng rng(63);
    for (int i = 0; i < 1000; i++) {
        Frame f{static_cast<MsgType>(1 + uniform_below(rng, 5)), random_bytes(rng, uniform_below(rng, 600))};
        Bytes enc = encode_frame(f);
        ASSERT_EQ(enc.size(), kHeaderSize + f.payload.size());
        ASSERT_EQ(frame_payload_size(ByteView(enc).subspan(0, kHeaderSize)), f.payload.size());
        ASSERT_EQ(decode_frame(enc), f);
    }
}

TEST(frame, header_errors) {
    Bytes enc = encode_frame(Frame{MsgType::Answer, Bytes{1, 2, 3}});
    expect_code(ErrorCode::Truncated, [&] { decode_frame(ByteView(enc).subspan(0, enc.size() - 1)); });
    expect_code(ErrorCode::Truncated, [&] { decode_frame(ByteView(enc).subspan(0, 3)); });
    Bytes longer = enc;
    longer.push_back(0);
    expect_code(ErrorCode::Decode, [&] { decode_frame(longer); });
    Bytes version = enc;
    version[4] = kWireVersion + 1;
    expect_code(ErrorCode::BadVersion, [&] { decode_frame(version); });
    for (uint8_t t : {0, 6, 255}) {
        Bytes type = enc;
        type[5] = t;
        expect_code(ErrorCode::BadType, [&] { decode_frame(type); });
    }
    Bytes huge = {0x7f, 0xff, 0xff, 0xff, kWireVersion, 1};
    expect_code(ErrorCode::FrameTooLarge, [&] { frame_payload_size(huge); });
    expect_code(ErrorCode::FrameTooLarge, [&] { encode_frame(Frame{MsgType::Answer, Bytes(kMaxPayload + 1)}); });
    Bytes shorty = {0, 0, 0, 1, kWireVersion, 1};
    EXPECT_THROW(frame_payload_size(shorty), Error);
}

TEST(messages, roundtrip_and_type_check) {
    auto frames = sample_frames();
    ObligationMsg ob = ObligationMsg::from_frame(frames[MsgType::Obligation]);
    EXPECT_EQ(ob.to_frame(), frames[MsgType::Obligation]);
    EXPECT_EQ(AnswerMsg::from_frame(frames[MsgType::Answer]).to_frame(), frames[MsgType::Answer]);
    EXPECT_EQ(ReturnCertMsg::from_frame(frames[MsgType::ReturnCert]).to_frame(), frames[MsgType::ReturnCert]);
    EXPECT_TRUE(CheckResultMsg::from_frame(frames[MsgType::CheckResult]).accepted);
    EXPECT_EQ(ErrorMsg::from_frame(frames[MsgType::Error]).detail, "x");
    expect_code(ErrorCode::Protocol, [&] { AnswerMsg::from_frame(frames[MsgType::Obligation]); });
    Frame cut = frames[MsgType::Answer];
    cut.payload.pop_back();
    EXPECT_THROW(AnswerMsg::from_frame(cut), Error);
    Rng rng(64);
    ssl::SslConfig sis;
    ssl::SslSecretKey sk = ssl::ssl_gen(ssl::ssl_setup(sis, rng), sis, rng);
    expect_code(ErrorCode::BackendMismatch, [&] { scheme_header(*sk.lightning.pk); });
    expect_code(ErrorCode::BackendMismatch, [&] { LessorSession(sk, lessor().catalog, 1); });
}

TEST(session, phase_machine_is_exhaustive) {
    const Lessor &l = lessor();
    auto frames = sample_frames();
    for (Phase start : {Phase::AwaitObligation, Phase::AwaitReturn}) {
        for (const auto &[type, frame] : frames) {
            LessorSession s(l.sk, l.catalog, 65);
            if (start == Phase::AwaitReturn) {
                ASSERT_EQ(s.handle(frames[MsgType::Obligation]).type, MsgType::Answer);
            }
            ASSERT_EQ(s.state().phase, start);
            Frame reply = s.handle(frame);
            bool legal = (start == Phase::AwaitObligation && type == MsgType::Obligation) ||
                         (start == Phase::AwaitReturn && type == MsgType::ReturnCert);
            if (!legal) {
                EXPECT_EQ(error_code_of(reply), WireError::ProtocolOrder);
                EXPECT_TRUE(s.closed());
            } else if (type == MsgType::Obligation) {
                EXPECT_EQ(reply.type, MsgType::Answer);
                EXPECT_EQ(s.state().phase, Phase::AwaitReturn);
            } else {
                // The sample certificate certifies the serial this session just answered.
                EXPECT_EQ(reply.type, MsgType::CheckResult);
                EXPECT_TRUE(CheckResultMsg::from_frame(reply).accepted);
                EXPECT_TRUE(s.closed());
            }
            // A closed session answers everything with ProtocolOrder.
            if (s.closed()) {
                EXPECT_EQ(error_code_of(s.handle(frames[MsgType::Obligation])), WireError::ProtocolOrder);
            }
        }
    }
}

TEST(session, replayed_obligation_and_unknown_circuit) {
    const Lessor &l = lessor();
    auto frames = sample_frames();
    LessorSession s(l.sk, l.catalog, 66);
    EXPECT_EQ(s.handle(frames[MsgType::Obligation]).type, MsgType::Answer);
    EXPECT_EQ(error_code_of(s.handle(frames[MsgType::Obligation])), WireError::ProtocolOrder);

    ObligationMsg ob = ObligationMsg::from_frame(frames[MsgType::Obligation]);
    ob.circuit_id = 99;
    LessorSession u(l.sk, l.catalog, 67);
    EXPECT_EQ(error_code_of(u.handle(ob.to_frame())), WireError::UnknownCircuit);
    EXPECT_TRUE(u.closed());

    // A valid certificate for a serial issued elsewhere is refused.
    Rng rng(76);
    auto [other, state] = ssl::cc_lessee1(ssl::ssl_public_key(l.sk), rng);
    ASSERT_NE(other.snum, ob.snum);
    ssl::Answer ans = ssl::cc_lessor(l.sk, other, l.catalog.at(1), rng);
    ssl::LeasedSoftware sft = ssl::cc_lessee2(std::move(state), ans);
    ssl::ReturnCert cert = ssl::cc_sslcert(l.crs, sft, rng);
    ASSERT_TRUE(ssl::cc_certvrfy(l.sk, cert));
    LessorSession w(l.sk, l.catalog, 77);
    ASSERT_EQ(w.handle(frames[MsgType::Obligation]).type, MsgType::Answer);
    Frame verdict = w.handle(ReturnCertMsg{scheme_header(*l.sk.lightning.pk), cert}.to_frame());
    EXPECT_FALSE(CheckResultMsg::from_frame(verdict).accepted);

    LessorSession b(l.sk, l.catalog, 68);
    EXPECT_EQ(error_code_of(b.handle_bytes(Bytes{1, 2, 3})), WireError::Truncated);
}

TEST(session, in_process_lease_run_return) {
    const Lessor &l = lessor();
    auto [client, server] = in_process_pair();
    std::thread t([&, srv = server.get()] {
        LessorSession s(l.sk, l.catalog, 69);
        serve_connection(*srv, s);
    });
    Rng rng(70);
    ssl::LeasedSoftware sft = lessee_client(ssl::ssl_public_key(l.sk), *client, 2, rng);
    const watermark::Circuit &c = l.catalog.at(2);
    for (uint64_t x = 0; x < 1024; x += 11) {
        std::optional<Bytes> y = ssl::ssl_run(l.crs, sft, x, rng);
        ASSERT_TRUE(y.has_value());
        ASSERT_EQ(*y, c.evaluate(x));
    }
    bool accepted = lessee_return(*client, l.crs, sft, rng);
    EXPECT_TRUE(accepted);
    expect_code(ErrorCode::BoltConsumed, [&] { lessee_return(*client, l.crs, sft, rng); });
    client->close();
    t.join();
}

TEST(session, server_hangup_is_a_transport_error) {
    const Lessor &l = lessor();
    auto [client, server] = in_process_pair();
    std::thread t([srv = server.get()] {
        recv_frame(*srv);
        srv->close();
    });
    Rng rng(71);
    expect_code(ErrorCode::Transport, [&] { lessee_client(ssl::ssl_public_key(l.sk), *client, 1, rng); });
    t.join();
    expect_code(ErrorCode::Transport, [&] { recv_exact(*client, 1); });
}

TEST(session, error_frame_surfaces_as_protocol_error) {
    const Lessor &l = lessor();
    auto [client, server] = in_process_pair();
    std::thread t([&, srv = server.get()] {
        LessorSession s(l.sk, l.catalog, 72);
        serve_connection(*srv, s);
    });
    Rng rng(73);
    expect_code(ErrorCode::Protocol, [&] { lessee_client(ssl::ssl_public_key(l.sk), *client, 42, rng); });
    client->close();
    t.join();
}

TEST(transcript, matches_golden_file) {
    std::ifstream in(std::string(QLEASE_FIXTURE_DIR) + "/golden_transcript.txt");
    ASSERT_TRUE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string t = harness::golden_session_transcript(2026);
    EXPECT_EQ(t, buf.str());
    EXPECT_EQ(t.substr(t.size() - 11), "= accepted\n");
}

TEST(tcp, lease_over_loopback) {
    const Lessor &l = lessor();
    TcpListener listener("127.0.0.1:0");
    ASSERT_NE(listener.port(), 0);
    std::thread t([&] { lessor_serve(l.sk, listener, l.catalog, 74, 1); });
    Rng rng(75);
    auto conn = TcpTransport::connect("127.0.0.1:" + std::to_string(listener.port()));
    ssl::LeasedSoftware sft = lessee_client(ssl::ssl_public_key(l.sk), *conn, 3, rng);
    EXPECT_TRUE(ssl::ssl_run(l.crs, sft, 7, rng).has_value());
    EXPECT_TRUE(lessee_return(*conn, l.crs, sft, rng));
    conn->close();
    t.join();
}

TEST(tcp, endpoint_parsing) {
    EXPECT_EQ(parse_endpoint("127.0.0.1:8080"), std::make_pair(std::string("127.0.0.1"), uint16_t{8080}));
    // An empty host means "any address" when listening.
    EXPECT_EQ(parse_endpoint(":12").first, "");
    for (const char *bad : {"nohost", "host:", "h:99999", "h:x"}) {
        expect_code(ErrorCode::Usage, [&] { parse_endpoint(bad); });
    }
}
