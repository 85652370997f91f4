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

#ifndef QLEASE_WIRE_TRANSPORT_H
#define QLEASE_WIRE_TRANSPORT_H

#include <memory>
#include <string>
#include <utility>

#include "qlease/wire/frame.h"

namespace qlease::wire {

/// A reliable byte stream. Failures throw Error(Transport).
class Transport {
   public:
    virtual ~Transport() = default;
    virtual void send(ByteView data) = 0;
    /// Up to `max` bytes; empty means the peer closed the stream.
    virtual Bytes recv_some(size_t max) = 0;
    virtual void close() = 0;
};

/// Reads exactly n bytes; Transport error if the stream ends first.
Bytes recv_exact(Transport &t, size_t n);

void send_frame(Transport &t, const Frame &frame);
/// Raw bytes of the next frame (header and payload). Header problems throw the frame errors;
/// the stream is unusable afterwards.
Bytes recv_frame_bytes(Transport &t);
Frame recv_frame(Transport &t);

/// Two connected in-process endpoints.
std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> in_process_pair();

/// Splits "host:port"; Usage error if malformed.
std::pair<std::string, uint16_t> parse_endpoint(const std::string &endpoint);

class TcpTransport final : public Transport {
   public:
    explicit TcpTransport(int fd) : fd_(fd) {
    }
    ~TcpTransport() override;
    TcpTransport(const TcpTransport &) = delete;
    TcpTransport &operator=(const TcpTransport &) = delete;

    static std::unique_ptr<TcpTransport> connect(const std::string &endpoint);

    void send(ByteView data) override;
    Bytes recv_some(size_t max) override;
    void close() override;

   private:
    int fd_;
};

class TcpListener {
   public:
    /// Port 0 picks an ephemeral port; see port().
    explicit TcpListener(const std::string &endpoint);
    ~TcpListener();
    TcpListener(const TcpListener &) = delete;
    TcpListener &operator=(const TcpListener &) = delete;

    uint16_t port() const {
        return port_;
    }
    std::unique_ptr<TcpTransport> accept();
    void close();

   private:
    int fd_ = -1;
    uint16_t port_ = 0;
};

}  // namespace qlease::wire

#endif
