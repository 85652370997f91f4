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

#include "qlease/wire/transport.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>

#include "qlease/common/error.h"

namespace qlease::wire {

Bytes recv_exact(Transport &t, size_t n) {
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        Bytes chunk = t.recv_some(n - out.size());
        if (chunk.empty()) {
            fail(ErrorCode::Transport, "stream closed after " + std::to_string(out.size()) + " of " +
                                           std::to_string(n) + " bytes");
        }
        out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
}

void send_frame(Transport &t, const Frame &frame) {
    t.send(encode_frame(frame));
}

Bytes recv_frame_bytes(Transport &t) {
    Bytes header = recv_exact(t, kHeaderSize);
    uint32_t size = frame_payload_size(header);
    Bytes payload = recv_exact(t, size);
    header.insert(header.end(), payload.begin(), payload.end());
    return header;
}

Frame recv_frame(Transport &t) {
    return decode_frame(recv_frame_bytes(t));
}

namespace {

struct Pipe {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<uint8_t> data;
    bool closed = false;
};

class PipeEnd final : public Transport {
   public:
    PipeEnd(std::shared_ptr<Pipe> in, std::shared_ptr<Pipe> out) : in_(std::move(in)), out_(std::move(out)) {
    }
    ~PipeEnd() override {
        close();
    }

    void send(ByteView data) override {
        std::lock_guard<std::mutex> lock(out_->mu);
        if (out_->closed) {
            fail(ErrorCode::Transport, "peer closed the channel");
        }
        out_->data.insert(out_->data.end(), data.begin(), data.end());
        out_->cv.notify_all();
    }

    Bytes recv_some(size_t max) override {
        std::unique_lock<std::mutex> lock(in_->mu);
        in_->cv.wait(lock, [&] { return !in_->data.empty() || in_->closed; });
        size_t n = std::min(max, in_->data.size());
        Bytes out(in_->data.begin(), in_->data.begin() + static_cast<std::ptrdiff_t>(n));
        in_->data.erase(in_->data.begin(), in_->data.begin() + static_cast<std::ptrdiff_t>(n));
        return out;
    }

    void close() override {
        for (auto *p : {in_.get(), out_.get()}) {
            std::lock_guard<std::mutex> lock(p->mu);
            p->closed = true;
            p->cv.notify_all();
        }
    }

   private:
    std::shared_ptr<Pipe> in_;
    std::shared_ptr<Pipe> out_;
};

[[noreturn]] void sys_fail(const std::string &what) {
    fail(ErrorCode::Transport, what + ": " + std::strerror(errno));
}

addrinfo *resolve(const std::string &endpoint, bool passive) {
    auto [host, port] = parse_endpoint(endpoint);
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = passive ? AI_PASSIVE : 0;
    addrinfo *res = nullptr;
    std::string port_s = std::to_string(port);
    int rc = getaddrinfo(host.empty() ? nullptr : host.c_str(), port_s.c_str(), &hints, &res);
    if (rc != 0) {
        fail(ErrorCode::Transport, "cannot resolve " + endpoint + ": " + gai_strerror(rc));
    }
    return res;
}

}  // namespace

std::pair<std::unique_ptr<Transport>, std::unique_ptr<Transport>> in_process_pair() {
    auto a = std::make_shared<Pipe>();
    auto b = std::make_shared<Pipe>();
    return {std::make_unique<PipeEnd>(a, b), std::make_unique<PipeEnd>(b, a)};
}

std::pair<std::string, uint16_t> parse_endpoint(const std::string &endpoint) {
    size_t colon = endpoint.rfind(':');
    if (colon == std::string::npos || colon + 1 == endpoint.size()) {
        fail(ErrorCode::Usage, "expected host:port, got '" + endpoint + "'");
    }
    std::string host = endpoint.substr(0, colon);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
        host = host.substr(1, host.size() - 2);
    }
    unsigned long port = 0;
    try {
        size_t used = 0;
        port = std::stoul(endpoint.substr(colon + 1), &used);
        if (used != endpoint.size() - colon - 1) {
            throw std::invalid_argument("port");
        }
    } catch (const std::exception &) {
        fail(ErrorCode::Usage, "bad port in '" + endpoint + "'");
    }
    if (port > 65535) {
        fail(ErrorCode::Usage, "port out of range in '" + endpoint + "'");
    }
    return {host, static_cast<uint16_t>(port)};
}

TcpTransport::~TcpTransport() {
    close();
}

std::unique_ptr<TcpTransport> TcpTransport::connect(const std::string &endpoint) {
    addrinfo *res = resolve(endpoint, false);
    int fd = -1;
    int err = 0;
    for (addrinfo *ai = res; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            err = errno;
            continue;
        }
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
            break;
        }
        err = errno;
        ::close(fd);
        fd = -1;
    }
    freeaddrinfo(res);
    if (fd < 0) {
        errno = err;
        sys_fail("cannot connect to " + endpoint);
    }
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return std::make_unique<TcpTransport>(fd);
}

void TcpTransport::send(ByteView data) {
    size_t sent = 0;
    while (sent < data.size()) {
        ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            sys_fail("send");
        }
        sent += static_cast<size_t>(n);
    }
}

Bytes TcpTransport::recv_some(size_t max) {
    Bytes buf(std::min<size_t>(max, 1 << 16));
    for (;;) {
        ssize_t n = ::recv(fd_, buf.data(), buf.size(), 0);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            if (errno == ECONNRESET) {
                return {};
            }
            sys_fail("recv");
        }
        buf.resize(static_cast<size_t>(n));
        return buf;
    }
}

void TcpTransport::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
}

TcpListener::TcpListener(const std::string &endpoint) {
    addrinfo *res = resolve(endpoint, true);
    int err = 0;
    for (addrinfo *ai = res; ai != nullptr; ai = ai->ai_next) {
        fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd_ < 0) {
            err = errno;
            continue;
        }
        int one = 1;
        ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        if (::bind(fd_, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd_, 16) == 0) {
            break;
        }
        err = errno;
        ::close(fd_);
        fd_ = -1;
    }
    freeaddrinfo(res);
    if (fd_ < 0) {
        errno = err;
        sys_fail("cannot listen on " + endpoint);
    }
    sockaddr_storage addr{};
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr *>(&addr), &len);
    if (addr.ss_family == AF_INET) {
        port_ = ntohs(reinterpret_cast<sockaddr_in *>(&addr)->sin_port);
    } else {
        port_ = ntohs(reinterpret_cast<sockaddr_in6 *>(&addr)->sin6_port);
    }
}

TcpListener::~TcpListener() {
    close();
}

std::unique_ptr<TcpTransport> TcpListener::accept() {
    for (;;) {
        int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            int one = 1;
            ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
            return std::make_unique<TcpTransport>(fd);
        }
        if (errno != EINTR) {
            sys_fail("accept");
        }
    }
}

void TcpListener::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
}

}  // namespace qlease::wire
