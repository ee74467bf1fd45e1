// Copyright 2026 The SANS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sans/wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include <json.hpp>

#include "sans/errors.hpp"
#include "sans/hex.hpp"

namespace sans::wire {

using json = nlohmann::json;

namespace {

// --- socket helpers -------------------------------------------------------

struct Fd {
    int fd = -1;
    Fd() = default;
    explicit Fd(int f) : fd(f) {}
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    Fd(Fd&& o) noexcept : fd(o.fd) { o.fd = -1; }
    ~Fd() {
        if (fd >= 0) ::close(fd);
    }
};

bool send_all(int fd, const uint8_t* data, size_t n) {
    size_t done = 0;
    while (done < n) {
        ssize_t w = ::send(fd, data + done, n - done, MSG_NOSIGNAL);
        if (w <= 0) return false;
        done += (size_t)w;
    }
    return true;
}

bool recv_all(int fd, uint8_t* data, size_t n) {
    size_t done = 0;
    while (done < n) {
        ssize_t r = ::recv(fd, data + done, n - done, 0);
        if (r <= 0) return false;
        done += (size_t)r;
    }
    return true;
}

bool send_payload(int fd, const std::string& payload) {
    auto frame = encode_frame(payload);
    return send_all(fd, frame.data(), frame.size());
}

// Returns the payload; empty optional on clean EOF. Throws on protocol
// violations it has already answered (caller closes).
enum class RecvStatus { ok, eof, too_large, short_frame };

RecvStatus recv_payload(int fd, std::string& out) {
    uint8_t len_bytes[4];
    if (!recv_all(fd, len_bytes, 4)) return RecvStatus::eof;
    uint32_t len = ((uint32_t)len_bytes[0] << 24) | ((uint32_t)len_bytes[1] << 16) |
                   ((uint32_t)len_bytes[2] << 8) | (uint32_t)len_bytes[3];
    if (len > kMaxFrameBytes) return RecvStatus::too_large;
    out.resize(len);
    if (!recv_all(fd, (uint8_t*)out.data(), len)) return RecvStatus::short_frame;
    return RecvStatus::ok;
}

Fd connect_to(const std::string& host, uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    std::string port_str = std::to_string(port);
    if (getaddrinfo(host.c_str(), port_str.c_str(), &hints, &res) != 0) {
        throw Error(Errc::transport_error, "cannot resolve " + host);
    }
    Fd fd;
    for (addrinfo* ai = res; ai; ai = ai->ai_next) {
        int s = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (s < 0) continue;
        if (::connect(s, ai->ai_addr, ai->ai_addrlen) == 0) {
            fd.fd = s;
            break;
        }
        ::close(s);
    }
    freeaddrinfo(res);
    if (fd.fd < 0) throw Error(Errc::transport_error, "cannot connect to " + host + ":" + port_str);
    int one = 1;
    setsockopt(fd.fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return fd;
}

// --- json helpers ----------------------------------------------------------

json base_message(const char* type) {
    json m;
    m["type"] = type;
    m["v"] = kProtocolVersion;
    return m;
}

std::string require_string(const json& m, const char* key) {
    if (!m.contains(key) || !m[key].is_string()) {
        throw Error(Errc::bad_encoding, std::string("missing string field ") + key);
    }
    return m[key].get<std::string>();
}

uint64_t require_u64(const json& m, const char* key) {
    if (!m.contains(key) || !m[key].is_number_unsigned()) {
        throw Error(Errc::bad_encoding, std::string("missing unsigned field ") + key);
    }
    return m[key].get<uint64_t>();
}

std::vector<uint8_t> require_hex(const json& m, const char* key, size_t expect_len = 0) {
    auto bytes = from_hex(require_string(m, key));
    if (!bytes) throw Error(Errc::bad_encoding, std::string("field is not lowercase hex: ") + key);
    if (expect_len != 0 && bytes->size() != expect_len) {
        throw Error(Errc::bad_encoding, std::string("wrong length for ") + key);
    }
    return *bytes;
}

std::string exception_code(const Error& e) { return errc_name(e.code()); }

}  // namespace

std::vector<uint8_t> encode_frame(const std::string& payload) {
    if (payload.size() > kMaxFrameBytes) throw Error(Errc::frame_too_large, "payload exceeds 1 MiB");
    std::vector<uint8_t> out;
    out.reserve(4 + payload.size());
    uint32_t len = (uint32_t)payload.size();
    out.push_back((uint8_t)(len >> 24));
    out.push_back((uint8_t)(len >> 16));
    out.push_back((uint8_t)(len >> 8));
    out.push_back((uint8_t)len);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

std::string encode_register_req(std::span<const uint8_t> evidence) {
    json m = base_message("REGISTER_REQ");
    m["evidence"] = to_hex(evidence);
    return m.dump();
}

std::string encode_register_resp(const Credential& cred) {
    json m = base_message("REGISTER_RESP");
    m["token"] = to_hex(cred.token.value.to_bytes());
    m["t_exp"] = t_exp_seconds(cred);
    m["sig"] = to_hex(jubjub::encode_signature(cred.sig));
    m["pk"] = to_hex(jubjub::encode_point(cred.pk_so));
    return m.dump();
}

std::string encode_auth_req(const AuthRequest& req, const Fingerprint& fp) {
    json m = base_message("AUTH_REQ");
    m["proof"] = to_hex(serialize_proof(req.proof, fp));
    m["c"] = req.c_bucket;
    m["t_exp"] = req.t_exp;
    m["pk"] = to_hex(jubjub::encode_point(req.pk_so));
    m["out"] = to_hex(req.out.to_bytes());
    return m.dump();
}

std::string encode_auth_resp(const Decision& decision) {
    json m = base_message("AUTH_RESP");
    m["granted"] = decision.granted;
    if (decision.granted) {
        m["session_id"] = to_hex(decision.session_id);
    } else {
        m["code"] = decision.reason ? deny_reason_code(*decision.reason) : "unknown";
    }
    return m.dump();
}

std::string encode_err(const std::string& code, const std::string& detail) {
    json m = base_message("ERR");
    m["code"] = code;
    m["detail"] = detail;
    return m.dump();
}

ParsedMessage decode_message(const std::string& payload, const Fingerprint& fp) {
    json m = json::parse(payload, nullptr, false);
    if (m.is_discarded() || !m.is_object()) throw Error(Errc::bad_encoding, "payload is not an object");
    if (!m.contains("v") || !m["v"].is_number_unsigned() || m["v"].get<uint64_t>() != kProtocolVersion) {
        throw Error(Errc::unsupported_version, "protocol version");
    }
    ParsedMessage out;
    out.type = require_string(m, "type");

    if (out.type == "REGISTER_REQ") {
        out.evidence = require_hex(m, "evidence");
    } else if (out.type == "REGISTER_RESP") {
        auto token = Fr::from_bytes(require_hex(m, "token", 32));
        auto sig = jubjub::decode_signature(require_hex(m, "sig", 96));
        auto pk = jubjub::decode_point(require_hex(m, "pk", 64));
        if (!token || !sig || !pk) throw Error(Errc::bad_encoding, "non-canonical credential field");
        out.credential = Credential{jubjub::Token{*token}, Fr::from_u64(require_u64(m, "t_exp")), *sig, *pk};
    } else if (out.type == "AUTH_REQ") {
        auto proof_bytes = require_hex(m, "proof");
        auto [proof, proof_fp] = deserialize_proof(proof_bytes, fp);
        auto pk = jubjub::decode_point(require_hex(m, "pk", 64));
        auto out_val = Fr::from_bytes(require_hex(m, "out", 32));
        if (!pk || !out_val) throw Error(Errc::bad_encoding, "non-canonical auth field");
        out.auth_request = AuthRequest{proof, require_u64(m, "c"), *pk, require_u64(m, "t_exp"), *out_val};
    } else if (out.type == "AUTH_RESP") {
        if (!m.contains("granted") || !m["granted"].is_boolean()) {
            throw Error(Errc::bad_encoding, "missing granted flag");
        }
        out.granted = m["granted"].get<bool>();
        if (out.granted) {
            auto sid = require_hex(m, "session_id", 16);
            std::copy(sid.begin(), sid.end(), out.session_id.begin());
        } else {
            out.code = require_string(m, "code");
        }
    } else if (out.type == "ERR") {
        out.code = require_string(m, "code");
        out.detail = require_string(m, "detail");
    } else {
        throw Error(Errc::bad_encoding, "unknown message type " + out.type);
    }
    return out;
}

// --- server -----------------------------------------------------------------

Server::Server(VerifierState& state, const Fingerprint& fp, std::ostream* log)
    : state_(state), fp_(fp), log_(log) {}

Server::~Server() { stop(); }

void Server::start(const std::string& host, uint16_t port) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw Error(Errc::bind_failure, std::strerror(errno));
    int one = 1;
    setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw Error(Errc::bind_failure, "bad bind address " + host);
    }
    if (::bind(listen_fd_, (sockaddr*)&addr, sizeof(addr)) != 0 || ::listen(listen_fd_, 64) != 0) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw Error(Errc::bind_failure, std::strerror(errno));
    }
    socklen_t len = sizeof(addr);
    getsockname(listen_fd_, (sockaddr*)&addr, &len);
    port_ = ntohs(addr.sin_port);
    running_ = true;
    accept_thread_ = std::thread([this] { accept_loop(); });
    if (log_) *log_ << "listening on " << host << ":" << port_ << "\n";
}

void Server::stop() {
    if (!running_.exchange(false)) return;
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    listen_fd_ = -1;
    if (accept_thread_.joinable()) accept_thread_.join();
    std::lock_guard<std::mutex> lock(workers_mu_);
    for (auto& w : workers_) {
        if (w.joinable()) w.join();
    }
    workers_.clear();
}

void Server::accept_loop() {
    while (running_) {
        int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) {
            if (!running_) break;
            continue;
        }
        std::lock_guard<std::mutex> lock(workers_mu_);
        workers_.emplace_back([this, fd] { handle_connection(fd); });
    }
}

void Server::handle_connection(int raw_fd) {
    Fd fd(raw_fd);
    if (log_) *log_ << "connection open\n";
    for (;;) {
        std::string payload;
        RecvStatus status = recv_payload(fd.fd, payload);
        if (status == RecvStatus::eof) break;
        if (status == RecvStatus::too_large) {
            send_payload(fd.fd, encode_err("frame_too_large", "declared length exceeds 1 MiB"));
            break;
        }
        if (status == RecvStatus::short_frame) break;

        std::string reply;
        bool close_after = false;
        try {
            ParsedMessage msg = decode_message(payload, fp_);
            if (msg.type == "REGISTER_REQ") {
                SystemRng rng;
                Credential cred = state_.register_user(msg.evidence, 0, rng);
                reply = encode_register_resp(cred);
                if (log_) *log_ << "register: issued\n";
            } else if (msg.type == "AUTH_REQ") {
                Decision d = state_.authenticate_verify(msg.auth_request, state_.now());
                reply = encode_auth_resp(d);
                if (log_) {
                    *log_ << "auth: " << (d.granted ? "granted" : deny_reason_code(*d.reason)) << "\n";
                }
            } else {
                reply = encode_err("unexpected_type", msg.type);
                close_after = true;
            }
        } catch (const Error& e) {
            reply = encode_err(exception_code(e), "request rejected");
            close_after = true;
            if (log_) *log_ << "error: " << exception_code(e) << "\n";
        } catch (const std::exception&) {
            reply = encode_err("internal", "request rejected");
            close_after = true;
        }
        if (!send_payload(fd.fd, reply) || close_after) break;
    }
    if (log_) *log_ << "connection closed\n";
}

// --- clients ----------------------------------------------------------------

namespace {

std::string roundtrip(const std::string& host, uint16_t port, const std::string& payload) {
    Fd fd = connect_to(host, port);
    if (!send_payload(fd.fd, payload)) throw Error(Errc::transport_error, "send failed");
    std::string reply;
    if (recv_payload(fd.fd, reply) != RecvStatus::ok) {
        throw Error(Errc::transport_error, "connection closed before reply");
    }
    return reply;
}

}  // namespace

Credential client_register(const std::string& host, uint16_t port,
                           std::span<const uint8_t> evidence) {
    std::string reply = roundtrip(host, port, encode_register_req(evidence));
    Fingerprint unused{};
    ParsedMessage msg = decode_message(reply, unused);
    if (msg.type == "ERR") throw Error(Errc::server_rejected, msg.code);
    if (msg.type != "REGISTER_RESP") throw Error(Errc::bad_encoding, "unexpected reply " + msg.type);
    // The user trusts nothing: verify the issued credential locally.
    if (!msg.credential.verify_issuance()) {
        throw Error(Errc::invalid_issued_credential, "operator signature does not verify");
    }
    return msg.credential;
}

AuthOutcome client_authenticate(const std::string& host, uint16_t port, const Credential& cred,
                                const ProvingKey& pk, int64_t now, int threads) {
    SystemRng rng;
    AuthRequest req = authenticate_prove(cred, now, pk, rng, threads);
    return client_send_auth_frame(host, port, encode_auth_req(req, pk.fingerprint), pk.fingerprint);
}

AuthOutcome client_send_auth_frame(const std::string& host, uint16_t port,
                                   const std::string& payload, const Fingerprint& fp) {
    std::string reply = roundtrip(host, port, payload);
    ParsedMessage msg = decode_message(reply, fp);
    if (msg.type == "ERR") return AuthOutcome{false, {}, msg.code};
    if (msg.type != "AUTH_RESP") throw Error(Errc::bad_encoding, "unexpected reply " + msg.type);
    AuthOutcome out;
    out.granted = msg.granted;
    out.session_id = msg.session_id;
    out.code = msg.code;
    return out;
}

}  // namespace sans::wire
