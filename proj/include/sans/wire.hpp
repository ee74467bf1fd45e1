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
//
// Byte-stream wire protocol: 4-byte big-endian length, then one message in
// canonical JSON (sorted keys, no insignificant whitespace, lowercase hex
// for binary fields). Every message carries "type" and "v" (version 1).
// Nothing secret ever crosses this interface: the private witness fields
// appear in no message schema.

#ifndef SANS_WIRE_HPP_
#define SANS_WIRE_HPP_

#include <atomic>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "sans/protocol.hpp"
#include "sans/serialization.hpp"

namespace sans::wire {

inline constexpr uint32_t kMaxFrameBytes = 1024 * 1024;
inline constexpr int kProtocolVersion = 1;

// Frame codec over raw byte buffers (the transport-independent part).
std::vector<uint8_t> encode_frame(const std::string& payload);

// Message encoders/decoders. Decoders throw Error(bad_encoding) on
// non-canonical or incomplete messages.
std::string encode_register_req(std::span<const uint8_t> evidence);
std::string encode_register_resp(const Credential& cred);
std::string encode_auth_req(const AuthRequest& req, const Fingerprint& fp);
std::string encode_auth_resp(const Decision& decision);
std::string encode_err(const std::string& code, const std::string& detail);

struct ParsedMessage {
    std::string type;
    std::vector<uint8_t> evidence;           // REGISTER_REQ
    Credential credential;                   // REGISTER_RESP
    AuthRequest auth_request;                // AUTH_REQ
    bool granted = false;                    // AUTH_RESP
    std::string code;                        // AUTH_RESP / ERR
    std::string detail;                      // ERR
    SessionId session_id{};                  // AUTH_RESP
};

ParsedMessage decode_message(const std::string& payload, const Fingerprint& fp);

// The slice-operator daemon. Handles REGISTER_REQ via register_user and
// AUTH_REQ via authenticate_verify, one request-response pair per frame.
// Per-connection failures never take the daemon down.
class Server {
  public:
    // The log stream sees connection lifecycle and decision codes only;
    // tokens, signatures and evidence are never written to it.
    Server(VerifierState& state, const Fingerprint& fp, std::ostream* log = nullptr);
    ~Server();

    // Binds and spawns the accept loop. Throws Error(bind_failure).
    // port 0 picks an ephemeral port; see port().
    void start(const std::string& host, uint16_t port);
    void stop();
    uint16_t port() const { return port_; }

  private:
    void accept_loop();
    void handle_connection(int fd);

    VerifierState& state_;
    Fingerprint fp_;
    std::ostream* log_;
    int listen_fd_ = -1;
    uint16_t port_ = 0;
    std::atomic<bool> running_{false};
    std::thread accept_thread_;
    std::mutex workers_mu_;
    std::vector<std::thread> workers_;
};

// Client side of service registration: sends evidence, decodes the issued
// credential and verifies the operator signature locally before accepting.
// Throws Error(transport_error / server_rejected / invalid_issued_credential).
Credential client_register(const std::string& host, uint16_t port,
                           std::span<const uint8_t> evidence);

struct AuthOutcome {
    bool granted = false;
    SessionId session_id{};
    std::string code;  // decision code when rejected
};

// Client side of session authentication: proves with the local clock and
// returns the server decision. Throws Error(transport_error).
AuthOutcome client_authenticate(const std::string& host, uint16_t port, const Credential& cred,
                                const ProvingKey& pk, int64_t now, int threads = 1);

// Sends pre-encoded AUTH_REQ bytes verbatim; the replay-attack tests use
// this to re-present captured frames.
AuthOutcome client_send_auth_frame(const std::string& host, uint16_t port,
                                   const std::string& payload, const Fingerprint& fp);

}  // namespace sans::wire

#endif  // SANS_WIRE_HPP_
