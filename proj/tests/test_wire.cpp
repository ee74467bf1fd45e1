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

#include <doctest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <sstream>
#include <thread>

#include "sans/errors.hpp"
#include "sans/wire.hpp"
#include "test_util.hpp"

using namespace sans;
using namespace sans::wire;

namespace {

struct WireFixture {
    const AuthCircuit& circuit = auth_circuit();
    ProvingArtifacts arts;
    jubjub::SigningKeypair op_key;
    SystemRng rng;

    WireFixture() {
        arts = groth16_setup(circuit.cs, rng, 2);
        TestRng seed_rng(888);
        op_key = jubjub::keygen(seed_rng.bytes32());
    }

    static WireFixture& get() {
        static WireFixture f;
        return f;
    }
};

// Minimal scripted server: accepts one connection, reads one frame, replies
// with a fixed payload. Used for fault injection against the client.
uint16_t one_shot_server(std::string reply_payload, std::thread& out_thread) {
    int listen_fd = ::socket(AF_INET, SOCK_STREAM, 0);
    REQUIRE_GE(listen_fd, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    REQUIRE_EQ(::bind(listen_fd, (sockaddr*)&addr, sizeof(addr)), 0);
    REQUIRE_EQ(::listen(listen_fd, 1), 0);
    socklen_t len = sizeof(addr);
    getsockname(listen_fd, (sockaddr*)&addr, &len);
    uint16_t port = ntohs(addr.sin_port);
    out_thread = std::thread([listen_fd, reply = std::move(reply_payload)] {
        int fd = ::accept(listen_fd, nullptr, nullptr);
        if (fd >= 0) {
            uint8_t buf[4096];
            (void)::recv(fd, buf, sizeof(buf), 0);
            auto frame = encode_frame(reply);
            (void)::send(fd, frame.data(), frame.size(), MSG_NOSIGNAL);
            ::close(fd);
        }
        ::close(listen_fd);
    });
    return port;
}

}  // namespace

TEST_SUITE_BEGIN("wire");

TEST_CASE("canonical encoding roundtrip, byte-exact") {
    auto& f = WireFixture::get();
    Credential cred = test::make_credential(40);
    SystemRng rng;
    AuthRequest req = authenticate_prove(cred, 1750000000, f.arts.pk, rng, 2);

    for (const std::string& payload : {
             encode_register_req(std::vector<uint8_t>{1, 2, 3}),
             encode_register_resp(cred),
             encode_auth_req(req, f.circuit.fingerprint),
             encode_err("frame_too_large", "declared length exceeds 1 MiB"),
         }) {
        ParsedMessage msg = decode_message(payload, f.circuit.fingerprint);
        std::string re;
        if (msg.type == "REGISTER_REQ") re = encode_register_req(msg.evidence);
        if (msg.type == "REGISTER_RESP") re = encode_register_resp(msg.credential);
        if (msg.type == "AUTH_REQ") re = encode_auth_req(msg.auth_request, f.circuit.fingerprint);
        if (msg.type == "ERR") re = encode_err(msg.code, msg.detail);
        CHECK_EQ(re, payload);
        // canonical: sorted keys, compact separators
        nlohmann::json parsed = nlohmann::json::parse(payload);
        CHECK_EQ(parsed.dump(), payload);
    }
}

TEST_CASE("auth request reconstructs the exact public-input vector") {
    auto& f = WireFixture::get();
    Credential cred = test::make_credential(41);
    SystemRng rng;
    AuthRequest req = authenticate_prove(cred, 1750000123, f.arts.pk, rng, 2);
    std::string payload = encode_auth_req(req, f.circuit.fingerprint);
    ParsedMessage msg = decode_message(payload, f.circuit.fingerprint);
    auto pub = msg.auth_request.public_inputs();
    auto expect = req.public_inputs();
    for (size_t i = 0; i < pub.size(); ++i) CHECK_EQ(pub[i], expect[i]);
}

TEST_CASE("version mismatch is rejected") {
    auto& f = WireFixture::get();
    std::string payload = encode_register_req(std::vector<uint8_t>{});
    // bump v
    auto pos = payload.find("\"v\":1");
    REQUIRE_NE(pos, std::string::npos);
    payload.replace(pos, 5, "\"v\":2");
    CHECK_THROWS_WITH_AS(decode_message(payload, f.circuit.fingerprint),
                         doctest::Contains("unsupported_version"), Error);
}

TEST_CASE("uppercase hex is not canonical") {
    auto& f = WireFixture::get();
    std::string payload = encode_register_req(std::vector<uint8_t>{0xab});
    auto pos = payload.find("\"evidence\":\"ab\"");
    REQUIRE_NE(pos, std::string::npos);
    payload.replace(pos, 16, "\"evidence\":\"AB\"");
    CHECK_THROWS_AS(decode_message(payload, f.circuit.fingerprint), Error);
}

TEST_CASE("frame length bound") {
    std::string big(kMaxFrameBytes + 1, 'x');
    CHECK_THROWS_WITH_AS(encode_frame(big), doctest::Contains("frame_too_large"), Error);
    std::string ok_payload = "{}";
    auto frame = encode_frame(ok_payload);
    CHECK_EQ(frame.size(), 4 + 2);
    CHECK_EQ(frame[3], 2);  // big-endian length
}

TEST_CASE("register-authenticate roundtrip over TCP") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, preshared_secret_policy({0xde, 0xad}),
                        [] { return (int64_t)1750000000; });
    std::ostringstream log;
    Server server(state, f.circuit.fingerprint, &log);
    server.start("127.0.0.1", 0);

    std::vector<uint8_t> evidence{0xde, 0xad};
    Credential cred = client_register("127.0.0.1", server.port(), evidence);
    CHECK(cred.verify_issuance());

    auto outcome = client_authenticate("127.0.0.1", server.port(), cred, f.arts.pk, 1750000000, 2);
    CHECK(outcome.granted);

    // wrong evidence refused
    std::vector<uint8_t> bad{1};
    CHECK_THROWS_WITH_AS(client_register("127.0.0.1", server.port(), bad),
                         doctest::Contains("server_rejected"), Error);

    server.stop();

    // the log never contains credential material
    std::string logged = log.str();
    CHECK_EQ(logged.find(to_hex(cred.token.value.to_bytes())), std::string::npos);
    CHECK_EQ(logged.find(to_hex(jubjub::encode_signature(cred.sig))), std::string::npos);
    CHECK_EQ(logged.find(to_hex(evidence)), std::string::npos);
    CHECK_NE(logged.find("auth: granted"), std::string::npos);
}

TEST_CASE("replayed frame bytes are rejected on the wire") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);

    Credential cred = client_register("127.0.0.1", server.port(), {});
    SystemRng rng;
    AuthRequest req = authenticate_prove(cred, 1750000000, f.arts.pk, rng, 2);
    std::string captured = encode_auth_req(req, f.circuit.fingerprint);

    auto first = client_send_auth_frame("127.0.0.1", server.port(), captured, f.circuit.fingerprint);
    CHECK(first.granted);
    auto second = client_send_auth_frame("127.0.0.1", server.port(), captured, f.circuit.fingerprint);
    CHECK_FALSE(second.granted);
    CHECK_EQ(second.code, "replay_detected");
    server.stop();
}

TEST_CASE("oversized frame answered and connection closed") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);

    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(server.port());
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    REQUIRE_EQ(::connect(fd, (sockaddr*)&addr, sizeof(addr)), 0);
    // declared length of 2 MiB; body intentionally not sent
    uint8_t header[4] = {0x00, 0x20, 0x00, 0x00};
    REQUIRE(::send(fd, header, 4, MSG_NOSIGNAL) == 4);
    uint8_t reply[4096];
    ssize_t n = ::recv(fd, reply, sizeof(reply), 0);
    REQUIRE_GT(n, 4);
    std::string payload((char*)reply + 4, (size_t)(n - 4));
    CHECK_NE(payload.find("frame_too_large"), std::string::npos);
    // connection closed after the error
    n = ::recv(fd, reply, sizeof(reply), 0);
    CHECK_EQ(n, 0);
    ::close(fd);
    server.stop();
}

TEST_CASE("authentication transcript never carries credential secrets") {
    auto& f = WireFixture::get();
    Credential cred = test::make_credential(43);
    SystemRng rng;
    AuthRequest req = authenticate_prove(cred, 1750000000, f.arts.pk, rng, 2);
    std::string auth_frame = encode_auth_req(req, f.circuit.fingerprint);
    Decision granted;
    granted.granted = true;
    granted.session_id = SessionId{1, 2, 3};
    std::string resp_frame = encode_auth_resp(granted);

    std::string token_hex = to_hex(cred.token.value.to_bytes());
    std::string sig_hex = to_hex(jubjub::encode_signature(cred.sig));
    std::string r_hex = to_hex(jubjub::encode_point(cred.sig.r));
    for (const std::string& frame : {auth_frame, resp_frame}) {
        CHECK_EQ(frame.find(token_hex), std::string::npos);
        CHECK_EQ(frame.find(sig_hex), std::string::npos);
        CHECK_EQ(frame.find(r_hex), std::string::npos);
    }
}

TEST_CASE("server closes on a foreign protocol version") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);
    auto outcome = client_send_auth_frame("127.0.0.1", server.port(),
                                          R"({"evidence":"","type":"REGISTER_REQ","v":2})",
                                          f.circuit.fingerprint);
    CHECK_FALSE(outcome.granted);
    CHECK_EQ(outcome.code, "unsupported_version");
    server.stop();
}

TEST_CASE("malformed json answered with ERR") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);

    auto outcome = client_send_auth_frame("127.0.0.1", server.port(), "{not json",
                                          f.circuit.fingerprint);
    CHECK_FALSE(outcome.granted);
    CHECK_EQ(outcome.code, "bad_encoding");
    server.stop();
}

TEST_CASE("tampered issuance is caught by the client") {
    auto& f = WireFixture::get();
    Credential cred = test::make_credential(42);
    // break the signature before handing it to the client
    Credential tampered = cred;
    tampered.sig.s = tampered.sig.s + jubjub::Scalar::from_u64(1);
    std::thread server_thread;
    uint16_t port = one_shot_server(encode_register_resp(tampered), server_thread);
    CHECK_THROWS_WITH_AS(client_register("127.0.0.1", port, {}),
                         doctest::Contains("invalid_issued_credential"), Error);
    server_thread.join();
}

TEST_CASE("connection refused surfaces as a transport error") {
    CHECK_THROWS_WITH_AS(client_register("127.0.0.1", 1, {}), doctest::Contains("transport_error"),
                         Error);
}

TEST_CASE("expired credential rejected over the wire") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);
    // signed by the operator, but t_exp is long past the server clock
    TestRng seed_rng(888);
    auto kp = jubjub::keygen(seed_rng.bytes32());
    SystemRng rng;
    Credential cred;
    cred.token = jubjub::sample_token(rng);
    cred.t_exp = Fr::from_u64(1700000000);
    cred.pk_so = kp.pk;
    cred.sig = jubjub::sign(kp, poseidon_hash({cred.token.value, cred.t_exp}));
    auto outcome = client_authenticate("127.0.0.1", server.port(), cred, f.arts.pk, 1750000000, 2);
    CHECK_FALSE(outcome.granted);
    CHECK_EQ(outcome.code, "expired");
    server.stop();
}

TEST_CASE("concurrent clients all granted, cache sized to match") {
    auto& f = WireFixture::get();
    VerifierConfig cfg;
    VerifierState state(f.arts.vk, f.op_key, cfg, open_registration_policy(),
                        [] { return (int64_t)1750000000; });
    Server server(state, f.circuit.fingerprint, nullptr);
    server.start("127.0.0.1", 0);

    // Prove sequentially (CPU-bound), then fire the frames concurrently.
    constexpr int kClients = 50;
    std::vector<std::string> frames;
    SystemRng rng;
    for (int i = 0; i < kClients; ++i) {
        Credential cred = client_register("127.0.0.1", server.port(), {});
        frames.push_back(encode_auth_req(authenticate_prove(cred, 1750000000, f.arts.pk, rng, 2),
                                         f.circuit.fingerprint));
    }
    std::vector<std::thread> clients;
    std::array<AuthOutcome, kClients> outcomes;
    for (int i = 0; i < kClients; ++i) {
        clients.emplace_back([&, i] {
            outcomes[(size_t)i] =
                client_send_auth_frame("127.0.0.1", server.port(), frames[(size_t)i], f.circuit.fingerprint);
        });
    }
    for (auto& t : clients) t.join();
    for (const auto& o : outcomes) CHECK(o.granted);
    CHECK_EQ(state.replay_cache_size(), kClients);
    server.stop();
}

TEST_SUITE_END();
