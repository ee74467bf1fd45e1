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

#include <set>
#include <thread>

#include "sans/errors.hpp"
#include "sans/protocol.hpp"
#include "test_util.hpp"

using namespace sans;

namespace {

struct MockClock {
    int64_t now = 1750000000;
    std::function<int64_t()> fn() {
        return [this] { return now; };
    }
};

struct ProtoFixture {
    const AuthCircuit& circuit = auth_circuit();
    ProvingArtifacts arts;
    jubjub::SigningKeypair op_key;
    SystemRng rng;

    ProtoFixture() {
        arts = groth16_setup(circuit.cs, rng, 2);
        TestRng seed_rng(777);
        op_key = jubjub::keygen(seed_rng.bytes32());
    }

    static ProtoFixture& get() {
        static ProtoFixture f;
        return f;
    }

    VerifierState make_state(MockClock& clock, VerifierConfig cfg = {},
                             RegistrationPolicy policy = open_registration_policy()) {
        return VerifierState(arts.vk, op_key, cfg, std::move(policy), clock.fn());
    }
};

}  // namespace

TEST_SUITE_BEGIN("protocol");

TEST_CASE("challenge derivation vectors") {
    auto vec = test::load_vectors("challenge_vectors.json");
    for (const auto& c : vec["cases"]) {
        CHECK_EQ(derive_challenge(c["unix_seconds"].get<int64_t>()).bucket, c["bucket"].get<uint64_t>());
    }
    CHECK_THROWS_AS(derive_challenge(-1), Error);
    // bucket boundary
    CHECK_EQ(derive_challenge(59).bucket, 0);
    CHECK_EQ(derive_challenge(60).bucket, 1);
}

TEST_CASE("expiry quantization lands on a future UTC midnight") {
    // 2025-06-15 13:00:00 UTC
    int64_t now = 1750000000 - 24896;  // arbitrary mid-day moment
    int64_t q = quantize_expiry(now, 3600);
    CHECK_EQ(q % 86400, 0);
    CHECK_GT(q, now + 3600 - 86400);
    CHECK_GE(q, now + 3600);

    // exactly-midnight nominal expiry stays put
    int64_t midnight = (now / 86400 + 2) * 86400;
    CHECK_EQ(quantize_expiry(midnight - 86400, 86400), midnight);
    // zero validity still strictly in the future
    CHECK_GT(quantize_expiry(midnight, 0), midnight);
}

TEST_CASE("registration issues a self-verifying credential") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 7, rng);
    CHECK(cred.verify_issuance());
    CHECK_GT((int64_t)t_exp_seconds(cred), clock.now);
    CHECK_EQ(t_exp_seconds(cred) % 86400, 0);
    CHECK_EQ(cred.pk_so, state.operator_pk());
}

TEST_CASE("rejected evidence never samples a token") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock, {}, preshared_secret_policy({1, 2, 3}));
    class CountingRng : public Rng {
      public:
        int calls = 0;
        void fill(std::span<uint8_t> out) override {
            ++calls;
            std::fill(out.begin(), out.end(), 7);
        }
    } rng;
    std::vector<uint8_t> wrong{9, 9, 9};
    CHECK_THROWS_WITH_AS(state.register_user(wrong, 3600, rng),
                         doctest::Contains("requirements_not_met"), Error);
    CHECK_EQ(rng.calls, 0);

    std::vector<uint8_t> right{1, 2, 3};
    Credential cred = state.register_user(right, 3600, rng);
    CHECK(cred.verify_issuance());

    // oversized evidence is rejected before the policy sees it
    std::vector<uint8_t> huge(kMaxEvidenceBytes + 1, 0);
    auto open_state = f.make_state(clock);
    CHECK_THROWS_AS(open_state.register_user(huge, 3600, rng), Error);
}

TEST_CASE("issued tokens are unique across many registrations") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    std::set<std::array<uint8_t, 32>> tokens;
    for (int i = 0; i < 1000; ++i) {
        Credential cred = state.register_user({}, 3600, rng);
        tokens.insert(cred.token.value.to_bytes());
    }
    CHECK_EQ(tokens.size(), 1000);
}

TEST_CASE("honest authentication grants within the bucket") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);
    Decision d = state.authenticate_verify(req, clock.now);
    CHECK(d.granted);
    CHECK(state.is_session_active(d.session_id));
    CHECK_EQ(state.replay_cache_size(), 1);
}

TEST_CASE("decision ordering: cheap rejections never touch the pairing") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);

    // wrong operator key, checked first
    auto wrong_key = req;
    TestRng seed_rng(4242);
    wrong_key.pk_so = jubjub::keygen(seed_rng.bytes32()).pk;
    Decision d1 = state.authenticate_verify(wrong_key, clock.now);
    CHECK_EQ(*d1.reason, DenyReason::wrong_operator_key);

    // stale challenge (10 buckets old)
    Decision d2 = state.authenticate_verify(req, clock.now + 600);
    CHECK_EQ(*d2.reason, DenyReason::stale_challenge);

    // expired credential: move now past t_exp but keep the challenge fresh
    auto expired = req;
    expired.t_exp = (uint64_t)clock.now - 100;
    Decision d3 = state.authenticate_verify(expired, clock.now);
    CHECK_EQ(*d3.reason, DenyReason::expired);

    // zero output
    auto zero_out = req;
    zero_out.out = Fr::zero();
    Decision d4 = state.authenticate_verify(zero_out, clock.now);
    CHECK_EQ(*d4.reason, DenyReason::zero_output);

    // none of the above reached the proof check
    CHECK_EQ(state.stats().proof_checks, 0);

    // a garbled proof does reach it and is rejected there
    auto bad_proof = req;
    bad_proof.out += Fr::one();
    Decision d5 = state.authenticate_verify(bad_proof, clock.now);
    CHECK_EQ(*d5.reason, DenyReason::invalid_proof);
    CHECK_EQ(state.stats().proof_checks, 1);
}

TEST_CASE("replay rejects the second presentation and kills the first session") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);

    Decision first = state.authenticate_verify(req, clock.now);
    REQUIRE(first.granted);
    REQUIRE(state.is_session_active(first.session_id));

    Decision second = state.authenticate_verify(req, clock.now);
    CHECK_FALSE(second.granted);
    CHECK_EQ(*second.reason, DenyReason::replay_detected);
    REQUIRE(second.terminated_session.has_value());
    CHECK_EQ(*second.terminated_session, first.session_id);
    CHECK_FALSE(state.is_session_active(first.session_id));
    CHECK_EQ(state.stats().replays_detected, 1);
}

TEST_CASE("reject-incoming-only replay policy keeps the first session") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    VerifierConfig cfg;
    cfg.terminate_active_on_replay = false;
    auto state = f.make_state(clock, cfg);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);

    Decision first = state.authenticate_verify(req, clock.now);
    REQUIRE(first.granted);
    Decision second = state.authenticate_verify(req, clock.now);
    CHECK_FALSE(second.granted);
    CHECK_FALSE(second.terminated_session.has_value());
    CHECK(state.is_session_active(first.session_id));
}

TEST_CASE("same credential in different buckets yields distinct grants") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);

    AuthRequest r1 = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);
    Decision d1 = state.authenticate_verify(r1, clock.now);
    clock.now += kBucketSeconds;
    AuthRequest r2 = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);
    Decision d2 = state.authenticate_verify(r2, clock.now);
    CHECK(d1.granted);
    CHECK(d2.granted);
    CHECK_NE(r1.out, r2.out);
}

TEST_CASE("completeness under clock skew") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);

    // a request minted at bucket k verifies at verifier clocks in [k-1, k+1]
    int64_t base = clock.now - (clock.now % kBucketSeconds);
    for (int64_t offset : {-kBucketSeconds, int64_t(0), kBucketSeconds}) {
        AuthRequest req = authenticate_prove(cred, base, f.arts.pk, rng, 2);
        Decision d = state.authenticate_verify(req, base + offset);
        CHECK_MESSAGE(d.granted, "offset ", offset);
        state.sweep_cache(base + 10 * kBucketSeconds);  // clear between trials
    }
    // two buckets away fails
    AuthRequest req = authenticate_prove(cred, base, f.arts.pk, rng, 2);
    Decision d = state.authenticate_verify(req, base + 2 * kBucketSeconds);
    CHECK_EQ(*d.reason, DenyReason::stale_challenge);
}

TEST_CASE("expired credential: prover does not self-censor, verifier rejects") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 3600, rng);  // expires tomorrow midnight
    int64_t later = (int64_t)t_exp_seconds(cred) + 5;

    AuthRequest req = authenticate_prove(cred, later, f.arts.pk, rng, 2);  // no self-censorship
    Decision d = state.authenticate_verify(req, later);
    CHECK_FALSE(d.granted);
    CHECK_EQ(*d.reason, DenyReason::expired);
}

TEST_CASE("sweep evicts exactly at the horizon") {
    ReplayCache cache;
    SessionId s{};
    cache.check_and_insert(Fr::from_u64(111), 100, s);
    cache.check_and_insert(Fr::from_u64(222), 101, s);
    CHECK_EQ(cache.size(), 2);

    // horizon = skew + 1 = 2: age-2 entry evicted, age-1 retained
    CHECK_EQ(cache.sweep(102, 2), 1);
    CHECK_EQ(cache.size(), 1);
    // idempotent
    CHECK_EQ(cache.sweep(102, 2), 0);
    CHECK_EQ(cache.size(), 1);
    // empty cache sweeps to zero
    CHECK_EQ(cache.sweep(200, 2), 1);
    CHECK_EQ(cache.sweep(200, 2), 0);
}

TEST_CASE("after a sweep, a stale replay still fails via the challenge check") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);
    REQUIRE(state.authenticate_verify(req, clock.now).granted);

    clock.now += 10 * kBucketSeconds;
    CHECK_EQ(state.sweep_cache(clock.now), 1);
    CHECK_EQ(state.replay_cache_size(), 0);

    Decision d = state.authenticate_verify(req, clock.now);
    CHECK_FALSE(d.granted);
    CHECK_EQ(*d.reason, DenyReason::stale_challenge);
}

TEST_CASE("simultaneous presentations of one output: exactly one grant") {
    auto& f = ProtoFixture::get();
    MockClock clock;
    auto state = f.make_state(clock);
    SystemRng rng;
    Credential cred = state.register_user({}, 86400 * 30, rng);
    AuthRequest req = authenticate_prove(cred, clock.now, f.arts.pk, rng, 2);

    constexpr int kThreads = 8;
    std::array<Decision, kThreads> decisions;
    std::vector<std::thread> threads;
    for (int i = 0; i < kThreads; ++i) {
        threads.emplace_back([&, i] { decisions[(size_t)i] = state.authenticate_verify(req, clock.now); });
    }
    for (auto& t : threads) t.join();
    int grants = 0;
    for (const auto& d : decisions) grants += d.granted ? 1 : 0;
    CHECK_EQ(grants, 1);
    CHECK_EQ(state.stats().grants, 1);
}

TEST_CASE("credential file roundtrip and rejection paths") {
    Credential cred = test::make_credential(30);
    auto bytes = encode_credential(cred);
    Credential back = decode_credential(bytes);
    CHECK(back == cred);

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_WITH_AS(decode_credential(bad_magic), doctest::Contains("bad_magic"), Error);

    auto truncated = bytes;
    truncated.resize(bytes.size() / 2);
    CHECK_THROWS_AS(decode_credential(truncated), Error);

    auto bad_version = bytes;
    bad_version[8] = 9;
    CHECK_THROWS_WITH_AS(decode_credential(bad_version), doctest::Contains("unsupported_version"), Error);
}

TEST_SUITE_END();
