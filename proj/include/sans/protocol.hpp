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
// The two SANS protocols. Service registration: the operator validates the
// requirement evidence, samples a fresh token, and returns a signed expiring
// credential that only the user retains. Session authentication: the user
// proves possession of a validly signed credential in zero knowledge, bound
// to a per-minute challenge bucket; the verifier checks operator key,
// challenge freshness, expiry, nonzero output, the proof itself, and replays
// — cheap checks first.

#ifndef SANS_PROTOCOL_HPP_
#define SANS_PROTOCOL_HPP_

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "sans/auth_circuit.hpp"
#include "sans/credential.hpp"
#include "sans/groth16.hpp"

namespace sans {

// Per-minute challenge bucket. Bucket indices stay far below 2^40 for any
// realistic clock, so the field embedding is trivially canonical.
struct Challenge {
    uint64_t bucket = 0;

    Fr value() const { return Fr::from_u64(bucket); }
    bool operator==(const Challenge&) const = default;
};

inline constexpr int64_t kBucketSeconds = 60;

// floor(unix_seconds / 60); throws Error(clock_error) for negative input.
Challenge derive_challenge(int64_t unix_seconds);

// Proof plus the ordered public inputs, as sent on the wire.
struct AuthRequest {
    Proof proof;
    uint64_t c_bucket = 0;
    jubjub::Point pk_so;
    uint64_t t_exp = 0;  // unix seconds
    Fr out = Fr::zero();

    std::array<Fr, AuthCircuit::kNumPublicInputs> public_inputs() const {
        return make_public_inputs(Fr::from_u64(c_bucket), pk_so, Fr::from_u64(t_exp), out);
    }
};

using SessionId = std::array<uint8_t, 16>;

enum class DenyReason {
    wrong_operator_key,
    stale_challenge,
    expired,
    zero_output,
    invalid_proof,
    replay_detected,
};

const char* deny_reason_code(DenyReason r);

struct Decision {
    bool granted = false;
    SessionId session_id{};
    std::optional<DenyReason> reason;
    // Set when a replay terminated the colliding active session.
    std::optional<SessionId> terminated_session;
};

// Time-windowed set of seen outputs; one atomic check-and-insert per
// authentication attempt.
class ReplayCache {
  public:
    struct InsertResult {
        bool inserted = false;
        SessionId existing{};  // valid when !inserted
    };

    InsertResult check_and_insert(const Fr& out, uint64_t bucket, const SessionId& session);
    // Evicts entries with now_bucket - bucket >= horizon; idempotent.
    size_t sweep(uint64_t now_bucket, uint64_t horizon);
    size_t size() const;

  private:
    struct Entry {
        uint64_t bucket;
        SessionId session;
    };
    mutable std::mutex mu_;
    std::map<std::array<uint8_t, 32>, Entry> entries_;
};

// Decides whether presented registration evidence meets the service
// requirements. The evidence itself is opaque to the protocol.
using RegistrationPolicy = std::function<bool(std::span<const uint8_t>)>;

RegistrationPolicy preshared_secret_policy(std::vector<uint8_t> secret);
RegistrationPolicy open_registration_policy();

inline constexpr size_t kMaxEvidenceBytes = 64 * 1024;

struct VerifierConfig {
    uint64_t skew_tolerance_buckets = 1;
    uint64_t default_validity_seconds = 30 * 86400;
    bool terminate_active_on_replay = true;
};

// The slice operator's verifier. Holds no per-user state beyond the windowed
// output cache and active session ids: issued tokens and signatures are
// never retained.
class VerifierState {
  public:
    VerifierState(VerifyingKey vk, jubjub::SigningKeypair operator_key, VerifierConfig config,
                  RegistrationPolicy policy, std::function<int64_t()> clock);

    // Service registration: validates evidence, issues a fresh signed
    // credential with t_exp on the next UTC midnight at or after
    // now + validity. Throws Error(requirements_not_met) or
    // Error(clock_error). validity_seconds == 0 uses the configured default.
    Credential register_user(std::span<const uint8_t> evidence, uint64_t validity_seconds, Rng& rng);

    // Session authentication, checks in order: operator key, challenge
    // freshness, expiry, nonzero output, proof, replay.
    Decision authenticate_verify(const AuthRequest& req, int64_t now);

    // Evicts replay entries older than skew_tolerance + 1 buckets.
    size_t sweep_cache(int64_t now);

    bool is_session_active(const SessionId& id) const;
    const jubjub::Point& operator_pk() const { return operator_key_.pk; }
    const VerifyingKey& verifying_key() const { return vk_; }
    const VerifierConfig& config() const { return config_; }
    int64_t now() const { return clock_(); }
    size_t replay_cache_size() const { return cache_.size(); }

    struct Stats {
        uint64_t proof_checks = 0;
        uint64_t grants = 0;
        uint64_t replays_detected = 0;
    };
    Stats stats() const;

  private:
    VerifyingKey vk_;
    jubjub::SigningKeypair operator_key_;
    VerifierConfig config_;
    RegistrationPolicy policy_;
    std::function<int64_t()> clock_;
    ReplayCache cache_;

    mutable std::mutex mu_;
    std::set<SessionId> active_sessions_;
    Stats stats_;
    SystemRng session_rng_;
};

// Prover side: derives the challenge from the local clock, assigns the
// witness and proves. The token and signature never leave this call.
AuthRequest authenticate_prove(const Credential& cred, int64_t now, const ProvingKey& pk,
                               Rng& rng, int threads = 1);

// Next UTC midnight at or after now + validity (strictly after now).
int64_t quantize_expiry(int64_t now, uint64_t validity_seconds);

// t_exp as u64 seconds; well-formed credentials always fit.
uint64_t t_exp_seconds(const Credential& cred);

}  // namespace sans

#endif  // SANS_PROTOCOL_HPP_
