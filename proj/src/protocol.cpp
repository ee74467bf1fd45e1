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

#include "sans/protocol.hpp"

#include <algorithm>

#include "sans/errors.hpp"
#include "sans/poseidon.hpp"

namespace sans {

Challenge derive_challenge(int64_t unix_seconds) {
    if (unix_seconds < 0) throw Error(Errc::clock_error, "negative clock");
    return Challenge{(uint64_t)(unix_seconds / kBucketSeconds)};
}

const char* deny_reason_code(DenyReason r) {
    switch (r) {
        case DenyReason::wrong_operator_key: return "wrong_operator_key";
        case DenyReason::stale_challenge: return "stale_challenge";
        case DenyReason::expired: return "expired";
        case DenyReason::zero_output: return "zero_output";
        case DenyReason::invalid_proof: return "invalid_proof";
        case DenyReason::replay_detected: return "replay_detected";
    }
    return "unknown";
}

ReplayCache::InsertResult ReplayCache::check_and_insert(const Fr& out, uint64_t bucket,
                                                        const SessionId& session) {
    auto key = out.to_bytes();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return {false, it->second.session};
    entries_.emplace(key, Entry{bucket, session});
    return {true, {}};
}

size_t ReplayCache::sweep(uint64_t now_bucket, uint64_t horizon) {
    std::lock_guard<std::mutex> lock(mu_);
    size_t evicted = 0;
    for (auto it = entries_.begin(); it != entries_.end();) {
        uint64_t age = now_bucket >= it->second.bucket ? now_bucket - it->second.bucket : 0;
        if (age >= horizon) {
            it = entries_.erase(it);
            ++evicted;
        } else {
            ++it;
        }
    }
    return evicted;
}

size_t ReplayCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

RegistrationPolicy preshared_secret_policy(std::vector<uint8_t> secret) {
    return [secret = std::move(secret)](std::span<const uint8_t> evidence) {
        return evidence.size() == secret.size() &&
               std::equal(evidence.begin(), evidence.end(), secret.begin());
    };
}

RegistrationPolicy open_registration_policy() {
    return [](std::span<const uint8_t>) { return true; };
}

VerifierState::VerifierState(VerifyingKey vk, jubjub::SigningKeypair operator_key,
                             VerifierConfig config, RegistrationPolicy policy,
                             std::function<int64_t()> clock)
    : vk_(std::move(vk)),
      operator_key_(std::move(operator_key)),
      config_(config),
      policy_(std::move(policy)),
      clock_(std::move(clock)) {}

int64_t quantize_expiry(int64_t now, uint64_t validity_seconds) {
    int64_t nominal = now + (int64_t)validity_seconds;
    int64_t quantized = ((nominal + 86399) / 86400) * 86400;
    if (quantized <= now) quantized += 86400;
    return quantized;
}

uint64_t t_exp_seconds(const Credential& cred) {
    U256 v = cred.t_exp.to_u256();
    if (v.v[1] || v.v[2] || v.v[3]) throw Error(Errc::malformed_credential, "t_exp out of range");
    return v.v[0];
}

Credential VerifierState::register_user(std::span<const uint8_t> evidence,
                                        uint64_t validity_seconds, Rng& rng) {
    if (evidence.size() > kMaxEvidenceBytes || !policy_(evidence)) {
        throw Error(Errc::requirements_not_met, "registration evidence rejected");
    }
    int64_t now = clock_();
    if (now < 0) throw Error(Errc::clock_error, "issuer clock is before the epoch");
    if (validity_seconds == 0) validity_seconds = config_.default_validity_seconds;

    // Serialize issuance on the signing key.
    std::lock_guard<std::mutex> lock(mu_);
    Credential cred;
    cred.token = jubjub::sample_token(rng);
    cred.t_exp = Fr::from_u64((uint64_t)quantize_expiry(now, validity_seconds));
    cred.pk_so = operator_key_.pk;
    cred.sig = jubjub::sign(operator_key_, poseidon_hash({cred.token.value, cred.t_exp}));
    return cred;  // nothing about the token is retained here
}

Decision VerifierState::authenticate_verify(const AuthRequest& req, int64_t now) {
    Decision decision;

    // (1) operator key
    if (!(req.pk_so == operator_key_.pk)) {
        decision.reason = DenyReason::wrong_operator_key;
        return decision;
    }
    // (2) challenge freshness
    uint64_t now_bucket = derive_challenge(now).bucket;
    uint64_t distance = req.c_bucket > now_bucket ? req.c_bucket - now_bucket : now_bucket - req.c_bucket;
    if (distance > config_.skew_tolerance_buckets) {
        decision.reason = DenyReason::stale_challenge;
        return decision;
    }
    // (3) expiry, checked natively against the public input
    if ((uint64_t)now >= req.t_exp) {
        decision.reason = DenyReason::expired;
        return decision;
    }
    // (4) a zero output means the signature bit was 0
    if (req.out.is_zero()) {
        decision.reason = DenyReason::zero_output;
        return decision;
    }
    // (5) the pairing check
    {
        std::lock_guard<std::mutex> lock(mu_);
        stats_.proof_checks++;
    }
    if (!groth16_verify(vk_, req.public_inputs(), req.proof)) {
        decision.reason = DenyReason::invalid_proof;
        return decision;
    }
    // (6) replay: atomic check-and-insert keyed by the output hash
    SessionId session;
    {
        std::lock_guard<std::mutex> lock(mu_);
        session_rng_.fill(session);
    }
    auto result = cache_.check_and_insert(req.out, req.c_bucket, session);
    if (!result.inserted) {
        std::lock_guard<std::mutex> lock(mu_);
        stats_.replays_detected++;
        decision.reason = DenyReason::replay_detected;
        if (config_.terminate_active_on_replay && active_sessions_.erase(result.existing) > 0) {
            decision.terminated_session = result.existing;
        }
        return decision;
    }

    std::lock_guard<std::mutex> lock(mu_);
    stats_.grants++;
    active_sessions_.insert(session);
    decision.granted = true;
    decision.session_id = session;
    return decision;
}

size_t VerifierState::sweep_cache(int64_t now) {
    uint64_t now_bucket = derive_challenge(now).bucket;
    return cache_.sweep(now_bucket, config_.skew_tolerance_buckets + 1);
}

bool VerifierState::is_session_active(const SessionId& id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return active_sessions_.count(id) > 0;
}

VerifierState::Stats VerifierState::stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
}

AuthRequest authenticate_prove(const Credential& cred, int64_t now, const ProvingKey& pk,
                               Rng& rng, int threads) {
    Challenge c = derive_challenge(now);
    WitnessAssignment w = assign_witness(cred, c.value());
    const AuthCircuit& circuit = auth_circuit();
    Proof proof;
    try {
        proof = groth16_prove(pk, circuit.cs, w.values, rng, threads);
    } catch (const Error& e) {
        if (e.code() == Errc::fingerprint_mismatch) throw;
        throw Error(Errc::proving_failure, e.what());
    }
    return AuthRequest{proof, c.bucket, cred.pk_so, t_exp_seconds(cred), w.out()};
}

}  // namespace sans
