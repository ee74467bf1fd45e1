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
// Versioned binary formats for setup parameters and proofs. Every blob
// starts with: magic "SANS", format version u16, kind u8, curve id u8,
// circuit fingerprint (32 bytes). Deserialization rejects unknown versions,
// foreign fingerprints and truncated or oversized payloads.

#ifndef SANS_SERIALIZATION_HPP_
#define SANS_SERIALIZATION_HPP_

#include <filesystem>
#include <optional>

#include "sans/groth16.hpp"

namespace sans {

enum class ArtifactKind : uint8_t {
    proving_key = 1,
    verifying_key = 2,
    proof = 3,
};

inline constexpr uint16_t kFormatVersion = 1;
inline constexpr uint8_t kCurveBn254 = 1;

std::vector<uint8_t> serialize_proving_key(const ProvingKey& pk);
std::vector<uint8_t> serialize_verifying_key(const VerifyingKey& vk);
std::vector<uint8_t> serialize_proof(const Proof& proof, const Fingerprint& fp);

// `expected` pins the circuit fingerprint; mismatch throws
// Error(fingerprint_mismatch).
ProvingKey deserialize_proving_key(std::span<const uint8_t> bytes,
                                   const std::optional<Fingerprint>& expected = std::nullopt);
VerifyingKey deserialize_verifying_key(std::span<const uint8_t> bytes,
                                       const std::optional<Fingerprint>& expected = std::nullopt);
// Returns the proof and its fingerprint; group elements are fully validated
// (canonical encodings, on curve, correct subgroup) — anything else throws
// Error(malformed_proof).
std::pair<Proof, Fingerprint> deserialize_proof(std::span<const uint8_t> bytes,
                                                const std::optional<Fingerprint>& expected = std::nullopt);

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);
std::vector<uint8_t> read_file(const std::filesystem::path& path);

}  // namespace sans

#endif  // SANS_SERIALIZATION_HPP_
