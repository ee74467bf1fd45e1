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

#ifndef SANS_CREDENTIAL_HPP_
#define SANS_CREDENTIAL_HPP_

#include <optional>
#include <vector>

#include "sans/jubjub.hpp"

namespace sans {

// The user's secret authentication material, issued by the operator and held
// only by the user: token, expiry, operator signature over
// poseidon2(token, t_exp), and the operator public key.
struct Credential {
    jubjub::Token token;
    Fr t_exp = Fr::zero();
    jubjub::Signature sig;
    jubjub::Point pk_so;

    bool operator==(const Credential&) const = default;

    // The signed message.
    Fr message() const;

    // Structural validity: points on curve, in the prime-order subgroup.
    bool well_formed() const;

    // Full issuance invariant: well-formed and the signature verifies.
    bool verify_issuance() const;
};

// Binary credential file: magic "SANSCRED", version u16 LE, then
// token(32) | t_exp(32) | signature(96) | pk(64).
std::vector<uint8_t> encode_credential(const Credential& c);
// Throws Error(bad_magic / unsupported_version / truncated_data /
// malformed_credential).
Credential decode_credential(std::span<const uint8_t> bytes);

}  // namespace sans

#endif  // SANS_CREDENTIAL_HPP_
