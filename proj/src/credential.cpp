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

#include "sans/credential.hpp"

#include <cstring>

#include "sans/errors.hpp"
#include "sans/poseidon.hpp"

namespace sans {

namespace {
constexpr char kMagic[8] = {'S', 'A', 'N', 'S', 'C', 'R', 'E', 'D'};
constexpr uint16_t kVersion = 1;
}  // namespace

Fr Credential::message() const { return poseidon_hash({token.value, t_exp}); }

bool Credential::well_formed() const {
    return jubjub::in_subgroup(pk_so) && !pk_so.is_identity() && jubjub::in_subgroup(sig.r);
}

bool Credential::verify_issuance() const {
    if (!well_formed()) return false;
    return jubjub::verify(pk_so, message(), sig);
}

std::vector<uint8_t> encode_credential(const Credential& c) {
    std::vector<uint8_t> out;
    out.reserve(8 + 2 + 32 + 32 + 96 + 64);
    out.insert(out.end(), kMagic, kMagic + 8);
    out.push_back((uint8_t)(kVersion & 0xff));
    out.push_back((uint8_t)(kVersion >> 8));
    auto push = [&out](std::span<const uint8_t> b) { out.insert(out.end(), b.begin(), b.end()); };
    push(c.token.value.to_bytes());
    push(c.t_exp.to_bytes());
    push(jubjub::encode_signature(c.sig));
    push(jubjub::encode_point(c.pk_so));
    return out;
}

Credential decode_credential(std::span<const uint8_t> bytes) {
    if (bytes.size() < 10) throw Error(Errc::truncated_data, "credential shorter than header");
    if (std::memcmp(bytes.data(), kMagic, 8) != 0) throw Error(Errc::bad_magic, "not a credential file");
    uint16_t version = (uint16_t)(bytes[8] | (bytes[9] << 8));
    if (version != kVersion) throw Error(Errc::unsupported_version, "credential version " + std::to_string(version));
    if (bytes.size() != 10 + 32 + 32 + 96 + 64) throw Error(Errc::truncated_data, "credential payload size");
    auto body = bytes.subspan(10);
    auto token = Fr::from_bytes(body.subspan(0, 32));
    auto t_exp = Fr::from_bytes(body.subspan(32, 32));
    auto sig = jubjub::decode_signature(body.subspan(64, 96));
    auto pk = jubjub::decode_point(body.subspan(160, 64));
    if (!token || !t_exp || !sig || !pk) throw Error(Errc::malformed_credential, "non-canonical field");
    Credential c{jubjub::Token{*token}, *t_exp, *sig, *pk};
    if (!c.well_formed()) throw Error(Errc::malformed_credential, "point not in the prime-order subgroup");
    return c;
}

}  // namespace sans
